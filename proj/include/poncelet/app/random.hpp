#ifndef PONCELET_APP_RANDOM_HPP
#define PONCELET_APP_RANDOM_HPP

#include <cstdint>
#include <random>

namespace poncelet::app {

/// Seeded source for configuration generation. The engine is mt19937_64 and
/// doubles are built from the top 53 bits, so a seed yields the same stream
/// on every platform (std::uniform_real_distribution does not promise that).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [0, 1).
  double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * unit(); }

  double sign() { return (engine_() >> 63) != 0 ? -1.0 : 1.0; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace poncelet::app

#endif  // PONCELET_APP_RANDOM_HPP
