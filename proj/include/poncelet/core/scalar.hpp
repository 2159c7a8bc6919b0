#ifndef PONCELET_CORE_SCALAR_HPP
#define PONCELET_CORE_SCALAR_HPP

#include <cmath>
#include <complex>
#include <span>
#include <string>

#include "poncelet/core/error.hpp"

namespace poncelet {

using Scalar = std::complex<double>;

/// Numerical thresholds shared by every verification routine.
struct Tolerance {
  double rel_eps = 1e-9;       // residual / coefficient-relative threshold
  double rank_eps = 1e-10;     // singular value cut, relative to the largest
  double root_sep_eps = 1e-7;  // minimum separation of distinct parameters

  void validate() const {
    if (!(rel_eps > 0.0) || !(rank_eps > 0.0) || !(root_sep_eps > 0.0)) {
      throw Error(ErrorCode::InvalidConfig, "tolerances must be positive");
    }
  }
};

inline bool is_finite(Scalar z) noexcept {
  return std::isfinite(z.real()) && std::isfinite(z.imag());
}

inline double max_modulus(std::span<const Scalar> values) noexcept {
  double m = 0.0;
  for (const Scalar& v : values) m = std::max(m, std::abs(v));
  return m;
}

/// z^e by repeated multiplication (exact for small integer powers, 0^0 = 1).
inline Scalar ipow(Scalar z, int e) noexcept {
  Scalar r(1.0);
  for (int i = 0; i < e; ++i) r *= z;
  return r;
}

/// Smallest pairwise distance; +inf for fewer than two values.
inline double min_separation(std::span<const Scalar> values) noexcept {
  double best = HUGE_VAL;
  for (std::size_t i = 0; i < values.size(); ++i) {
    for (std::size_t j = i + 1; j < values.size(); ++j) {
      best = std::min(best, std::abs(values[i] - values[j]));
    }
  }
  return best;
}

}  // namespace poncelet

#endif  // PONCELET_CORE_SCALAR_HPP
