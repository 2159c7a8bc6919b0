#ifndef PONCELET_APP_GENERATE_HPP
#define PONCELET_APP_GENERATE_HPP

#include <vector>

#include "poncelet/app/random.hpp"
#include "poncelet/app/run_config.hpp"
#include "poncelet/lateral/correspondence.hpp"
#include "poncelet/pyramid/canonical.hpp"

namespace poncelet::app {

/// Minimum gap between generated parameters in [-2, 2].
inline double min_generated_gap(int n) noexcept { return 0.5 / (n + 1); }

/// n + 1 reals in [-2, 2], pairwise at least min_generated_gap(n) apart.
inline std::vector<Scalar> distinct_reals(Rng& rng, int n) {
  for (;;) {
    std::vector<Scalar> v;
    for (int i = 0; i <= n; ++i) v.emplace_back(rng.uniform(-2.0, 2.0));
    if (min_separation(v) >= min_generated_gap(n)) return v;
  }
}

/// a_i distinct in [-2, 2]; A_i, B_i of modulus in [0.5, 2] with random signs.
inline CanonicalConfig random_canonical_config(Rng& rng, int n, const Tolerance& tol = {}) {
  std::vector<Scalar> a = distinct_reals(rng, n);
  std::vector<Scalar> A, B;
  for (int i = 0; i <= n; ++i) {
    const double mag = rng.uniform(0.5, 2.0);
    A.emplace_back(rng.sign() * mag);
  }
  for (int i = 0; i <= n; ++i) {
    const double mag = rng.uniform(0.5, 2.0);
    B.emplace_back(rng.sign() * mag);
  }
  return CanonicalConfig::make(std::move(a), std::move(A), std::move(B), tol);
}

/// Everything a lateral run derives from its seed.
struct LateralSetup {
  Multilateral lateral;
  BinaryForm second_form;            // G, degree n + 1
  std::vector<Scalar> combination;   // weights on the interpolation kernel
  InterpolationSystem system;
  TernaryForm nullspace_curve;
  TernaryForm pencil_curve;          // Bezoutiant curve of (F, G)

  const TernaryForm& curve(CurveSource source) const {
    return source == CurveSource::Nullspace ? nullspace_curve : pencil_curve;
  }
};

inline LateralSetup make_lateral_setup(Multilateral lateral, BinaryForm g, std::vector<Scalar> combination,
                                       const Tolerance& tol = {}) {
  InterpolationSystem sys = interpolation_system(lateral, tol);
  TernaryForm nullspace_curve = sys.curve(combination);
  TernaryForm pencil_curve = to_plane_curve(bezoutiant(pencil_from_multilateral(lateral, g, tol), tol), tol);
  return LateralSetup{std::move(lateral), std::move(g), std::move(combination), std::move(sys),
                      std::move(nullspace_curve), std::move(pencil_curve)};
}

/// Real lateral with params distinct in [-2, 2], a real G of degree n + 1
/// with coefficients in [-1, 1] not vanishing at any param, and real kernel
/// weights in [-1, 1].
inline LateralSetup random_lateral_setup(Rng& rng, int n, const Tolerance& tol = {}) {
  Multilateral lateral = Multilateral::make(distinct_reals(rng, n), tol);
  for (;;) {
    std::vector<Scalar> g;
    for (int j = 0; j <= n + 1; ++j) g.emplace_back(rng.uniform(-1.0, 1.0));
    std::vector<Scalar> combination;
    for (int m = 0; m <= n; ++m) combination.emplace_back(rng.uniform(-1.0, 1.0));
    try {
      return make_lateral_setup(lateral, BinaryForm(n + 1, std::move(g)), std::move(combination), tol);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::BadSecondForm && e.code() != ErrorCode::DependentPencil) throw;
    }
  }
}

/// The classical n = 2 example: sides at 0, 1, -1, pencil (t^3 - t, 1).
/// Both curves are x1^2 - x0 x2 - x0^2 up to scale; the pencil one is exact.
inline LateralSetup demo_lateral_setup(const Tolerance& tol = {}) {
  return make_lateral_setup(Multilateral::make({0.0, 1.0, -1.0}, tol), BinaryForm(3, {1.0}),
                            {1.0, 0.0, 0.0}, tol);
}

}  // namespace poncelet::app

#endif  // PONCELET_APP_GENERATE_HPP
