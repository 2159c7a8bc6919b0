#ifndef PONCELET_LATERAL_SYM2_HPP
#define PONCELET_LATERAL_SYM2_HPP

#include <cmath>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "poncelet/core/homogeneous.hpp"
#include "poncelet/lateral/forms.hpp"

// Chart of Sym^2(P^1) = P^2: the point [x0, x1, x2] is the unordered root
// pair of x0 t^2 - x1 t + x2, so {u, v} -> [1, u + v, uv] and the diagonal
// is the conic x1^2 - 4 x0 x2.

namespace poncelet {

inline HomogeneousVector pair_to_point(Scalar u, Scalar v) {
  return HomogeneousVector::point(Eigen::Vector3cd(Scalar(1.0), u + v, u * v), 0.0);
}

/// Unnormalized chart representative [1, u + v, uv].
inline Eigen::Vector3cd pair_coords(Scalar u, Scalar v) noexcept {
  return Eigen::Vector3cd(Scalar(1.0), u + v, u * v);
}

inline std::pair<Scalar, Scalar> point_to_pair(const HomogeneousVector& p, const Tolerance& tol = {}) {
  if (p.size() != 3) throw Error(ErrorCode::DimensionMismatch, "Sym^2 chart lives in P^2");
  if (std::abs(p[0]) <= tol.rel_eps * p.coords().cwiseAbs().maxCoeff()) {
    throw Error(ErrorCode::ChartFailure, "point lies on the line x0 = 0 (a parameter at infinity)");
  }
  const Scalar sum = p[1] / p[0];
  const Scalar prod = p[2] / p[0];
  const Scalar disc = std::sqrt(sum * sum - 4.0 * prod);
  // pick the larger root first to avoid cancellation, recover the other from the product
  Scalar u = (std::abs(sum + disc) >= std::abs(sum - disc) ? sum + disc : sum - disc) / 2.0;
  Scalar v = u != Scalar(0.0) ? prod / u : sum - u;
  if (u.real() > v.real() || (u.real() == v.real() && u.imag() > v.imag())) std::swap(u, v);
  return {u, v};
}

/// The diagonal conic x1^2 - 4 x0 x2.
inline TernaryForm diagonal_conic() {
  // order: x0^2, x0x1, x0x2, x1^2, x1x2, x2^2
  return TernaryForm(2, {0.0, 0.0, -4.0, 1.0, 0.0, 0.0});
}

/// Tangent to the diagonal conic at the diagonal point of u: the line
/// u^2 x0 - u x1 + x2 = 0, which is { pair_to_point(u, v) : v free }.
inline HomogeneousVector tangent_line(Scalar u) {
  return HomogeneousVector::hyperplane(Eigen::Vector3cd(u * u, -u, Scalar(1.0)), 0.0);
}

/// Division remainder of T by the diagonal conic; T contains it iff the
/// remainder vanishes.
inline std::vector<Scalar> diagonal_remainder(const TernaryForm& t) {
  const int n = t.degree();
  // dense (i, j, k) table, reduce x1^2 -> 4 x0 x2 from the top x1 power down
  std::vector<Scalar> table(static_cast<std::size_t>((n + 1) * (n + 1) * (n + 1)), Scalar(0.0));
  auto at = [n, &table](int i, int j, int k) -> Scalar& {
    return table[static_cast<std::size_t>((i * (n + 1) + j) * (n + 1) + k)];
  };
  const auto mons = TernaryForm::monomials(n);
  for (std::size_t m = 0; m < mons.size(); ++m) at(mons[m][0], mons[m][1], mons[m][2]) = t.coeffs()[m];
  for (int j = n; j >= 2; --j) {
    for (int i = 0; i + j <= n; ++i) {
      const int k = n - i - j;
      const Scalar c = at(i, j, k);
      if (c == Scalar(0.0)) continue;
      at(i, j, k) = 0.0;
      at(i + 1, j - 2, k + 1) += 4.0 * c;
    }
  }
  std::vector<Scalar> rem;
  for (int i = 0; i <= n; ++i) {
    for (int j = 0; j <= 1 && i + j <= n; ++j) rem.push_back(at(i, j, n - i - j));
  }
  return rem;
}

inline bool contains_diagonal(const TernaryForm& t, const Tolerance& tol = {}) {
  const auto rem = diagonal_remainder(t);
  return max_modulus(rem) <= tol.rel_eps * t.max_coeff();
}

}  // namespace poncelet

#endif  // PONCELET_LATERAL_SYM2_HPP
