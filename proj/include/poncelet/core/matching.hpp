#ifndef PONCELET_CORE_MATCHING_HPP
#define PONCELET_CORE_MATCHING_HPP

#include <cmath>
#include <cstddef>
#include <limits>
#include <span>
#include <vector>

#include "poncelet/core/scalar.hpp"

namespace poncelet {

/// Minimum-cost perfect assignment (Hungarian method, O(n^3)) on a square
/// cost matrix given row-major. Returns assignment[row] = column.
inline std::vector<std::size_t> optimal_assignment(const std::vector<double>& cost, std::size_t n) {
  const double inf = std::numeric_limits<double>::infinity();
  // 1-based potentials as in the classic formulation
  std::vector<double> u(n + 1, 0.0), v(n + 1, 0.0);
  std::vector<std::size_t> p(n + 1, 0), way(n + 1, 0);
  for (std::size_t i = 1; i <= n; ++i) {
    p[0] = i;
    std::size_t j0 = 0;
    std::vector<double> minv(n + 1, inf);
    std::vector<bool> used(n + 1, false);
    do {
      used[j0] = true;
      const std::size_t i0 = p[j0];
      double delta = inf;
      std::size_t j1 = 0;
      for (std::size_t j = 1; j <= n; ++j) {
        if (used[j]) continue;
        const double cur = cost[(i0 - 1) * n + (j - 1)] - u[i0] - v[j];
        if (cur < minv[j]) {
          minv[j] = cur;
          way[j] = j0;
        }
        if (minv[j] < delta) {
          delta = minv[j];
          j1 = j;
        }
      }
      for (std::size_t j = 0; j <= n; ++j) {
        if (used[j]) {
          u[p[j]] += delta;
          v[j] -= delta;
        } else {
          minv[j] -= delta;
        }
      }
      j0 = j1;
    } while (p[j0] != 0);
    do {
      const std::size_t j1 = way[j0];
      p[j0] = p[j1];
      j0 = j1;
    } while (j0 != 0);
  }
  std::vector<std::size_t> assignment(n, 0);
  for (std::size_t j = 1; j <= n; ++j) {
    if (p[j] != 0) assignment[p[j] - 1] = j - 1;
  }
  return assignment;
}

/// Chordal distance on P^1: |a - b| / (sqrt(1 + |a|^2) sqrt(1 + |b|^2)).
/// Agrees with |a - b| to first order near the origin and stays bounded
/// near infinity, where affine parameters lose absolute precision.
inline double chordal_distance(Scalar a, Scalar b) noexcept {
  return std::abs(a - b) / (std::sqrt(1.0 + std::norm(a)) * std::sqrt(1.0 + std::norm(b)));
}

/// Largest pair distance under the optimal assignment between two
/// equally sized parameter lists; +inf when the sizes differ.
template <typename Metric>
double matched_distance(std::span<const Scalar> a, std::span<const Scalar> b, Metric metric) {
  if (a.size() != b.size()) return std::numeric_limits<double>::infinity();
  const std::size_t n = a.size();
  if (n == 0) return 0.0;
  std::vector<double> cost(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) cost[i * n + j] = metric(a[i], b[j]);
  }
  const auto assignment = optimal_assignment(cost, n);
  double worst = 0.0;
  for (std::size_t i = 0; i < n; ++i) worst = std::max(worst, cost[i * n + assignment[i]]);
  return worst;
}

/// matched_distance under the absolute distance |a - b|.
inline double matched_distance(std::span<const Scalar> a, std::span<const Scalar> b) {
  return matched_distance(a, b, [](Scalar x, Scalar y) { return std::abs(x - y); });
}

}  // namespace poncelet

#endif  // PONCELET_CORE_MATCHING_HPP
