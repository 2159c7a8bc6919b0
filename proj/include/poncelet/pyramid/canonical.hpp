#ifndef PONCELET_PYRAMID_CANONICAL_HPP
#define PONCELET_PYRAMID_CANONICAL_HPP

#include <cmath>
#include <cstddef>
#include <functional>
#include <limits>
#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "poncelet/core/homogeneous.hpp"
#include "poncelet/core/polynomial.hpp"
#include "poncelet/core/scalar.hpp"

namespace poncelet {

/// Conjugate pair of rational normal curves in the coordinates where the
/// reference pyramid is the fundamental one. C2 is the envelope of the
/// hyperplanes  sum A_i x_i / (t - a_i) = 0,  C1 the locus of the points
/// whose dual equation is  sum B_i u_i / (s - a_i) = 0.
struct CanonicalConfig {
  int n = 0;
  std::vector<Scalar> a;
  std::vector<Scalar> A;
  std::vector<Scalar> B;

  static CanonicalConfig make(std::vector<Scalar> a, std::vector<Scalar> A, std::vector<Scalar> B,
                              const Tolerance& tol = {}) {
    if (a.size() != A.size() || a.size() != B.size()) {
      throw Error(ErrorCode::InvalidConfig, "a, A and B must have the same length");
    }
    if (a.size() < 3) throw Error(ErrorCode::InvalidConfig, "need n >= 2 (at least three a_i)");
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (!is_finite(a[i]) || !is_finite(A[i]) || !is_finite(B[i])) {
        throw Error(ErrorCode::InvalidConfig, "non-finite configuration value");
      }
      if (std::abs(A[i]) <= tol.rel_eps || std::abs(B[i]) <= tol.rel_eps) {
        throw Error(ErrorCode::InvalidConfig, "every A_i and B_i must be nonzero");
      }
    }
    if (min_separation(a) <= tol.root_sep_eps) {
      throw Error(ErrorCode::InvalidConfig, "the a_i must be pairwise distinct");
    }
    CanonicalConfig cfg;
    cfg.n = static_cast<int>(a.size()) - 1;
    cfg.a = std::move(a);
    cfg.A = std::move(A);
    cfg.B = std::move(B);
    return cfg;
  }

  std::size_t size() const noexcept { return a.size(); }
};

/// prod_{j != i} (x - a_j)
inline Scalar cleared_factor(const CanonicalConfig& cfg, std::size_t i, Scalar x) noexcept {
  Scalar p(1.0);
  for (std::size_t j = 0; j < cfg.size(); ++j) {
    if (j != i) p *= x - cfg.a[j];
  }
  return p;
}

inline Polynomial cleared_factor_polynomial(const CanonicalConfig& cfg, std::size_t i) {
  std::vector<Scalar> others;
  for (std::size_t j = 0; j < cfg.size(); ++j) {
    if (j != i) others.push_back(cfg.a[j]);
  }
  return Polynomial::from_roots(others);
}

/// Denominator-cleared coefficients A_i prod_{j != i}(t - a_j).
inline Eigen::VectorXcd c2_face_coords(const CanonicalConfig& cfg, Scalar t) {
  Eigen::VectorXcd h(cfg.size());
  for (std::size_t i = 0; i < cfg.size(); ++i) h[i] = cfg.A[i] * cleared_factor(cfg, i, t);
  return h;
}

inline Eigen::VectorXcd c1_point_coords(const CanonicalConfig& cfg, Scalar s) {
  Eigen::VectorXcd p(cfg.size());
  for (std::size_t i = 0; i < cfg.size(); ++i) p[i] = cfg.B[i] * cleared_factor(cfg, i, s);
  return p;
}

/// Hyperosculating hyperplane of C2 with parameter t.
inline HomogeneousVector c2_face(const CanonicalConfig& cfg, Scalar t) {
  return HomogeneousVector::hyperplane(c2_face_coords(cfg, t), 0.0);
}

/// Point of C1 with parameter s.
inline HomogeneousVector c1_point(const CanonicalConfig& cfg, Scalar s) {
  return HomogeneousVector::point(c1_point_coords(cfg, s), 0.0);
}

/// Component polynomials of t -> c2_face_coords(cfg, t), each of degree n.
inline std::vector<Polynomial> face_polynomials(const CanonicalConfig& cfg) {
  std::vector<Polynomial> rows;
  for (std::size_t i = 0; i < cfg.size(); ++i) rows.push_back(cleared_factor_polynomial(cfg, i) * cfg.A[i]);
  return rows;
}

inline std::vector<Polynomial> point_polynomials(const CanonicalConfig& cfg) {
  std::vector<Polynomial> rows;
  for (std::size_t i = 0; i < cfg.size(); ++i) rows.push_back(cleared_factor_polynomial(cfg, i) * cfg.B[i]);
  return rows;
}

namespace detail {

// Polynomial in extended precision carrying, per coefficient, the sum of the
// moduli of everything accumulated into it. Coefficients that cancel to
// within rounding of that bound are treated as exact zeros.
struct TrackedPolynomial {
  std::vector<ExtendedScalar> c;
  std::vector<long double> bound;

  static TrackedPolynomial exact(std::vector<ExtendedScalar> coeffs) {
    TrackedPolynomial p;
    p.bound.reserve(coeffs.size());
    for (const auto& v : coeffs) p.bound.push_back(std::abs(v));
    p.c = std::move(coeffs);
    return p;
  }

  void add(const TrackedPolynomial& o, long double sign) {
    if (o.c.size() > c.size()) {
      c.resize(o.c.size(), ExtendedScalar(0.0L));
      bound.resize(o.c.size(), 0.0L);
    }
    for (std::size_t i = 0; i < o.c.size(); ++i) {
      c[i] += sign * o.c[i];
      bound[i] += o.bound[i];
    }
  }

  friend TrackedPolynomial operator*(const TrackedPolynomial& a, const TrackedPolynomial& b) {
    TrackedPolynomial out;
    if (a.c.empty() || b.c.empty()) return out;
    out.c.assign(a.c.size() + b.c.size() - 1, ExtendedScalar(0.0L));
    out.bound.assign(out.c.size(), 0.0L);
    for (std::size_t i = 0; i < a.c.size(); ++i) {
      for (std::size_t j = 0; j < b.c.size(); ++j) {
        out.c[i + j] += a.c[i] * b.c[j];
        out.bound[i + j] += a.bound[i] * b.bound[j];
      }
    }
    return out;
  }

  TrackedPolynomial derivative() const {
    TrackedPolynomial out;
    for (std::size_t i = 1; i < c.size(); ++i) {
      out.c.push_back(c[i] * static_cast<long double>(i));
      out.bound.push_back(bound[i] * static_cast<long double>(i));
    }
    if (out.c.empty()) out = exact({ExtendedScalar(0.0L)});
    return out;
  }

  Polynomial rounded() const {
    const long double cut = 1e4L * std::numeric_limits<long double>::epsilon();
    std::vector<Scalar> out;
    for (std::size_t i = 0; i < c.size(); ++i) {
      const bool noise = std::abs(c[i]) <= cut * bound[i];
      out.emplace_back(noise ? 0.0 : static_cast<double>(c[i].real()), noise ? 0.0 : static_cast<double>(c[i].imag()));
    }
    return Polynomial(std::move(out));
  }
};

inline TrackedPolynomial extended_from_roots(std::span<const Scalar> roots, Scalar lead) {
  std::vector<ExtendedScalar> c{ExtendedScalar(lead.real(), lead.imag())};
  for (const Scalar& r : roots) {
    const ExtendedScalar re(r.real(), r.imag());
    std::vector<ExtendedScalar> next(c.size() + 1, ExtendedScalar(0.0L));
    for (std::size_t i = 0; i < c.size(); ++i) {
      next[i + 1] += c[i];
      next[i] -= re * c[i];
    }
    c = std::move(next);
  }
  return TrackedPolynomial::exact(std::move(c));
}

// Determinant of a square polynomial matrix by Laplace expansion along rows,
// memoized on the set of remaining columns.
class PolynomialDeterminant {
 public:
  explicit PolynomialDeterminant(const std::vector<std::vector<TrackedPolynomial>>& rows) : rows_(rows) {}

  TrackedPolynomial operator()(std::size_t row, unsigned columns) {
    if (row == rows_.size()) return TrackedPolynomial::exact({ExtendedScalar(1.0L)});
    const auto key = (static_cast<unsigned long long>(row) << 32) | columns;
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    TrackedPolynomial acc = TrackedPolynomial::exact({ExtendedScalar(0.0L)});
    int position = 0;
    for (std::size_t c = 0; c < rows_[row].size(); ++c) {
      if ((columns & (1u << c)) == 0) continue;
      acc.add(rows_[row][c] * (*this)(row + 1, columns & ~(1u << c)), position % 2 == 0 ? 1.0L : -1.0L);
      ++position;
    }
    memo_.emplace(key, acc);
    return acc;
  }

 private:
  const std::vector<std::vector<TrackedPolynomial>>& rows_;
  std::unordered_map<unsigned long long, TrackedPolynomial> memo_;
};

inline double abs_value_scale(const Polynomial& p, Scalar x) {
  double s = 0.0;
  double xp = 1.0;
  for (const Scalar& c : p.coeffs()) {
    s += std::abs(c) * xp;
    xp *= std::abs(x);
  }
  return s;
}

// Removes roots shared by every component.
inline std::vector<Polynomial> strip_common_roots(std::vector<Polynomial> comps, double rel_eps) {
  for (Polynomial& c : comps) c = c.trimmed(1e-13);
  for (;;) {
    int best = -1;
    for (std::size_t i = 0; i < comps.size(); ++i) {
      const int d = comps[i].degree(1e-13);
      if (d < 0) continue;
      if (best < 0 || d < comps[best].degree(1e-13)) best = static_cast<int>(i);
    }
    if (best < 0 || comps[best].degree(1e-13) < 1) break;
    bool stripped = false;
    for (const Scalar& r : poly_roots(comps[best], 1e-13)) {
      bool common = true;
      for (const Polynomial& c : comps) {
        if (std::abs(c(r)) > rel_eps * std::max(abs_value_scale(c, r), 1e-300)) {
          common = false;
          break;
        }
      }
      if (!common) continue;
      for (Polynomial& c : comps) c = c.deflate(r).trimmed(1e-13);
      stripped = true;
      break;
    }
    if (!stripped) break;
  }
  double scale = 0.0;
  for (const Polynomial& c : comps) scale = std::max(scale, c.max_coeff());
  if (scale > 0.0) {
    for (Polynomial& c : comps) c *= Scalar(1.0 / scale);
  }
  return comps;
}

}  // namespace detail

/// Polynomial parametrization of C2 itself: the point annihilated by
/// h(t), h'(t), ..., h^{(n-1)}(t), taken from the signed maximal minors of
/// that n x (n+1) polynomial matrix with common factors removed.
inline std::vector<Polynomial> contact_curve(const CanonicalConfig& cfg, const Tolerance& tol = {}) {
  const std::size_t cols = cfg.size();
  const std::size_t n = cols - 1;
  std::vector<std::vector<detail::TrackedPolynomial>> rows(n);
  for (std::size_t i = 0; i < cols; ++i) {
    std::vector<Scalar> others;
    for (std::size_t j = 0; j < cols; ++j) {
      if (j != i) others.push_back(cfg.a[j]);
    }
    rows[0].push_back(detail::extended_from_roots(others, cfg.A[i]));
  }
  for (std::size_t k = 1; k < n; ++k) {
    for (const auto& p : rows[k - 1]) rows[k].push_back(p.derivative());
  }
  detail::PolynomialDeterminant det(rows);
  const unsigned all = (1u << cols) - 1u;
  std::vector<Polynomial> comps;
  for (std::size_t i = 0; i < cols; ++i) {
    const Polynomial minor = det(0, all & ~(1u << i)).rounded();
    comps.push_back(i % 2 == 0 ? minor : minor * Scalar(-1.0));
  }
  return detail::strip_common_roots(std::move(comps), std::sqrt(tol.rel_eps));
}

inline HomogeneousVector c2_point(const std::vector<Polynomial>& curve, Scalar t, const Tolerance& tol = {}) {
  Eigen::VectorXcd p(curve.size());
  double scale = 0.0;
  for (std::size_t i = 0; i < curve.size(); ++i) {
    p[i] = curve[i](t);
    scale = std::max(scale, detail::abs_value_scale(curve[i], t));
  }
  double m = 0.0;
  for (Eigen::Index i = 0; i < p.size(); ++i) m = std::max(m, std::abs(p[i]));
  if (!(m > tol.rel_eps * scale)) {
    throw Error(ErrorCode::DegenerateContact, "osculating flag does not determine a point");
  }
  return HomogeneousVector::point(p, 0.0);
}

/// Contact point of the hyperosculating hyperplane c2_face(cfg, t).
inline HomogeneousVector c2_point(const CanonicalConfig& cfg, Scalar t, const Tolerance& tol = {}) {
  return c2_point(contact_curve(cfg, tol), t, tol);
}

/// sum A_i B_i prod_{j!=i}(t - a_j)(s - a_j); zero iff c1_point(s) lies on c2_face(t).
inline Scalar incidence_value(const CanonicalConfig& cfg, Scalar t, Scalar s) noexcept {
  Scalar acc(0.0);
  for (std::size_t i = 0; i < cfg.size(); ++i) {
    acc += (cfg.A[i] * cfg.B[i]) * (cleared_factor(cfg, i, t) * cleared_factor(cfg, i, s));
  }
  return acc;
}

/// Sum of the moduli of the terms of incidence_value, its natural scale.
inline double incidence_scale(const CanonicalConfig& cfg, Scalar t, Scalar s) noexcept {
  double acc = 0.0;
  for (std::size_t i = 0; i < cfg.size(); ++i) {
    acc += std::abs(cfg.A[i] * cfg.B[i]) * std::abs(cleared_factor(cfg, i, t)) *
           std::abs(cleared_factor(cfg, i, s));
  }
  return acc;
}

/// Coefficient matrix C with incidence_value(t, s) = sum_{p,q} C(p,q) t^p s^q.
inline Eigen::MatrixXcd incidence_form(const CanonicalConfig& cfg) {
  const auto size = static_cast<Eigen::Index>(cfg.size());
  Eigen::MatrixXcd c = Eigen::MatrixXcd::Zero(size, size);
  for (std::size_t i = 0; i < cfg.size(); ++i) {
    const Polynomial l = cleared_factor_polynomial(cfg, i);
    const Scalar w = cfg.A[i] * cfg.B[i];
    for (Eigen::Index p = 0; p < size; ++p) {
      for (Eigen::Index q = 0; q < size; ++q) {
        const Scalar lp = l[static_cast<std::size_t>(p)];
        const Scalar lq = l[static_cast<std::size_t>(q)];
        c(p, q) += w * (lp * lq);
      }
    }
  }
  return c;
}

/// Elementary pyramid: vertex i is opposite face i.
struct Pyramid {
  int n = 0;
  std::vector<HomogeneousVector> vertices;
  std::vector<HomogeneousVector> faces;
};

/// Vertices e_0..e_n, face i the coordinate hyperplane x_i = 0.
inline Pyramid fundamental_pyramid(int n) {
  if (n < 2) throw Error(ErrorCode::InvalidConfig, "fundamental pyramid needs n >= 2");
  Pyramid p;
  p.n = n;
  for (int i = 0; i <= n; ++i) {
    Eigen::VectorXcd e = Eigen::VectorXcd::Zero(n + 1);
    e[i] = 1.0;
    p.vertices.push_back(HomogeneousVector::point(e));
    p.faces.push_back(HomogeneousVector::hyperplane(e));
  }
  return p;
}

/// R(l, m) = incidence_residual(vertex m, face l).
inline Eigen::MatrixXd pyramid_residuals(const Pyramid& p) {
  const auto size = static_cast<Eigen::Index>(p.vertices.size());
  Eigen::MatrixXd r(size, size);
  for (Eigen::Index l = 0; l < size; ++l) {
    for (Eigen::Index m = 0; m < size; ++m) r(l, m) = incidence_residual(p.vertices[m], p.faces[l]);
  }
  return r;
}

}  // namespace poncelet

#endif  // PONCELET_PYRAMID_CANONICAL_HPP
