#ifndef PONCELET_CORE_POLYNOMIAL_HPP
#define PONCELET_CORE_POLYNOMIAL_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "poncelet/core/scalar.hpp"

namespace poncelet {

/// Univariate polynomial over Scalar, coefficients stored lowest degree first.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Scalar> coeffs) : coeffs_(std::move(coeffs)) {}
  Polynomial(std::initializer_list<Scalar> coeffs) : coeffs_(coeffs) {}

  static Polynomial constant(Scalar c) { return Polynomial({c}); }

  /// Monic polynomial with the given roots.
  static Polynomial from_roots(std::span<const Scalar> roots) {
    std::vector<Scalar> c{Scalar(1.0)};
    for (const Scalar& r : roots) {
      std::vector<Scalar> next(c.size() + 1, Scalar(0.0));
      for (std::size_t i = 0; i < c.size(); ++i) {
        next[i + 1] += c[i];
        next[i] -= r * c[i];
      }
      c = std::move(next);
    }
    return Polynomial(std::move(c));
  }

  const std::vector<Scalar>& coeffs() const noexcept { return coeffs_; }
  std::size_t size() const noexcept { return coeffs_.size(); }
  Scalar operator[](std::size_t i) const noexcept {
    return i < coeffs_.size() ? coeffs_[i] : Scalar(0.0);
  }

  double max_coeff() const noexcept { return max_modulus(coeffs_); }

  /// Index of the last coefficient with modulus above rel_eps * max modulus;
  /// -1 for the zero polynomial.
  int degree(double rel_eps = 1e-9) const noexcept {
    const double cut = rel_eps * max_coeff();
    for (int i = static_cast<int>(coeffs_.size()) - 1; i >= 0; --i) {
      if (std::abs(coeffs_[i]) > cut) return i;
    }
    return -1;
  }

  Scalar operator()(Scalar x) const noexcept {
    Scalar acc(0.0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  Polynomial derivative() const {
    if (coeffs_.size() <= 1) return Polynomial({Scalar(0.0)});
    std::vector<Scalar> d(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) {
      d[i - 1] = coeffs_[i] * static_cast<double>(i);
    }
    return Polynomial(std::move(d));
  }

  /// Taylor coefficients at x0: result[j] = f^{(j)}(x0) / j!.
  Polynomial shifted(Scalar x0) const {
    // repeated synthetic division by (x - x0)
    std::vector<Scalar> work = coeffs_;
    std::vector<Scalar> out(work.size(), Scalar(0.0));
    for (std::size_t j = 0; j < out.size(); ++j) {
      Scalar acc(0.0);
      for (std::size_t i = work.size(); i-- > j;) {
        acc = acc * x0 + work[i];
        work[i] = acc;
      }
      out[j] = work[j];
    }
    return Polynomial(std::move(out));
  }

  Polynomial& operator+=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Scalar(0.0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Scalar(0.0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    return *this;
  }
  Polynomial& operator*=(Scalar s) {
    for (Scalar& c : coeffs_) c *= s;
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, Scalar s) { return a *= s; }
  friend Polynomial operator*(Scalar s, Polynomial a) { return a *= s; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.coeffs_.empty() || b.coeffs_.empty()) return Polynomial();
    std::vector<Scalar> c(a.coeffs_.size() + b.coeffs_.size() - 1, Scalar(0.0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return Polynomial(std::move(c));
  }

  /// Quotient by (x - r); the remainder f(r) is written to *remainder.
  Polynomial deflate(Scalar r, Scalar* remainder = nullptr) const {
    if (coeffs_.empty()) return Polynomial();
    std::vector<Scalar> q(coeffs_.size() > 1 ? coeffs_.size() - 1 : 1, Scalar(0.0));
    Scalar acc(0.0);
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
      acc = acc * r + coeffs_[i];
      if (i > 0) q[i - 1] = acc;
    }
    if (remainder != nullptr) *remainder = acc;
    return Polynomial(std::move(q));
  }

  /// Drops coefficients above the effective degree.
  Polynomial trimmed(double rel_eps = 1e-9) const {
    const int d = degree(rel_eps);
    if (d < 0) return Polynomial({Scalar(0.0)});
    return Polynomial(std::vector<Scalar>(coeffs_.begin(), coeffs_.begin() + d + 1));
  }

 private:
  std::vector<Scalar> coeffs_;
};

namespace detail {

using ExtendedScalar = std::complex<long double>;

// Parlett-Reinsch balancing on the off-diagonal part, powers of two only.
inline void balance_companion(Eigen::MatrixXcd& m) {
  const Eigen::Index size = m.rows();
  const double gamma = 0.9;
  bool changed = true;
  for (int sweep = 0; changed && sweep < 100; ++sweep) {
    changed = false;
    for (Eigen::Index i = 0; i < size; ++i) {
      double row = 0.0;
      double col = 0.0;
      for (Eigen::Index j = 0; j < size; ++j) {
        if (j == i) continue;
        row += std::abs(m(i, j));
        col += std::abs(m(j, i));
      }
      if (row == 0.0 || col == 0.0) continue;
      int exponent = 0;
      std::frexp(row / col, &exponent);
      exponent /= 2;
      if (exponent == 0) continue;
      const double scaled_col = std::ldexp(col, exponent);
      const double scaled_row = std::ldexp(row, -exponent);
      if (scaled_col + scaled_row < gamma * (col + row)) {
        changed = true;
        m.row(i) *= std::ldexp(1.0, -exponent);
        m.col(i) *= std::ldexp(1.0, exponent);
      }
    }
  }
}

// Newton steps in extended precision; a step is kept only if |f| shrinks.
template <typename Coeff>
ExtendedScalar polish_root_extended(const std::vector<Coeff>& c, ExtendedScalar x, int steps = 6) {
  auto eval = [&c](ExtendedScalar at, ExtendedScalar& df) {
    ExtendedScalar f(0.0L);
    df = ExtendedScalar(0.0L);
    for (auto it = c.rbegin(); it != c.rend(); ++it) {
      df = df * at + f;
      f = f * at + ExtendedScalar(it->real(), it->imag());
    }
    return f;
  };
  ExtendedScalar df;
  ExtendedScalar f = eval(x, df);
  for (int s = 0; s < steps; ++s) {
    if (std::abs(df) == 0.0L || std::abs(f) == 0.0L) break;
    const ExtendedScalar candidate = x - f / df;
    ExtendedScalar dfc;
    const ExtendedScalar fc = eval(candidate, dfc);
    if (!(std::abs(fc) < std::abs(f))) break;
    x = candidate;
    f = fc;
    df = dfc;
  }
  return x;
}

template <typename Coeff>
Scalar polish_root(const std::vector<Coeff>& c, Scalar root, int steps = 6) {
  const ExtendedScalar x = polish_root_extended(c, ExtendedScalar(root.real(), root.imag()), steps);
  return Scalar(static_cast<double>(x.real()), static_cast<double>(x.imag()));
}

}  // namespace detail

/// All roots with multiplicity, from the eigenvalues of the balanced
/// companion matrix of the monic-normalized polynomial, then Newton-polished.
inline std::vector<Scalar> poly_roots(const Polynomial& f, double rel_eps = 1e-9) {
  const int d = f.degree(rel_eps);
  if (d < 0) throw Error(ErrorCode::ZeroPolynomial, "cannot take roots of the zero polynomial");
  if (d == 0) throw Error(ErrorCode::DegreeZero, "constant polynomial has no roots");

  const std::vector<Scalar>& c = f.coeffs();
  const Scalar lead = c[d];
  std::vector<Scalar> monic(c.begin(), c.begin() + d + 1);
  for (Scalar& v : monic) v /= lead;
  monic[d] = Scalar(1.0);

  std::vector<Scalar> roots;
  roots.reserve(d);
  if (d == 1) {
    roots.push_back(-monic[0]);
  } else {
    Eigen::MatrixXcd companion = Eigen::MatrixXcd::Zero(d, d);
    for (int i = 1; i < d; ++i) companion(i, i - 1) = Scalar(1.0);
    for (int i = 0; i < d; ++i) companion(i, d - 1) = -monic[i];
    detail::balance_companion(companion);
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(companion, /*computeEigenvectors=*/false);
    if (solver.info() != Eigen::Success) {
      throw Error(ErrorCode::ZeroPolynomial, "companion eigenvalue iteration failed");
    }
    for (int i = 0; i < d; ++i) roots.push_back(solver.eigenvalues()[i]);
  }
  const std::vector<Scalar> trimmed(c.begin(), c.begin() + d + 1);
  for (Scalar& r : roots) r = detail::polish_root(trimmed, r);
  // deterministic order: real part, then imaginary part
  std::sort(roots.begin(), roots.end(), [](Scalar a, Scalar b) {
    return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
  });
  return roots;
}

/// Groups roots closer than sep_eps; returns (representative, multiplicity).
inline std::vector<std::pair<Scalar, int>> cluster_roots(std::span<const Scalar> roots,
                                                         double sep_eps) {
  std::vector<std::pair<Scalar, int>> clusters;
  std::vector<bool> used(roots.size(), false);
  for (std::size_t i = 0; i < roots.size(); ++i) {
    if (used[i]) continue;
    Scalar sum = roots[i];
    int count = 1;
    used[i] = true;
    for (std::size_t j = i + 1; j < roots.size(); ++j) {
      if (!used[j] && std::abs(roots[j] - roots[i]) <= sep_eps) {
        used[j] = true;
        sum += roots[j];
        ++count;
      }
    }
    clusters.emplace_back(sum / static_cast<double>(count), count);
  }
  return clusters;
}

}  // namespace poncelet

#endif  // PONCELET_CORE_POLYNOMIAL_HPP
