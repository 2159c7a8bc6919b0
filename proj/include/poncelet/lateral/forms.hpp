#ifndef PONCELET_LATERAL_FORMS_HPP
#define PONCELET_LATERAL_FORMS_HPP

#include <array>
#include <cmath>
#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "poncelet/core/homogeneous.hpp"
#include "poncelet/core/polynomial.hpp"
#include "poncelet/core/scalar.hpp"

namespace poncelet {

/// Binary form of a fixed degree d, stored by its affine coefficients
/// f(t) = sum_j c_j t^j. The degree is the form degree, so trailing zero
/// coefficients are meaningful (a degree-3 form may be the constant 1).
class BinaryForm {
 public:
  BinaryForm() = default;

  BinaryForm(int degree, std::vector<Scalar> coeffs) : degree_(degree), coeffs_(std::move(coeffs)) {
    if (degree_ < 0 || coeffs_.size() > static_cast<std::size_t>(degree_) + 1) {
      throw Error(ErrorCode::DimensionMismatch, "binary form has more coefficients than its degree allows");
    }
    coeffs_.resize(static_cast<std::size_t>(degree_) + 1, Scalar(0.0));
    if (max_modulus(coeffs_) == 0.0) throw Error(ErrorCode::ZeroPolynomial, "binary form is identically zero");
  }

  static BinaryForm from_roots(std::span<const Scalar> roots) {
    const Polynomial p = Polynomial::from_roots(roots);
    return BinaryForm(static_cast<int>(roots.size()), p.coeffs());
  }

  int degree() const noexcept { return degree_; }
  const std::vector<Scalar>& coeffs() const noexcept { return coeffs_; }
  Scalar operator[](std::size_t j) const noexcept { return coeffs_[j]; }
  Polynomial polynomial() const { return Polynomial(coeffs_); }
  Scalar operator()(Scalar t) const noexcept { return Polynomial(coeffs_)(t); }

 private:
  int degree_ = 0;
  std::vector<Scalar> coeffs_;
};

/// The linear series spanned by two independent forms of equal degree.
struct Pencil {
  BinaryForm F;
  BinaryForm G;

  static Pencil make(BinaryForm f, BinaryForm g, const Tolerance& tol = {}) {
    if (f.degree() != g.degree()) {
      throw Error(ErrorCode::DimensionMismatch, "pencil forms must share a degree");
    }
    const auto cols = static_cast<Eigen::Index>(f.coeffs().size());
    Eigen::MatrixXcd m(2, cols);
    for (Eigen::Index j = 0; j < cols; ++j) {
      m(0, j) = f[static_cast<std::size_t>(j)];
      m(1, j) = g[static_cast<std::size_t>(j)];
    }
    const Eigen::VectorXd sv = Eigen::JacobiSVD<Eigen::MatrixXcd>(m).singularValues();
    if (!(sv[1] > tol.rank_eps * sv[0])) {
      throw Error(ErrorCode::DependentPencil, "pencil forms are proportional");
    }
    return Pencil{std::move(f), std::move(g)};
  }

  int degree() const noexcept { return F.degree(); }
};

/// B(u, v) = sum_{p,q} coeffs(p, q) u^p v^q.
struct BivariateForm {
  Eigen::MatrixXcd coeffs;

  Scalar operator()(Scalar u, Scalar v) const noexcept {
    Scalar acc(0.0);
    Scalar up(1.0);
    for (Eigen::Index p = 0; p < coeffs.rows(); ++p) {
      Scalar vq(1.0);
      for (Eigen::Index q = 0; q < coeffs.cols(); ++q) {
        acc += coeffs(p, q) * up * vq;
        vq *= v;
      }
      up *= u;
    }
    return acc;
  }

  double abs_scale(Scalar u, Scalar v) const noexcept {
    double acc = 0.0;
    for (Eigen::Index p = 0; p < coeffs.rows(); ++p) {
      for (Eigen::Index q = 0; q < coeffs.cols(); ++q) {
        acc += std::abs(coeffs(p, q)) * std::pow(std::abs(u), static_cast<double>(p)) *
               std::pow(std::abs(v), static_cast<double>(q));
      }
    }
    return acc;
  }

  double asymmetry() const { return (coeffs - coeffs.transpose()).cwiseAbs().maxCoeff(); }
};

using Exponent = std::array<int, 3>;

/// Homogeneous polynomial of degree n in x0, x1, x2. Monomials are ordered
/// by descending x0 exponent, then descending x1 exponent.
class TernaryForm {
 public:
  TernaryForm() = default;

  TernaryForm(int degree, std::vector<Scalar> coeffs) : degree_(degree), coeffs_(std::move(coeffs)) {
    if (degree_ < 0 || coeffs_.size() != monomials(degree_).size()) {
      throw Error(ErrorCode::DimensionMismatch, "ternary form coefficient count does not match its degree");
    }
    if (max_modulus(coeffs_) == 0.0) throw Error(ErrorCode::ZeroPolynomial, "ternary form is identically zero");
  }

  static std::vector<Exponent> monomials(int degree) {
    std::vector<Exponent> out;
    for (int i = degree; i >= 0; --i) {
      for (int j = degree - i; j >= 0; --j) out.push_back({i, j, degree - i - j});
    }
    return out;
  }

  static std::size_t monomial_index(int degree, const Exponent& e) {
    const auto all = monomials(degree);
    for (std::size_t m = 0; m < all.size(); ++m) {
      if (all[m] == e) return m;
    }
    throw Error(ErrorCode::DimensionMismatch, "exponent does not belong to this degree");
  }

  /// All degree-n monomials evaluated at p, in storage order.
  static Eigen::VectorXcd monomial_vector(int degree, const Eigen::Vector3cd& p) {
    const auto all = monomials(degree);
    Eigen::VectorXcd out(static_cast<Eigen::Index>(all.size()));
    for (std::size_t m = 0; m < all.size(); ++m) {
      out[static_cast<Eigen::Index>(m)] = ipow(p[0], all[m][0]) * ipow(p[1], all[m][1]) * ipow(p[2], all[m][2]);
    }
    return out;
  }

  int degree() const noexcept { return degree_; }
  const std::vector<Scalar>& coeffs() const noexcept { return coeffs_; }
  Scalar coeff(const Exponent& e) const { return coeffs_[monomial_index(degree_, e)]; }
  double max_coeff() const noexcept { return max_modulus(coeffs_); }

  Scalar operator()(const Eigen::Vector3cd& p) const {
    const Eigen::VectorXcd mv = monomial_vector(degree_, p);
    Scalar acc(0.0);
    for (std::size_t m = 0; m < coeffs_.size(); ++m) acc += coeffs_[m] * mv[static_cast<Eigen::Index>(m)];
    return acc;
  }

  /// sum |c_m| |p^m|, the scale used for relative residuals.
  double abs_scale(const Eigen::Vector3cd& p) const {
    const Eigen::VectorXcd mv = monomial_vector(degree_, p);
    double acc = 0.0;
    for (std::size_t m = 0; m < coeffs_.size(); ++m) acc += std::abs(coeffs_[m]) * std::abs(mv[static_cast<Eigen::Index>(m)]);
    return acc;
  }

  /// |T(p)| / abs_scale(p).
  double relative_value(const Eigen::Vector3cd& p) const {
    const double s = abs_scale(p);
    return s > 0.0 ? std::abs((*this)(p)) / s : 0.0;
  }

  /// Largest imaginary part of a coefficient relative to the largest modulus.
  double imaginary_defect() const noexcept {
    double im = 0.0;
    for (const Scalar& c : coeffs_) im = std::max(im, std::abs(c.imag()));
    const double top = max_coeff();
    return top > 0.0 ? im / top : 0.0;
  }

 private:
  int degree_ = 0;
  std::vector<Scalar> coeffs_;
};

}  // namespace poncelet

#endif  // PONCELET_LATERAL_FORMS_HPP
