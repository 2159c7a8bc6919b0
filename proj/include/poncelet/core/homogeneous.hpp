#ifndef PONCELET_CORE_HOMOGENEOUS_HPP
#define PONCELET_CORE_HOMOGENEOUS_HPP

#include <cmath>
#include <cstddef>
#include <limits>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "poncelet/core/scalar.hpp"

namespace poncelet {

enum class Role { Point, Hyperplane };

/// A point or hyperplane of projective space, kept in the normalized
/// representative whose pivot coordinate is exactly 1.
class HomogeneousVector {
 public:
  HomogeneousVector() = default;

  static HomogeneousVector point(Eigen::VectorXcd coords, double rel_eps = 1e-9) {
    return HomogeneousVector(std::move(coords), Role::Point, rel_eps);
  }
  static HomogeneousVector hyperplane(Eigen::VectorXcd coords, double rel_eps = 1e-9) {
    return HomogeneousVector(std::move(coords), Role::Hyperplane, rel_eps);
  }

  HomogeneousVector(Eigen::VectorXcd coords, Role role, double rel_eps = 1e-9)
      : coords_(std::move(coords)), role_(role) {
    normalize_in_place(rel_eps);
  }

  const Eigen::VectorXcd& coords() const noexcept { return coords_; }
  Role role() const noexcept { return role_; }
  Eigen::Index size() const noexcept { return coords_.size(); }
  Scalar operator[](Eigen::Index i) const { return coords_[i]; }

  /// Index of the coordinate used as the normalization pivot.
  static Eigen::Index pivot_index(const Eigen::VectorXcd& v) noexcept {
    double m = 0.0;
    for (Eigen::Index i = 0; i < v.size(); ++i) m = std::max(m, std::abs(v[i]));
    // first coordinate within a hair of the maximum, so the choice is stable
    // once the vector is normalized
    const double cut = m * (1.0 - 1e-12);
    for (Eigen::Index i = 0; i < v.size(); ++i) {
      if (std::abs(v[i]) >= cut) return i;
    }
    return 0;
  }

 private:
  void normalize_in_place(double rel_eps) {
    for (Eigen::Index i = 0; i < coords_.size(); ++i) {
      if (!is_finite(coords_[i])) {
        throw Error(ErrorCode::ZeroVector, "non-finite homogeneous coordinate");
      }
    }
    double m = 0.0;
    for (Eigen::Index i = 0; i < coords_.size(); ++i) m = std::max(m, std::abs(coords_[i]));
    if (coords_.size() == 0 || m <= rel_eps) {
      throw Error(ErrorCode::ZeroVector, "all homogeneous coordinates vanish");
    }
    const Eigen::Index p = pivot_index(coords_);
    const Scalar pivot = coords_[p];
    if (pivot == Scalar(1.0)) return;
    coords_ /= pivot;
    coords_[p] = Scalar(1.0);
  }

  Eigen::VectorXcd coords_;
  Role role_ = Role::Point;
};

inline HomogeneousVector normalize(const HomogeneousVector& v, double rel_eps = 1e-9) {
  return HomogeneousVector(v.coords(), v.role(), rel_eps);
}

/// |<p, h>| / (|p| |h|), the bilinear (unconjugated) pairing.
inline double incidence_residual(const Eigen::VectorXcd& p, const Eigen::VectorXcd& h) {
  if (p.size() != h.size()) {
    throw Error(ErrorCode::DimensionMismatch, "point and hyperplane live in different spaces");
  }
  const double denom = p.norm() * h.norm();
  if (denom == 0.0) throw Error(ErrorCode::ZeroVector, "zero vector in incidence test");
  return std::abs(p.cwiseProduct(h).sum()) / denom;
}

inline double incidence_residual(const HomogeneousVector& p, const HomogeneousVector& h) {
  return incidence_residual(p.coords(), h.coords());
}

/// Invertible linear map of P^n.
class Projectivity {
 public:
  explicit Projectivity(Eigen::MatrixXcd matrix, double rank_eps = 1e-10)
      : matrix_(std::move(matrix)) {
    if (matrix_.rows() != matrix_.cols() || matrix_.rows() == 0) {
      throw Error(ErrorCode::DimensionMismatch, "projectivity matrix must be square");
    }
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(matrix_);
    const auto& sv = svd.singularValues();
    if (!(sv[sv.size() - 1] > rank_eps * sv[0])) {
      throw Error(ErrorCode::SingularMatrix, "projectivity matrix is numerically singular");
    }
    inverse_transpose_ = matrix_.inverse().transpose();
  }

  static Projectivity identity(Eigen::Index size) {
    return Projectivity(Eigen::MatrixXcd::Identity(size, size));
  }

  const Eigen::MatrixXcd& matrix() const noexcept { return matrix_; }
  const Eigen::MatrixXcd& inverse_transpose() const noexcept { return inverse_transpose_; }
  Eigen::Index dimension() const noexcept { return matrix_.rows(); }

 private:
  Eigen::MatrixXcd matrix_;
  Eigen::MatrixXcd inverse_transpose_;
};

/// Points transform by M, hyperplanes by M^{-T}.
inline HomogeneousVector apply_projectivity(const Projectivity& m, const HomogeneousVector& v) {
  if (m.dimension() != v.size()) {
    throw Error(ErrorCode::DimensionMismatch, "projectivity and vector dimensions differ");
  }
  if (v.role() == Role::Point) return HomogeneousVector(m.matrix() * v.coords(), Role::Point);
  return HomogeneousVector(m.inverse_transpose() * v.coords(), Role::Hyperplane);
}

/// Numerical kernel of a matrix together with the singular spectrum it came from.
struct Nullspace {
  std::vector<Eigen::VectorXcd> basis;  // orthonormal columns of V
  Eigen::VectorXd singular_values;      // descending, min(rows, cols) of them
  Eigen::Index rank = 0;

  /// Smallest kept singular value over the largest discarded one. Implicit
  /// zero singular values (cols > rows) are floored at machine epsilon times
  /// the largest, so the ratio stays finite.
  double gap_ratio() const {
    if (singular_values.size() == 0 || rank == 0) return 0.0;
    const double top = singular_values[0];
    const double kept = singular_values[rank - 1];
    double dropped = rank < singular_values.size() ? singular_values[rank] : 0.0;
    dropped = std::max(dropped, top * std::numeric_limits<double>::epsilon());
    return kept / dropped;
  }
};

inline Nullspace nullspace(const Eigen::MatrixXcd& a, double rank_eps = 1e-10) {
  if (a.rows() < 1 || a.cols() < 1) {
    throw Error(ErrorCode::DimensionMismatch, "nullspace of an empty matrix");
  }
  Nullspace out;
  const bool real = a.imag().cwiseAbs().maxCoeff() == 0.0;
  Eigen::MatrixXcd v;
  if (real) {
    // keep real input real so downstream curves stay real
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(a.real(), Eigen::ComputeFullV);
    out.singular_values = svd.singularValues();
    v = svd.matrixV().cast<Scalar>();
  } else {
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(a, Eigen::ComputeFullV);
    out.singular_values = svd.singularValues();
    v = svd.matrixV();
  }
  const double top = out.singular_values.size() > 0 ? out.singular_values[0] : 0.0;
  Eigen::Index rank = 0;
  for (Eigen::Index i = 0; i < out.singular_values.size(); ++i) {
    if (out.singular_values[i] > rank_eps * top && top > 0.0) ++rank;
  }
  out.rank = rank;
  for (Eigen::Index j = rank; j < a.cols(); ++j) out.basis.emplace_back(v.col(j));
  return out;
}

}  // namespace poncelet

#endif  // PONCELET_CORE_HOMOGENEOUS_HPP
