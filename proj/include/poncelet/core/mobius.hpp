#ifndef PONCELET_CORE_MOBIUS_HPP
#define PONCELET_CORE_MOBIUS_HPP

#include <array>
#include <cmath>
#include <span>

#include <Eigen/Dense>

#include "poncelet/core/scalar.hpp"

namespace poncelet {

/// Projectivity of P^1 acting on the affine parameter: t -> (a t + b) / (c t + d).
class Mobius {
 public:
  explicit Mobius(const Eigen::Matrix2cd& m, double rel_eps = 1e-9) : m_(m) {
    const double scale = m_.cwiseAbs().maxCoeff();
    if (scale == 0.0) throw Error(ErrorCode::SingularMatrix, "zero Mobius matrix");
    m_ /= scale;
    if (!(std::abs(m_.determinant()) > rel_eps)) {
      throw Error(ErrorCode::SingularMatrix, "degenerate Mobius map");
    }
  }

  static Mobius identity() { return Mobius(Eigen::Matrix2cd::Identity()); }

  const Eigen::Matrix2cd& matrix() const noexcept { return m_; }

  Scalar operator()(Scalar t) const noexcept {
    return (m_(0, 0) * t + m_(0, 1)) / (m_(1, 0) * t + m_(1, 1));
  }

  Mobius inverse() const { return Mobius(m_.inverse()); }

  friend Mobius operator*(const Mobius& f, const Mobius& g) { return Mobius(f.m_ * g.m_); }

 private:
  Eigen::Matrix2cd m_;
};

/// (t1 - t3)(t2 - t4) / ((t1 - t4)(t2 - t3)).
inline Scalar cross_ratio(Scalar t1, Scalar t2, Scalar t3, Scalar t4, double sep_eps = 1e-7) {
  const std::array<Scalar, 4> q{t1, t2, t3, t4};
  if (min_separation(q) <= sep_eps) {
    throw Error(ErrorCode::DegenerateQuadruple, "cross-ratio needs four distinct values");
  }
  return (t1 - t3) * (t2 - t4) / ((t1 - t4) * (t2 - t3));
}

namespace detail {

// sends s0 -> 0, s1 -> 1, s2 -> infinity
inline Eigen::Matrix2cd to_standard_frame(const std::array<Scalar, 3>& s) {
  Eigen::Matrix2cd m;
  m << s[1] - s[2], -s[0] * (s[1] - s[2]),
       s[1] - s[0], -s[2] * (s[1] - s[0]);
  return m;
}

}  // namespace detail

inline Mobius mobius_from_three_pairs(const std::array<Scalar, 3>& src,
                                      const std::array<Scalar, 3>& dst,
                                      double sep_eps = 1e-7) {
  if (min_separation(src) <= sep_eps || min_separation(dst) <= sep_eps) {
    throw Error(ErrorCode::DegenerateTriple, "three distinct values required on each side");
  }
  const Eigen::Matrix2cd to_src = detail::to_standard_frame(src);
  const Eigen::Matrix2cd to_dst = detail::to_standard_frame(dst);
  return Mobius(to_dst.inverse() * to_src);
}

}  // namespace poncelet

#endif  // PONCELET_CORE_MOBIUS_HPP
