#ifndef PONCELET_LATERAL_CORRESPONDENCE_HPP
#define PONCELET_LATERAL_CORRESPONDENCE_HPP

#include <cmath>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "poncelet/core/matching.hpp"
#include "poncelet/core/polynomial.hpp"
#include "poncelet/lateral/forms.hpp"
#include "poncelet/lateral/sym2.hpp"

namespace poncelet {

/// Quotient of a bivariate numerator N(u, v) by (u - v).
struct DividedDifference {
  Eigen::MatrixXcd quotient;  // bidegree one less than the numerator in u
  double remainder = 0.0;     // largest leftover coefficient, relative to max |N|
};

/// Synthetic division in u with coefficients in C[v], for numerators that
/// are antisymmetric under u <-> v. Quotient coefficients of v-degree at or
/// above the numerator's cannot occur in the exact quotient and are counted
/// as remainder.
inline DividedDifference divide_by_diagonal(const Eigen::MatrixXcd& numerator) {
  const Eigen::Index du = numerator.rows() - 1;
  const Eigen::Index dv = numerator.cols() - 1;
  if (du < 1) throw Error(ErrorCode::DegreeZero, "numerator has no u dependence to divide");
  const Eigen::Index width = dv + du + 1;
  // rows of q: Q_{i}(v) for i = 0..du-1, padded in v
  Eigen::MatrixXcd q = Eigen::MatrixXcd::Zero(du, width);
  Eigen::VectorXcd carry = Eigen::VectorXcd::Zero(width);
  for (Eigen::Index i = du; i >= 1; --i) {
    // Q_{i-1} = N_i + v * Q_i
    Eigen::VectorXcd row = Eigen::VectorXcd::Zero(width);
    row.head(dv + 1) = numerator.row(i).transpose();
    for (Eigen::Index j = width - 1; j >= 1; --j) row[j] += carry[j - 1];
    q.row(i - 1) = row.transpose();
    carry = row;
  }
  Eigen::VectorXcd rem = Eigen::VectorXcd::Zero(width);
  rem.head(dv + 1) = numerator.row(0).transpose();
  for (Eigen::Index j = width - 1; j >= 1; --j) rem[j] += carry[j - 1];

  const double scale = std::max(numerator.cwiseAbs().maxCoeff(), 1e-300);
  double leftover = rem.cwiseAbs().maxCoeff();
  if (width > dv) leftover = std::max(leftover, q.rightCols(width - dv).cwiseAbs().maxCoeff());
  DividedDifference out;
  out.quotient = q.leftCols(dv);
  out.remainder = leftover / scale;
  return out;
}

/// (F(u) G(v) - F(v) G(u)) / (u - v), symmetric of bidegree (d-1, d-1).
inline BivariateForm bezoutiant(const Pencil& pen, const Tolerance& tol = {}) {
  const auto size = static_cast<Eigen::Index>(pen.F.coeffs().size());
  Eigen::MatrixXcd numerator(size, size);
  for (Eigen::Index p = 0; p < size; ++p) {
    for (Eigen::Index q = 0; q < size; ++q) {
      const auto pi = static_cast<std::size_t>(p);
      const auto qi = static_cast<std::size_t>(q);
      numerator(p, q) = pen.F[pi] * pen.G[qi] - pen.F[qi] * pen.G[pi];
    }
  }
  const DividedDifference dd = divide_by_diagonal(numerator);
  if (dd.remainder > tol.rel_eps) {
    throw Error(ErrorCode::RewriteFailure, "divided difference left a nonzero remainder");
  }
  BivariateForm b{dd.quotient};
  b.coeffs = (b.coeffs + b.coeffs.transpose().eval()) * 0.5;
  return b;
}

/// The degree-n ternary form T with T(1, u + v, uv) = B(u, v), obtained by
/// rewriting B in the elementary symmetric functions e1 = u + v, e2 = uv.
inline TernaryForm to_plane_curve(const BivariateForm& b, const Tolerance& tol = {}) {
  const Eigen::Index size = b.coeffs.rows();
  if (size != b.coeffs.cols() || size < 1) {
    throw Error(ErrorCode::DimensionMismatch, "bivariate form must have equal bidegree");
  }
  const double top = b.coeffs.cwiseAbs().maxCoeff();
  if (b.asymmetry() > tol.rel_eps * top) {
    throw Error(ErrorCode::AsymmetricInput, "bivariate form is not symmetric");
  }
  const int n = static_cast<int>(size) - 1;
  // polynomials in (e1, e2) as (n+1) x (n+1) tables indexed [a][b]
  using Table = Eigen::MatrixXcd;
  auto zero = [n] { return Table::Zero(n + 1, n + 1); };
  // power sums P_r = u^r + v^r = e1 P_{r-1} - e2 P_{r-2}
  std::vector<Table> power(static_cast<std::size_t>(n + 1), zero());
  power[0](0, 0) = 2.0;
  if (n >= 1) power[1](1, 0) = 1.0;
  for (int r = 2; r <= n; ++r) {
    Table next = zero();
    for (int a = 0; a <= n; ++a) {
      for (int c = 0; c <= n; ++c) {
        const Scalar prev1 = power[static_cast<std::size_t>(r - 1)](a, c);
        const Scalar prev2 = power[static_cast<std::size_t>(r - 2)](a, c);
        if (prev1 != Scalar(0.0) && a + 1 <= n) next(a + 1, c) += prev1;
        if (prev2 != Scalar(0.0) && c + 1 <= n) next(a, c + 1) -= prev2;
      }
    }
    power[static_cast<std::size_t>(r)] = next;
  }
  Table acc = zero();
  for (int p = 0; p <= n; ++p) {
    for (int q = 0; q <= p; ++q) {
      const Scalar c = b.coeffs(p, q);
      if (c == Scalar(0.0)) continue;
      if (p == q) {
        acc(0, q) += c;  // (uv)^q
        continue;
      }
      // u^p v^q + u^q v^p = e2^q P_{p-q}
      const Table& pw = power[static_cast<std::size_t>(p - q)];
      for (int a = 0; a <= n; ++a) {
        for (int e = 0; e + q <= n; ++e) {
          if (pw(a, e) != Scalar(0.0)) acc(a, e + q) += c * pw(a, e);
        }
      }
    }
  }
  std::vector<Scalar> coeffs;
  for (const Exponent& m : TernaryForm::monomials(n)) coeffs.push_back(acc(m[1], m[2]));
  TernaryForm t(n, std::move(coeffs));

  // defining identity on an (n+2)^2 grid
  for (int i = 0; i < n + 2; ++i) {
    for (int j = 0; j < n + 2; ++j) {
      const Scalar u(-1.0 + 2.0 * i / (n + 1), 0.25 * i / (n + 1));
      const Scalar v(-1.0 + 2.0 * j / (n + 1), -0.5 * j / (n + 1));
      const double scale = std::max(b.abs_scale(u, v), 1e-300);
      if (std::abs(t(pair_coords(u, v)) - b(u, v)) > 1e-10 * scale) {
        throw Error(ErrorCode::RewriteFailure, "symmetric rewrite does not reproduce the form");
      }
    }
  }
  return t;
}

/// General (n+1)-lateral circumscribed about the diagonal conic, given by
/// the tangency parameters of its sides.
struct Multilateral {
  std::vector<Scalar> params;

  static Multilateral make(std::vector<Scalar> params, const Tolerance& tol = {}) {
    if (params.size() < 3) throw Error(ErrorCode::InvalidConfig, "a multilateral needs at least three sides");
    for (const Scalar& p : params) {
      if (!is_finite(p)) throw Error(ErrorCode::InvalidConfig, "non-finite tangency parameter");
    }
    if (min_separation(params) <= tol.root_sep_eps) {
      throw Error(ErrorCode::ClusteredParams, "tangency parameters must be distinct");
    }
    return Multilateral{std::move(params)};
  }

  int n() const noexcept { return static_cast<int>(params.size()) - 1; }

  std::vector<HomogeneousVector> lines() const {
    std::vector<HomogeneousVector> out;
    for (const Scalar& u : params) out.push_back(tangent_line(u));
    return out;
  }

  /// Vertices (i, j), i < j, in lexicographic order.
  std::vector<HomogeneousVector> vertices() const {
    std::vector<HomogeneousVector> out;
    for (std::size_t i = 0; i < params.size(); ++i) {
      for (std::size_t j = i + 1; j < params.size(); ++j) out.push_back(pair_to_point(params[i], params[j]));
    }
    return out;
  }
};

/// (F, G) with F the monic form vanishing on the tangency parameters of L.
inline Pencil pencil_from_multilateral(const Multilateral& l, const BinaryForm& g, const Tolerance& tol = {}) {
  BinaryForm f = BinaryForm::from_roots(l.params);
  if (g.degree() != f.degree()) {
    throw Error(ErrorCode::BadSecondForm, "second form must have degree n + 1");
  }
  Pencil pen = Pencil::make(std::move(f), g, tol);
  const double g_scale = max_modulus(g.coeffs());
  for (const Scalar& u : l.params) {
    double s = 0.0;
    for (std::size_t j = 0; j < g.coeffs().size(); ++j) s += std::abs(g[j]) * std::pow(std::abs(u), static_cast<double>(j));
    if (std::abs(g(u)) <= tol.rel_eps * std::max(s, g_scale)) {
      throw Error(ErrorCode::BadSecondForm, "second form vanishes at a tangency parameter");
    }
  }
  return pen;
}

namespace detail {

inline ExtendedScalar extend(Scalar x) noexcept { return {x.real(), x.imag()}; }
inline Scalar round_down(ExtendedScalar x) noexcept {
  return {static_cast<double>(x.real()), static_cast<double>(x.imag())};
}

inline std::vector<ExtendedScalar> tangent_restriction(const TernaryForm& t, ExtendedScalar u) {
  const int n = t.degree();
  std::vector<ExtendedScalar> upow(static_cast<std::size_t>(2 * n + 1), ExtendedScalar(1.0L));
  for (std::size_t i = 1; i < upow.size(); ++i) upow[i] = upow[i - 1] * u;
  std::vector<ExtendedScalar> out(static_cast<std::size_t>(n + 1), ExtendedScalar(0.0L));
  const auto mons = TernaryForm::monomials(n);
  for (std::size_t m = 0; m < mons.size(); ++m) {
    const Scalar c = t.coeffs()[m];
    if (c == Scalar(0.0)) continue;
    const ExtendedScalar cx = extend(c);
    const int j = mons[m][1];
    const int k = mons[m][2];
    // (u + v)^j (uv)^k = sum_r binom(j, r) u^{j-r+k} v^{r+k}
    long double binom = 1.0L;
    for (int r = 0; r <= j; ++r) {
      out[static_cast<std::size_t>(r + k)] += cx * binom * upow[static_cast<std::size_t>(j - r + k)];
      binom = binom * static_cast<long double>(j - r) / static_cast<long double>(r + 1);
    }
  }
  return out;
}

// Image roots kept in extended precision, so that a trace can feed them back
// in without a rounding step in between.
inline std::vector<ExtendedScalar> correspondence_image(const TernaryForm& t, ExtendedScalar u, const Tolerance& tol) {
  const auto ext = tangent_restriction(t, u);
  std::vector<Scalar> c;
  double total = 0.0;
  for (const auto& x : ext) {
    c.push_back(round_down(x));
    total += std::abs(c.back());
  }
  const int n = t.degree();
  if (!(std::abs(c[static_cast<std::size_t>(n)]) > tol.rel_eps * total)) {
    throw Error(ErrorCode::DegenerateRestriction, "restriction to the tangent line drops degree");
  }
  std::vector<ExtendedScalar> roots;
  for (const Scalar& r : poly_roots(Polynomial(c), 0.0)) roots.push_back(polish_root_extended(ext, extend(r)));
  return roots;
}

}  // namespace detail

/// Restriction v -> T(1, u + v, uv) of T to tangent_line(u), in extended precision.
inline std::vector<detail::ExtendedScalar> tangent_restriction(const TernaryForm& t, Scalar u) {
  return detail::tangent_restriction(t, detail::extend(u));
}

/// Second tangency parameters of the points that tangent_line(u) cuts on T.
inline std::vector<Scalar> correspondence_image(const TernaryForm& t, Scalar u, const Tolerance& tol = {}) {
  std::vector<Scalar> out;
  for (const auto& r : detail::correspondence_image(t, detail::extend(u), tol)) out.push_back(detail::round_down(r));
  return out;
}

/// Outcome of tracing one (n+1)-lateral from a starting tangency parameter.
struct ClosureTraceReport {
  Scalar start;
  std::vector<Scalar> params;           // u_0 = start, then the correspondence image
  std::vector<double> vertex_residuals; // pairs (i, j), i < j, lexicographic
  double symmetry_defect = 0.0;         // chordal distance on P^1, see chordal_distance
  bool verdict = false;

  double max_vertex_residual() const noexcept {
    double m = 0.0;
    for (double r : vertex_residuals) m = std::max(m, r);
    return m;
  }
  double max_residual() const noexcept { return std::max(max_vertex_residual(), symmetry_defect); }
};

inline ClosureTraceReport closure_trace(const TernaryForm& t, Scalar u0, const Tolerance& tol = {}) {
  if (contains_diagonal(t, tol)) {
    throw Error(ErrorCode::ContainsDiagonal, "curve contains the diagonal conic");
  }
  ClosureTraceReport rep;
  rep.start = u0;
  std::vector<detail::ExtendedScalar> params{detail::extend(u0)};
  for (const auto& v : detail::correspondence_image(t, params[0], tol)) params.push_back(v);
  for (const auto& v : params) rep.params.push_back(detail::round_down(v));
  rep.params[0] = u0;
  if (min_separation(rep.params) <= tol.root_sep_eps) {
    throw Error(ErrorCode::ClusteredParams, "traced lateral has coincident sides");
  }
  for (std::size_t i = 0; i < rep.params.size(); ++i) {
    for (std::size_t j = i + 1; j < rep.params.size(); ++j) {
      rep.vertex_residuals.push_back(t.relative_value(pair_coords(rep.params[i], rep.params[j])));
    }
  }
  for (std::size_t i = 0; i < params.size(); ++i) {
    std::vector<Scalar> image;
    for (const auto& v : detail::correspondence_image(t, params[i], tol)) image.push_back(detail::round_down(v));
    std::vector<Scalar> others;
    for (std::size_t j = 0; j < params.size(); ++j) {
      if (j != i) others.push_back(rep.params[j]);
    }
    rep.symmetry_defect = std::max(rep.symmetry_defect, matched_distance(image, others, chordal_distance));
  }
  rep.verdict = rep.max_vertex_residual() < tol.rel_eps && rep.symmetry_defect < tol.rel_eps;
  return rep;
}

/// Linear conditions for a degree-n curve to pass through every vertex of L.
struct InterpolationSystem {
  int n = 0;
  Eigen::MatrixXcd matrix;  // one row per vertex, one column per monomial
  Nullspace kernel;
  int projective_dimension = -1;

  TernaryForm curve(std::span<const Scalar> combination) const {
    if (combination.size() != kernel.basis.size()) {
      throw Error(ErrorCode::DimensionMismatch, "one coefficient per nullspace vector required");
    }
    Eigen::VectorXcd c = Eigen::VectorXcd::Zero(matrix.cols());
    for (std::size_t m = 0; m < combination.size(); ++m) c += combination[m] * kernel.basis[m];
    return TernaryForm(n, std::vector<Scalar>(c.data(), c.data() + c.size()));
  }
};

inline InterpolationSystem interpolation_system(const Multilateral& l, const Tolerance& tol = {}) {
  InterpolationSystem sys;
  sys.n = l.n();
  const auto vertices = l.vertices();
  const auto cols = static_cast<Eigen::Index>(TernaryForm::monomials(sys.n).size());
  sys.matrix.resize(static_cast<Eigen::Index>(vertices.size()), cols);
  for (std::size_t r = 0; r < vertices.size(); ++r) {
    sys.matrix.row(static_cast<Eigen::Index>(r)) =
        TernaryForm::monomial_vector(sys.n, vertices[r].coords()).transpose();
  }
  sys.kernel = nullspace(sys.matrix, tol.rank_eps);
  sys.projective_dimension = static_cast<int>(sys.kernel.basis.size()) - 1;
  if (sys.projective_dimension != sys.n) {
    throw Error(ErrorCode::RankDeviation, "circumscribed curves do not form a system of dimension n");
  }
  return sys;
}

/// One start of a Darboux verification; exactly one of report / failure is set.
struct TraceOutcome {
  std::size_t index = 0;
  Scalar start;
  std::optional<ClosureTraceReport> report;
  std::optional<ErrorCode> failure;
  std::string message;

  bool skipped() const noexcept {
    return failure == ErrorCode::DegenerateRestriction || failure == ErrorCode::ClusteredParams;
  }
};

/// Traces a lateral from every start on a curve circumscribed about L.
/// Starts on a tangency parameter of L are reported as DegenerateRestriction.
inline std::vector<TraceOutcome> darboux_verify(const Multilateral& l, const TernaryForm& curve,
                                                std::span<const Scalar> starts, const Tolerance& tol = {}) {
  std::vector<TraceOutcome> out;
  for (std::size_t i = 0; i < starts.size(); ++i) {
    TraceOutcome item;
    item.index = i;
    item.start = starts[i];
    try {
      for (const Scalar& u : l.params) {
        if (std::abs(u - starts[i]) <= tol.root_sep_eps) {
          throw Error(ErrorCode::DegenerateRestriction, "start coincides with a side of the lateral");
        }
      }
      item.report = closure_trace(curve, starts[i], tol);
    } catch (const Error& e) {
      item.failure = e.code();
      item.message = e.what();
    }
    out.push_back(std::move(item));
  }
  return out;
}

inline std::vector<TraceOutcome> darboux_verify(const Multilateral& l, std::span<const Scalar> combination,
                                                std::span<const Scalar> starts, const Tolerance& tol = {}) {
  const InterpolationSystem sys = interpolation_system(l, tol);
  return darboux_verify(l, sys.curve(combination), starts, tol);
}

}  // namespace poncelet

#endif  // PONCELET_LATERAL_CORRESPONDENCE_HPP
