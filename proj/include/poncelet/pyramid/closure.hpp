#ifndef PONCELET_PYRAMID_CLOSURE_HPP
#define PONCELET_PYRAMID_CLOSURE_HPP

#include <array>
#include <cmath>
#include <cstddef>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "poncelet/core/homogeneous.hpp"
#include "poncelet/core/matching.hpp"
#include "poncelet/core/mobius.hpp"
#include "poncelet/core/polynomial.hpp"
#include "poncelet/pyramid/canonical.hpp"

namespace poncelet {

/// k * sum_i A_i B_i prod_{j!=i}(x - a_j) - prod_j (x - a_j).
/// The x^{n+1} coefficient is exactly -1 for every k.
inline Polynomial closure_polynomial(const CanonicalConfig& cfg, Scalar k) {
  Polynomial weighted({Scalar(0.0)});
  for (std::size_t i = 0; i < cfg.size(); ++i) {
    weighted += cleared_factor_polynomial(cfg, i) * (cfg.A[i] * cfg.B[i]);
  }
  std::vector<Scalar> c(cfg.size() + 1, Scalar(0.0));
  const Polynomial full = Polynomial::from_roots(cfg.a);
  for (std::size_t j = 0; j < cfg.size(); ++j) c[j] = k * weighted[j] - full[j];
  c[cfg.size()] = Scalar(-1.0);
  return Polynomial(std::move(c));
}

namespace detail {

// Coefficients of f, as a binary form of degree d, in the unitary chart
// s = (tau - t0) / (1 + conj(t0) tau), divided by sqrt(C(d, j)). Unitary
// substitutions preserve the Bombieri norm, so the result is as well
// conditioned for t0 = 100 as for t0 = 0; the affine Taylor expansion is not.
inline std::vector<Scalar> unitary_chart(const std::vector<Scalar>& f, Scalar t0) {
  const std::size_t d = f.size() - 1;
  std::vector<Scalar> g(d + 1, Scalar(0.0));
  for (std::size_t k = 0; k <= d; ++k) {
    // (s + t0)^k (1 - conj(t0) s)^(d - k)
    std::vector<Scalar> term{Scalar(1.0)};
    auto times = [&term](Scalar c0, Scalar c1) {
      std::vector<Scalar> next(term.size() + 1, Scalar(0.0));
      for (std::size_t i = 0; i < term.size(); ++i) {
        next[i] += c0 * term[i];
        next[i + 1] += c1 * term[i];
      }
      term = std::move(next);
    };
    for (std::size_t r = 0; r < k; ++r) times(t0, Scalar(1.0));
    for (std::size_t r = k; r < d; ++r) times(Scalar(1.0), -std::conj(t0));
    for (std::size_t j = 0; j <= d; ++j) g[j] += f[k] * term[j];
  }
  double binom = 1.0;
  for (std::size_t j = 0; j <= d; ++j) {
    g[j] /= std::sqrt(binom);
    binom = binom * static_cast<double>(d - j) / static_cast<double>(j + 1);
  }
  return g;
}

inline double bombieri_norm(const std::vector<Scalar>& f) {
  const std::size_t d = f.size() - 1;
  double acc = 0.0, binom = 1.0;
  for (std::size_t j = 0; j <= d; ++j) {
    acc += std::norm(f[j]) / binom;
    binom = binom * static_cast<double>(d - j) / static_cast<double>(j + 1);
  }
  return std::sqrt(acc);
}

}  // namespace detail

/// Order of vanishing at t0 of tau -> <h(t0), contact(tau)>, read off in a
/// unitary chart centred at t0: a normalized coefficient counts as zero when
/// it is at most root_sep_eps times the Bombieri norm.
inline int check_hyperosculation(const CanonicalConfig& cfg, const std::vector<Polynomial>& contact,
                                 Scalar t0, const Tolerance& tol = {}) {
  const Eigen::VectorXcd h = c2_face_coords(cfg, t0);
  std::size_t size = 1;
  for (const auto& c : contact) size = std::max(size, c.size());
  std::vector<Scalar> f(size, Scalar(0.0));
  double term_scale = 0.0;
  for (std::size_t i = 0; i < contact.size(); ++i) {
    const Scalar hi = h[static_cast<Eigen::Index>(i)];
    std::vector<Scalar> ci(size, Scalar(0.0));
    for (std::size_t k = 0; k < contact[i].size(); ++k) {
      ci[k] = contact[i][k];
      f[k] += hi * ci[k];
    }
    term_scale += std::abs(hi) * detail::bombieri_norm(ci);
  }
  const double norm = detail::bombieri_norm(f);
  if (!(norm > tol.rel_eps * term_scale)) {
    throw Error(ErrorCode::DegenerateContact, "hyperplane contains the whole contact curve");
  }
  const auto g = detail::unitary_chart(f, t0);
  const double cut = tol.root_sep_eps * detail::bombieri_norm(g);
  for (std::size_t j = 0; j < g.size(); ++j) {
    if (std::abs(g[j]) > cut) return static_cast<int>(j);
  }
  return static_cast<int>(g.size());
}

inline int check_hyperosculation(const CanonicalConfig& cfg, Scalar t0, const Tolerance& tol = {}) {
  return check_hyperosculation(cfg, contact_curve(cfg, tol), t0, tol);
}

/// One closed pyramid of the family, with everything measured about it.
struct PyramidFamilyMember {
  Scalar k;
  std::vector<Scalar> roots;              // k_0..k_n
  Pyramid pyramid;                        // vertex i = C1(k_i), face i = C2-face(k_i)
  Eigen::MatrixXd incidence_residuals;    // (l, m): vertex m against face l
  std::vector<int> hyperosculation_orders;
  double max_offdiagonal = 0.0;
  double min_diagonal = 0.0;
  double max_relation_residual = 0.0;     // cleared incidence form at (k_l, k_m) over |h(k_l)| |p(k_m)|
};

/// Builds and measures the member for k without judging it; only the root
/// separation needed to define the pyramid is enforced.
inline PyramidFamilyMember measure_pyramid(const CanonicalConfig& cfg, Scalar k, const Tolerance& tol = {}) {
  const Polynomial closure = closure_polynomial(cfg, k);
  const auto roots = poly_roots(closure, tol.rel_eps);
  if (roots.size() != cfg.size()) {
    throw Error(ErrorCode::ClusteredRoots, "closure equation lost degree (root at infinity)");
  }
  if (min_separation(roots) <= tol.root_sep_eps) {
    throw Error(ErrorCode::ClusteredRoots, "closure equation has a multiple root for this k");
  }

  PyramidFamilyMember member;
  member.k = k;
  member.roots = roots;
  member.pyramid.n = cfg.n;
  for (const Scalar& r : roots) {
    member.pyramid.vertices.push_back(c1_point(cfg, r));
    member.pyramid.faces.push_back(c2_face(cfg, r));
  }
  member.incidence_residuals = pyramid_residuals(member.pyramid);

  const auto size = static_cast<Eigen::Index>(roots.size());
  member.min_diagonal = HUGE_VAL;
  for (Eigen::Index l = 0; l < size; ++l) {
    for (Eigen::Index m = 0; m < size; ++m) {
      const double r = member.incidence_residuals(l, m);
      if (l == m) {
        member.min_diagonal = std::min(member.min_diagonal, r);
      } else {
        member.max_offdiagonal = std::max(member.max_offdiagonal, r);
        const Scalar t = roots[static_cast<std::size_t>(l)];
        const Scalar s = roots[static_cast<std::size_t>(m)];
        // the term-sum scale vanishes with every term at k = 0, the norms do not
        const double norms = c2_face_coords(cfg, t).norm() * c1_point_coords(cfg, s).norm();
        member.max_relation_residual =
            std::max(member.max_relation_residual, std::abs(incidence_value(cfg, t, s)) / norms);
      }
    }
  }
  const auto contact = contact_curve(cfg, tol);
  for (const Scalar& r : roots) member.hyperosculation_orders.push_back(check_hyperosculation(cfg, contact, r, tol));
  return member;
}

/// measure_pyramid plus the checks that make the member a closed,
/// nondegenerate pyramid.
inline PyramidFamilyMember generate_pyramid(const CanonicalConfig& cfg, Scalar k, const Tolerance& tol = {}) {
  PyramidFamilyMember member = measure_pyramid(cfg, k, tol);
  if (member.max_offdiagonal > tol.rel_eps) {
    std::ostringstream msg;
    msg << "off-diagonal incidence residual " << member.max_offdiagonal << " exceeds " << tol.rel_eps;
    throw Error(ErrorCode::ClosureViolation, msg.str());
  }
  if (member.min_diagonal <= 100.0 * tol.rel_eps) {
    throw Error(ErrorCode::DegeneratePyramid, "a vertex lies on its opposite face");
  }
  const auto size = static_cast<Eigen::Index>(member.roots.size());
  Eigen::MatrixXcd vm(size, size);
  for (Eigen::Index m = 0; m < size; ++m) vm.col(m) = member.pyramid.vertices[static_cast<std::size_t>(m)].coords();
  const Eigen::VectorXd sv = Eigen::JacobiSVD<Eigen::MatrixXcd>(vm).singularValues();
  if (!(sv[size - 1] > tol.rank_eps * sv[0])) {
    throw Error(ErrorCode::DegeneratePyramid, "vertices are not independent");
  }
  return member;
}

/// Result for one k of a sweep; exactly one of member / failure is set.
struct SweepOutcome {
  std::size_t index = 0;
  Scalar k;
  std::optional<PyramidFamilyMember> member;
  std::optional<ErrorCode> failure;
  std::string message;

  bool skipped() const noexcept { return failure == ErrorCode::ClusteredRoots; }
};

inline std::vector<SweepOutcome> family_sweep(const CanonicalConfig& cfg, std::span<const Scalar> k_values,
                                              const Tolerance& tol = {}) {
  std::vector<SweepOutcome> out;
  out.reserve(k_values.size());
  for (std::size_t i = 0; i < k_values.size(); ++i) {
    SweepOutcome item;
    item.index = i;
    item.k = k_values[i];
    try {
      item.member = generate_pyramid(cfg, k_values[i], tol);
    } catch (const Error& e) {
      item.failure = e.code();
      item.message = e.what();
    }
    out.push_back(std::move(item));
  }
  return out;
}

struct ConjugacyResult {
  bool conjugate = false;
  std::optional<Mobius> map;
};

/// Whether one projectivity of P^1 carries every vertex parameter to the
/// contact parameter on the opposite face (lists aligned by that pairing).
inline ConjugacyResult conjugacy_check(std::span<const Scalar> vertex_params, std::span<const Scalar> contact_params,
                                       const Tolerance& tol = {}) {
  if (vertex_params.size() != contact_params.size() || vertex_params.size() < 3) {
    throw Error(ErrorCode::DimensionMismatch, "need two aligned lists of at least three parameters");
  }
  const Mobius m = mobius_from_three_pairs({vertex_params[0], vertex_params[1], vertex_params[2]},
                                           {contact_params[0], contact_params[1], contact_params[2]},
                                           tol.root_sep_eps);
  ConjugacyResult result{true, m};
  for (std::size_t i = 3; i < vertex_params.size(); ++i) {
    const Scalar image = m(vertex_params[i]);
    if (!(std::abs(image - contact_params[i]) <= tol.rel_eps * std::max(1.0, std::abs(contact_params[i])))) {
      result.conjugate = false;
    }
  }
  return result;
}

inline Pyramid transport_pyramid(const Pyramid& p, const Projectivity& m) {
  Pyramid out;
  out.n = p.n;
  for (const auto& v : p.vertices) out.vertices.push_back(apply_projectivity(m, v));
  for (const auto& f : p.faces) out.faces.push_back(apply_projectivity(m, f));
  return out;
}

/// Canonical data moved into general position by M.
struct TransportedConfig {
  Pyramid reference;                         // image of the fundamental pyramid
  std::vector<HomogeneousVector> c1_points;  // C1 at the sample parameters
  std::vector<HomogeneousVector> c2_faces;   // C2 hyperosculating faces at the samples
  std::vector<HomogeneousVector> c2_points;  // C2 contact points at the samples
};

inline TransportedConfig transport_config(const CanonicalConfig& cfg, const Projectivity& m,
                                          std::span<const Scalar> samples, const Tolerance& tol = {}) {
  if (m.dimension() != static_cast<Eigen::Index>(cfg.size())) {
    throw Error(ErrorCode::DimensionMismatch, "projectivity does not act on P^n");
  }
  TransportedConfig out;
  out.reference = transport_pyramid(fundamental_pyramid(cfg.n), m);
  const auto contact = contact_curve(cfg, tol);
  for (const Scalar& s : samples) {
    out.c1_points.push_back(apply_projectivity(m, c1_point(cfg, s)));
    out.c2_faces.push_back(apply_projectivity(m, c2_face(cfg, s)));
    out.c2_points.push_back(apply_projectivity(m, c2_point(contact, s, tol)));
  }
  return out;
}

}  // namespace poncelet

#endif  // PONCELET_PYRAMID_CLOSURE_HPP
