#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "poncelet/lateral/correspondence.hpp"

namespace {

using namespace poncelet;

double uniform(std::mt19937_64& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

Scalar random_complex(std::mt19937_64& rng) { return {uniform(rng, -2, 2), uniform(rng, -2, 2)}; }

std::vector<Scalar> random_params(std::mt19937_64& rng, int count, double min_sep = 0.1) {
  for (;;) {
    std::vector<Scalar> p;
    for (int i = 0; i < count; ++i) p.emplace_back(uniform(rng, -2, 2));
    if (min_separation(p) >= min_sep) return p;
  }
}

BinaryForm random_form(std::mt19937_64& rng, int degree, bool complex_values) {
  std::vector<Scalar> c;
  for (int j = 0; j <= degree; ++j) {
    c.push_back(complex_values ? random_complex(rng) : Scalar(uniform(rng, -2, 2)));
  }
  return BinaryForm(degree, c);
}

TernaryForm demo_curve() {
  // x1^2 - x0 x2 - x0^2 in the order x0^2, x0x1, x0x2, x1^2, x1x2, x2^2
  return TernaryForm(2, {-1.0, 0.0, -1.0, 1.0, 0.0, 0.0});
}

Pencil demo_pencil() {
  return Pencil::make(BinaryForm(3, {0.0, -1.0, 0.0, 1.0}), BinaryForm(3, {1.0}));
}

// Closed-form Bezout matrix of (f, g): coefficient of u^i v^j in
// (f(u) g(v) - f(v) g(u)) / (u - v).
Eigen::MatrixXcd bezout_matrix(const BinaryForm& f, const BinaryForm& g) {
  const int d = f.degree();
  auto fc = [&](int k) { return k <= d ? f[static_cast<std::size_t>(k)] : Scalar(0.0); };
  auto gc = [&](int k) { return k <= d ? g[static_cast<std::size_t>(k)] : Scalar(0.0); };
  Eigen::MatrixXcd b = Eigen::MatrixXcd::Zero(d, d);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      for (int k = 0; k <= std::min(i, j); ++k) b(i, j) += fc(i + j + 1 - k) * gc(k) - fc(k) * gc(i + j + 1 - k);
    }
  }
  return b;
}

double set_distance(std::vector<Scalar> a, std::vector<Scalar> b) { return matched_distance(a, b); }

TEST(Sym2, PairToPoint) {
  const auto origin = pair_to_point(0.0, 0.0);
  EXPECT_EQ(origin[0], Scalar(1.0));
  EXPECT_EQ(origin[1], Scalar(0.0));
  EXPECT_EQ(origin[2], Scalar(0.0));

  const auto p = pair_to_point(1.0, 2.0);
  EXPECT_NEAR(std::abs(p[0] - Scalar(1.0 / 3.0)), 0.0, 1e-15);
  EXPECT_EQ(p[1], Scalar(1.0));
  EXPECT_NEAR(std::abs(p[2] - Scalar(2.0 / 3.0)), 0.0, 1e-15);

  std::mt19937_64 rng(1);
  for (int i = 0; i < 20; ++i) {
    const Scalar u = random_complex(rng), v = random_complex(rng);
    EXPECT_EQ(pair_to_point(u, v).coords(), pair_to_point(v, u).coords());
  }
}

TEST(Sym2, PointToPair) {
  const auto [u, v] = point_to_pair(HomogeneousVector::point(Eigen::Vector3cd(1.0, 3.0, 2.0)));
  EXPECT_NEAR(std::abs(u - Scalar(1.0)), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(v - Scalar(2.0)), 0.0, 1e-15);

  const Scalar w(0.7, -0.3);
  const auto [d1, d2] = point_to_pair(HomogeneousVector::point(Eigen::Vector3cd(1.0, 2.0 * w, w * w)));
  EXPECT_NEAR(std::abs(d1 - w), 0.0, 1e-7);
  EXPECT_NEAR(std::abs(d2 - w), 0.0, 1e-7);

  try {
    point_to_pair(HomogeneousVector::point(Eigen::Vector3cd(0.0, 1.0, 2.0)));
    FAIL() << "expected ChartFailure";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ChartFailure);
  }
}

TEST(Sym2, RoundTrip) {
  std::mt19937_64 rng(2);
  for (int i = 0; i < 200; ++i) {
    const Scalar u = random_complex(rng), v = random_complex(rng);
    const auto p = pair_to_point(u, v);
    const auto [a, b] = point_to_pair(p);
    const auto back = pair_to_point(a, b);
    EXPECT_LT((back.coords() - p.coords()).cwiseAbs().maxCoeff(), 1e-10);
    EXPECT_LT(set_distance({a, b}, {u, v}), 1e-9);
  }
}

TEST(Sym2, DiagonalConic) {
  const TernaryForm g = diagonal_conic();
  EXPECT_EQ(g(Eigen::Vector3cd(1.0, 2.0, 1.0)), Scalar(0.0));
  EXPECT_EQ(g(Eigen::Vector3cd(1.0, 3.0, 2.0)), Scalar(1.0));
  // symmetric matrix of x1^2 - 4 x0 x2
  Eigen::Matrix3d m;
  m << 0, 0, -2, 0, 1, 0, -2, 0, 0;
  EXPECT_EQ(Eigen::FullPivLU<Eigen::Matrix3d>(m).rank(), 3);
  std::mt19937_64 rng(3);
  for (int i = 0; i < 20; ++i) {
    const Scalar u = random_complex(rng);
    EXPECT_LT(std::abs(g(pair_coords(u, u))), 1e-13);
  }
}

TEST(Sym2, TangentLine) {
  const auto l0 = tangent_line(0.0);
  EXPECT_EQ(l0[0], Scalar(0.0));
  EXPECT_EQ(l0[1], Scalar(0.0));
  EXPECT_EQ(l0[2], Scalar(1.0));

  std::mt19937_64 rng(4);
  for (int i = 0; i < 50; ++i) {
    const Scalar u = random_complex(rng), v = random_complex(rng);
    EXPECT_LT(incidence_residual(pair_to_point(u, v), tangent_line(u)), 1e-15);
  }
}

TEST(Sym2, DiagonalTangency) {
  // Gamma restricted to the tangent at u: (u + v)^2 - 4uv = (v - u)^2
  std::mt19937_64 rng(5);
  for (int i = 0; i < 50; ++i) {
    const Scalar u = random_complex(rng);
    const auto r = tangent_restriction(diagonal_conic(), u);
    ASSERT_EQ(r.size(), 3u);
    const auto disc = r[1] * r[1] - 4.0L * r[0] * r[2];
    EXPECT_LT(static_cast<double>(std::abs(disc)), 1e-12);
    const Scalar root = -Scalar(static_cast<double>((r[1] / (2.0L * r[2])).real()),
                                static_cast<double>((r[1] / (2.0L * r[2])).imag()));
    EXPECT_LT(std::abs(root - u), 1e-12);
  }
}

TEST(Bezoutiant, DemoPencil) {
  const BivariateForm b = bezoutiant(demo_pencil());
  Eigen::MatrixXcd expected = Eigen::MatrixXcd::Zero(3, 3);
  expected(0, 0) = -1.0;
  expected(2, 0) = 1.0;
  expected(1, 1) = 1.0;
  expected(0, 2) = 1.0;
  EXPECT_EQ(b.coeffs, expected);
}

TEST(Bezoutiant, VanishesOnPairsOfRootsOfF) {
  std::mt19937_64 rng(6);
  for (int d = 2; d <= 7; ++d) {
    const auto roots = random_params(rng, d);
    const Pencil pen = Pencil::make(BinaryForm::from_roots(roots), random_form(rng, d, true));
    const BivariateForm b = bezoutiant(pen);
    for (const Scalar& u : roots) {
      for (const Scalar& v : roots) {
        if (u == v) continue;
        EXPECT_LT(std::abs(b(u, v)), 1e-11 * b.abs_scale(u, v));
      }
    }
  }
}

TEST(Bezoutiant, AntisymmetricInThePencilOrder) {
  std::mt19937_64 rng(7);
  for (int d = 2; d <= 6; ++d) {
    const BinaryForm f = random_form(rng, d, true), g = random_form(rng, d, true);
    const auto fg = bezoutiant(Pencil::make(f, g));
    const auto gf = bezoutiant(Pencil::make(g, f));
    EXPECT_EQ(fg.coeffs, (-gf.coeffs).eval());
  }
}

TEST(Bezoutiant, ExactDivisionMatchesClosedForm) {
  std::mt19937_64 rng(8);
  for (int d = 1; d <= 9; ++d) {
    for (int trial = 0; trial < 5; ++trial) {
      const BinaryForm f = random_form(rng, d, trial % 2 == 1);
      const BinaryForm g = random_form(rng, d, trial % 2 == 1);
      Eigen::MatrixXcd numerator(d + 1, d + 1);
      for (int p = 0; p <= d; ++p) {
        for (int q = 0; q <= d; ++q) numerator(p, q) = f[p] * g[q] - f[q] * g[p];
      }
      const auto dd = divide_by_diagonal(numerator);
      EXPECT_LT(dd.remainder, 1e-14) << "d=" << d;
      const Eigen::MatrixXcd oracle = bezout_matrix(f, g);
      const double scale = oracle.cwiseAbs().maxCoeff();
      EXPECT_LT((dd.quotient - oracle).cwiseAbs().maxCoeff(), 1e-13 * scale);
      EXPECT_LT((bezoutiant(Pencil::make(f, g)).coeffs - oracle).cwiseAbs().maxCoeff(), 1e-13 * scale);
    }
  }
}

TEST(Bezoutiant, RejectsDependentPencil) {
  const BinaryForm f(3, {0.0, -1.0, 0.0, 1.0});
  const BinaryForm twice(3, {0.0, -2.0, 0.0, 2.0});
  try {
    Pencil::make(f, twice);
    FAIL() << "expected DependentPencil";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DependentPencil);
  }
}

TEST(PlaneCurve, DemoRewrite) {
  const TernaryForm t = to_plane_curve(bezoutiant(demo_pencil()));
  const TernaryForm expected = demo_curve();
  for (std::size_t m = 0; m < expected.coeffs().size(); ++m) {
    EXPECT_LT(std::abs(t.coeffs()[m] - expected.coeffs()[m]), 1e-15) << m;
  }
}

TEST(PlaneCurve, ConstantGivesPowerOfX0) {
  for (int n = 0; n <= 4; ++n) {
    BivariateForm b{Eigen::MatrixXcd::Zero(n + 1, n + 1)};
    b.coeffs(0, 0) = 1.0;
    const TernaryForm t = to_plane_curve(b);
    for (const auto& e : TernaryForm::monomials(n)) {
      EXPECT_EQ(t.coeff(e), Scalar(e[0] == n ? 1.0 : 0.0));
    }
  }
}

TEST(PlaneCurve, RejectsAsymmetricInput) {
  BivariateForm b{Eigen::MatrixXcd::Zero(2, 2)};
  b.coeffs(0, 1) = 1.0;
  try {
    to_plane_curve(b);
    FAIL() << "expected AsymmetricInput";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::AsymmetricInput);
  }
}

TEST(PlaneCurve, RewriteIdentityOnRandomPoints) {
  std::mt19937_64 rng(9);
  for (int n = 1; n <= 8; ++n) {
    const Pencil pen = Pencil::make(random_form(rng, n + 1, true), random_form(rng, n + 1, true));
    const BivariateForm b = bezoutiant(pen);
    const TernaryForm t = to_plane_curve(b);
    EXPECT_EQ(t.degree(), n);
    for (int i = 0; i < 200; ++i) {
      const Scalar u = random_complex(rng), v = random_complex(rng);
      const double scale = std::max(b.abs_scale(u, v), t.abs_scale(pair_coords(u, v)));
      EXPECT_LT(std::abs(t(pair_coords(u, v)) - b(u, v)), 1e-10 * scale);
    }
  }
}

TEST(Multilateral, Construction) {
  const auto l = Multilateral::make({0.0, 1.0, -1.0});
  EXPECT_EQ(l.n(), 2);
  EXPECT_EQ(l.lines().size(), 3u);
  EXPECT_EQ(l.vertices().size(), 3u);
  try {
    Multilateral::make({0.0, 1.0, 1.0});
    FAIL() << "expected ClusteredParams";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ClusteredParams);
  }
}

TEST(PencilFromMultilateral, DemoAndErrors) {
  const auto l = Multilateral::make({0.0, 1.0, -1.0});
  const Pencil pen = pencil_from_multilateral(l, BinaryForm(3, {1.0}));
  const std::vector<Scalar> expected{0.0, -1.0, 0.0, 1.0};
  for (std::size_t j = 0; j < 4; ++j) EXPECT_LT(std::abs(pen.F[j] - expected[j]), 1e-15);

  try {
    pencil_from_multilateral(l, BinaryForm(3, {0.0, -1.0, 0.0, 1.0}));
    FAIL() << "expected DependentPencil";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DependentPencil);
  }
  try {
    // vanishes at u = 1 but is not proportional to F
    pencil_from_multilateral(l, BinaryForm(3, {-1.0, 1.0}));
    FAIL() << "expected BadSecondForm";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::BadSecondForm);
  }
  EXPECT_THROW(pencil_from_multilateral(l, BinaryForm(2, {1.0})), Error);
}

TEST(PencilFromMultilateral, CurveVanishesAtEveryVertex) {
  std::mt19937_64 rng(10);
  for (int n = 2; n <= 6; ++n) {
    for (int trial = 0; trial < 5; ++trial) {
      const auto l = Multilateral::make(random_params(rng, n + 1));
      const Pencil pen = pencil_from_multilateral(l, random_form(rng, n + 1, trial % 2 == 1));
      const TernaryForm t = to_plane_curve(bezoutiant(pen));
      for (const auto& v : l.vertices()) EXPECT_LT(t.relative_value(v.coords()), 1e-10);
    }
  }
}

TEST(Correspondence, DemoImages) {
  const TernaryForm t = demo_curve();
  const auto at0 = correspondence_image(t, 0.0);
  EXPECT_LT(set_distance(at0, {1.0, -1.0}), 1e-14);
  const auto at1 = correspondence_image(t, 1.0);
  EXPECT_LT(set_distance(at1, {0.0, -1.0}), 1e-14);
}

TEST(Correspondence, AgreesWithThePencil) {
  // the other roots of G(u) F - F(u) G
  std::mt19937_64 rng(11);
  for (int n = 2; n <= 5; ++n) {
    for (int trial = 0; trial < 50; ++trial) {
      const Pencil pen = Pencil::make(random_form(rng, n + 1, trial % 2 == 1), random_form(rng, n + 1, trial % 2 == 1));
      const TernaryForm t = to_plane_curve(bezoutiant(pen));
      const Scalar u0(uniform(rng, -2, 2), trial % 2 == 1 ? uniform(rng, -1, 1) : 0.0);
      const Polynomial member = pen.F.polynomial() * pen.G(u0) - pen.G.polynomial() * pen.F(u0);
      Polynomial rest = member.deflate(u0);
      const auto expected = poly_roots(rest);
      const auto got = correspondence_image(t, u0);
      EXPECT_LT(set_distance(got, expected), 1e-7) << "n=" << n;
    }
  }
}

TEST(Correspondence, DegenerateRestriction) {
  // x0 * (x1^2 - x0 x2 - x0^2) contains no tangent line, but x2 * x0 contains
  // the tangent at u = 0 (the line x2 = 0)
  const TernaryForm t(2, {0.0, 0.0, 1.0, 0.0, 0.0, 0.0});
  try {
    correspondence_image(t, 0.0);
    FAIL() << "expected DegenerateRestriction";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DegenerateRestriction);
  }
}

TEST(ClosureTrace, DemoStartingAtASide) {
  const auto rep = closure_trace(demo_curve(), 0.0);
  EXPECT_LT(set_distance(rep.params, {0.0, 1.0, -1.0}), 1e-14);
  EXPECT_EQ(rep.vertex_residuals.size(), 3u);
  EXPECT_LT(rep.max_vertex_residual(), 1e-12);
  EXPECT_TRUE(rep.verdict);
}

TEST(ClosureTrace, DemoClosesFromAGenericStart) {
  const auto rep = closure_trace(demo_curve(), 2.0);
  ASSERT_EQ(rep.params.size(), 3u);
  EXPECT_EQ(rep.params[0], Scalar(2.0));
  EXPECT_LT(rep.max_vertex_residual(), 1e-9);
  EXPECT_LT(rep.symmetry_defect, 1e-9);
  EXPECT_TRUE(rep.verdict);
}

TEST(ClosureTrace, RandomCurveDoesNotClose) {
  std::mt19937_64 rng(12);
  int open = 0;
  const int trials = 20;
  for (int i = 0; i < trials; ++i) {
    std::vector<Scalar> c;
    for (int m = 0; m < 10; ++m) c.emplace_back(uniform(rng, -1, 1));
    const TernaryForm t(3, c);
    const auto rep = closure_trace(t, uniform(rng, -2, 2));
    if (!rep.verdict && rep.max_residual() > 1e-3) ++open;
  }
  EXPECT_GE(open, trials * 9 / 10);
}

TEST(ClosureTrace, RejectsCurvesContainingTheDiagonal) {
  // x0 * (x1^2 - 4 x0 x2), degree 3
  std::vector<Scalar> c(10, 0.0);
  c[TernaryForm::monomial_index(3, {1, 2, 0})] = 1.0;
  c[TernaryForm::monomial_index(3, {2, 0, 1})] = -4.0;
  const TernaryForm t(3, c);
  EXPECT_TRUE(contains_diagonal(t));
  EXPECT_FALSE(contains_diagonal(demo_curve()));
  try {
    closure_trace(t, 0.5);
    FAIL() << "expected ContainsDiagonal";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ContainsDiagonal);
  }
}

TEST(Interpolation, DemoLateral) {
  const auto sys = interpolation_system(Multilateral::make({0.0, 1.0, -1.0}));
  EXPECT_EQ(sys.matrix.rows(), 3);
  EXPECT_EQ(sys.matrix.cols(), 6);
  EXPECT_EQ(sys.projective_dimension, 2);
  // the demo curve lies in the kernel
  const TernaryForm demo = demo_curve();
  const auto& c = demo.coeffs();
  const Eigen::VectorXcd v = Eigen::Map<const Eigen::VectorXcd>(c.data(), 6);
  EXPECT_LT((sys.matrix * v).cwiseAbs().maxCoeff(), 1e-14);
}

TEST(Interpolation, RankLaw) {
  std::mt19937_64 rng(13);
  for (int n = 2; n <= 6; ++n) {
    for (int trial = 0; trial < 5; ++trial) {
      const auto l = Multilateral::make(random_params(rng, n + 1));
      const auto sys = interpolation_system(l);
      EXPECT_EQ(sys.matrix.rows(), (n + 1) * n / 2);
      EXPECT_EQ(sys.matrix.cols(), (n + 2) * (n + 1) / 2);
      EXPECT_EQ(sys.projective_dimension, n);
      EXPECT_GT(sys.kernel.gap_ratio(), 1e6);
    }
  }
  const auto sys4 = interpolation_system(Multilateral::make(random_params(rng, 5)));
  EXPECT_EQ(sys4.matrix.rows(), 10);
  EXPECT_EQ(sys4.matrix.cols(), 15);
  EXPECT_EQ(sys4.kernel.rank, 10);
}

TEST(Interpolation, BezoutiantCurveLiesInTheKernel) {
  std::mt19937_64 rng(14);
  for (int n = 2; n <= 6; ++n) {
    const auto l = Multilateral::make(random_params(rng, n + 1));
    const auto sys = interpolation_system(l);
    const TernaryForm t = to_plane_curve(bezoutiant(pencil_from_multilateral(l, random_form(rng, n + 1, false))));
    Eigen::VectorXcd v = Eigen::Map<const Eigen::VectorXcd>(t.coeffs().data(), static_cast<Eigen::Index>(t.coeffs().size()));
    v /= v.norm();
    // component outside the kernel span
    Eigen::MatrixXcd basis(v.size(), static_cast<Eigen::Index>(sys.kernel.basis.size()));
    for (std::size_t m = 0; m < sys.kernel.basis.size(); ++m) basis.col(static_cast<Eigen::Index>(m)) = sys.kernel.basis[m];
    const Eigen::VectorXcd outside = v - basis * (basis.adjoint() * v);
    EXPECT_LT(outside.norm(), 1e-10);
  }
}

TEST(Darboux, BezoutiantCurveTwentyStarts) {
  std::mt19937_64 rng(15);
  const auto l = Multilateral::make(random_params(rng, 4));
  const TernaryForm t = to_plane_curve(bezoutiant(pencil_from_multilateral(l, random_form(rng, 4, false))));
  std::vector<Scalar> starts;
  for (int i = 0; i < 20; ++i) starts.emplace_back(uniform(rng, -3, 3));
  const auto out = darboux_verify(l, t, starts);
  ASSERT_EQ(out.size(), 20u);
  for (const auto& item : out) {
    ASSERT_TRUE(item.report.has_value()) << item.message;
    EXPECT_TRUE(item.report->verdict) << item.report->max_residual();
  }
}

TEST(Darboux, RandomKernelCurvesClose) {
  // the closure defect of a curve stored in double is rounding times the
  // conditioning of the trace, which reaches a few 1e-9 for n = 5
  Tolerance tol;
  tol.rel_eps = 1e-8;
  std::mt19937_64 rng(16);
  for (int n = 2; n <= 6; ++n) {
    int draws = 0;
    while (draws < 50) {
      const auto l = Multilateral::make(random_params(rng, n + 1));
      std::vector<Scalar> combination;
      for (int m = 0; m <= n; ++m) combination.emplace_back(uniform(rng, -1, 1));
      const std::vector<Scalar> starts{uniform(rng, -3, 3), uniform(rng, -3, 3)};
      for (const auto& item : darboux_verify(l, combination, starts, tol)) {
        if (item.skipped()) continue;
        ASSERT_TRUE(item.report.has_value()) << item.message;
        EXPECT_TRUE(item.report->verdict) << "n=" << n << " residual " << item.report->max_residual();
        EXPECT_LT(item.report->max_residual(), 1e-8);
        ++draws;
      }
    }
  }
}

TEST(Darboux, StartOnASideIsDegenerate) {
  const auto l = Multilateral::make({0.0, 1.0, -1.0});
  const std::vector<Scalar> starts{1.0, 0.5};
  const auto out = darboux_verify(l, demo_curve(), starts);
  ASSERT_EQ(out.size(), 2u);
  EXPECT_EQ(out[0].failure, ErrorCode::DegenerateRestriction);
  EXPECT_TRUE(out[0].skipped());
  ASSERT_TRUE(out[1].report.has_value());
  EXPECT_TRUE(out[1].report->verdict);
}

TEST(Darboux, EmptyStarts) {
  const auto l = Multilateral::make({0.0, 1.0, -1.0});
  EXPECT_TRUE(darboux_verify(l, demo_curve(), std::vector<Scalar>{}).empty());
}

TEST(Injectivity, DistinctPencilsGiveDistinctCurves) {
  std::mt19937_64 rng(17);
  for (int n = 2; n <= 5; ++n) {
    const auto l = Multilateral::make(random_params(rng, n + 1));
    const TernaryForm a = to_plane_curve(bezoutiant(pencil_from_multilateral(l, random_form(rng, n + 1, false))));
    const TernaryForm b = to_plane_curve(bezoutiant(pencil_from_multilateral(l, random_form(rng, n + 1, false))));
    Eigen::MatrixXcd m(2, static_cast<Eigen::Index>(a.coeffs().size()));
    for (std::size_t j = 0; j < a.coeffs().size(); ++j) {
      m(0, static_cast<Eigen::Index>(j)) = a.coeffs()[j];
      m(1, static_cast<Eigen::Index>(j)) = b.coeffs()[j];
    }
    const Eigen::VectorXd sv = Eigen::JacobiSVD<Eigen::MatrixXcd>(m).singularValues();
    EXPECT_GT(sv[1] / sv[0], 1e-6);
  }
}

}  // namespace
