#ifndef PONCELET_APP_SVG_HPP
#define PONCELET_APP_SVG_HPP

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

#include "poncelet/app/generate.hpp"
#include "poncelet/app/run_config.hpp"
#include "poncelet/lateral/correspondence.hpp"

// Plots live in the affine chart X = x1 / x0, Y = x2 / x0, where the
// diagonal conic is Y = X^2 / 4, the side tangent at u is Y = u X - u^2,
// the vertex of sides u, v is (u + v, uv) and side u touches at (2u, u^2).

namespace poncelet::app {

inline constexpr int kCanvas = 800;
inline constexpr int kMarchingGrid = 512;
inline constexpr int kConicSamples = 512;
inline constexpr double kRealEps = 1e-9;

namespace detail {

inline std::string fmt2(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  std::string s(buf);
  return s == "-0.00" ? "0.00" : s;
}

inline std::string describe(Scalar z) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g%+.17gi", z.real(), z.imag());
  return buf;
}

inline double require_real(Scalar z, const std::string& what) {
  if (std::abs(z.imag()) > kRealEps) {
    throw Error(ErrorCode::NonRealConfiguration, what + " = " + describe(z) + " is not real");
  }
  return z.real();
}

struct Viewport {
  double x0 = 0.0, y0 = 0.0, side = 1.0;

  double px(double x) const { return (x - x0) / side * kCanvas; }
  double py(double y) const { return kCanvas - (y - y0) / side * kCanvas; }
  double x1() const { return x0 + side; }
};

// Square box around the points with a 10% margin on every side.
inline Viewport fit(const std::vector<std::array<double, 2>>& pts) {
  double lx = pts.front()[0], hx = lx, ly = pts.front()[1], hy = ly;
  for (const auto& p : pts) {
    lx = std::min(lx, p[0]);
    hx = std::max(hx, p[0]);
    ly = std::min(ly, p[1]);
    hy = std::max(hy, p[1]);
  }
  double side = std::max(hx - lx, hy - ly);
  if (!(side > 0.0)) side = 1.0;
  Viewport v;
  v.side = side * 1.2;
  v.x0 = (lx + hx) / 2.0 - v.side / 2.0;
  v.y0 = (ly + hy) / 2.0 - v.side / 2.0;
  return v;
}

// Zero set of T(1, X, Y) by marching squares, one segment per crossing edge
// pair. Ambiguous cells are resolved by the sign at the cell center.
inline std::vector<std::array<double, 4>> marching_squares(const TernaryForm& t, const Viewport& view) {
  const int g = kMarchingGrid;
  const double h = view.side / g;
  const double scale = std::max(t.max_coeff(), 1e-300);
  auto f = [&](double x, double y) { return (t(Eigen::Vector3cd(1.0, x, y)) / scale).real(); };
  std::vector<double> val(static_cast<std::size_t>((g + 1) * (g + 1)));
  for (int j = 0; j <= g; ++j) {
    for (int i = 0; i <= g; ++i) val[static_cast<std::size_t>(j * (g + 1) + i)] = f(view.x0 + i * h, view.y0 + j * h);
  }
  auto at = [&](int i, int j) { return val[static_cast<std::size_t>(j * (g + 1) + i)]; };
  std::vector<std::array<double, 4>> segs;
  for (int j = 0; j < g; ++j) {
    for (int i = 0; i < g; ++i) {
      const double x = view.x0 + i * h, y = view.y0 + j * h;
      // corners counter-clockwise from bottom-left
      const std::array<double, 4> c{at(i, j), at(i + 1, j), at(i + 1, j + 1), at(i, j + 1)};
      const std::array<std::array<double, 2>, 4> p{{{x, y}, {x + h, y}, {x + h, y + h}, {x, y + h}}};
      std::vector<std::array<double, 2>> cross;  // crossing on edge e, in edge order
      for (int e = 0; e < 4; ++e) {
        const double a = c[static_cast<std::size_t>(e)], b = c[static_cast<std::size_t>((e + 1) % 4)];
        if ((a < 0.0) == (b < 0.0)) continue;
        const double s = a / (a - b);
        const auto& pa = p[static_cast<std::size_t>(e)];
        const auto& pb = p[static_cast<std::size_t>((e + 1) % 4)];
        cross.push_back({pa[0] + s * (pb[0] - pa[0]), pa[1] + s * (pb[1] - pa[1])});
      }
      if (cross.size() == 2) {
        segs.push_back({cross[0][0], cross[0][1], cross[1][0], cross[1][1]});
      } else if (cross.size() == 4) {
        // crossings sit on edges 0..3; pairing (0,1)(2,3) isolates corners 1 and 3
        const bool center_neg = f(x + h / 2, y + h / 2) < 0.0;
        const bool corner1_neg = c[1] < 0.0;
        if (center_neg != corner1_neg) {
          segs.push_back({cross[0][0], cross[0][1], cross[1][0], cross[1][1]});
          segs.push_back({cross[2][0], cross[2][1], cross[3][0], cross[3][1]});
        } else {
          segs.push_back({cross[1][0], cross[1][1], cross[2][0], cross[2][1]});
          segs.push_back({cross[3][0], cross[3][1], cross[0][0], cross[0][1]});
        }
      }
    }
  }
  return segs;
}

inline void tangent_lines(std::ostringstream& os, const std::vector<double>& params, const Viewport& v,
                          const char* stroke, const char* extra) {
  for (double u : params) {
    const double xa = v.x0, xb = v.x1();
    os << "    <line x1=\"" << fmt2(v.px(xa)) << "\" y1=\"" << fmt2(v.py(u * xa - u * u)) << "\" x2=\"" << fmt2(v.px(xb))
       << "\" y2=\"" << fmt2(v.py(u * xb - u * u)) << "\" stroke=\"" << stroke << "\" stroke-width=\"1.5\"" << extra
       << "/>\n";
  }
}

inline void vertex_marks(std::ostringstream& os, const std::vector<double>& params, const Viewport& v,
                         const char* fill, double r) {
  for (std::size_t i = 0; i < params.size(); ++i) {
    for (std::size_t j = i + 1; j < params.size(); ++j) {
      os << "    <circle cx=\"" << fmt2(v.px(params[i] + params[j])) << "\" cy=\"" << fmt2(v.py(params[i] * params[j]))
         << "\" r=\"" << fmt2(r) << "\" fill=\"" << fill << "\"/>\n";
    }
  }
}

}  // namespace detail

/// Renders a real lateral, its tangency conic, the curve through its
/// vertices and any laterals traced from the given starts.
inline std::string render_svg(const Multilateral& lateral, const TernaryForm& curve, const std::vector<Scalar>& starts,
                              const Tolerance& tol = {}) {
  using detail::require_real;
  std::vector<double> base;
  for (std::size_t i = 0; i < lateral.params.size(); ++i) {
    base.push_back(require_real(lateral.params[i], "tangency parameter " + std::to_string(i)));
  }
  // a real curve may still carry a common complex phase; divide it out first
  const auto& c = curve.coeffs();
  const auto top = std::max_element(c.begin(), c.end(), [](Scalar x, Scalar y) { return std::abs(x) < std::abs(y); });
  const Scalar phase = *top / std::abs(*top);
  std::vector<Scalar> rotated;
  for (const Scalar& z : c) rotated.emplace_back(z / phase);
  for (std::size_t m = 0; m < rotated.size(); ++m) {
    if (std::abs(rotated[m].imag()) > kRealEps * std::abs(*top)) {
      throw Error(ErrorCode::NonRealConfiguration,
                  "curve coefficient " + std::to_string(m) + " = " + detail::describe(c[m]) + " is not real");
    }
    rotated[m] = rotated[m].real();
  }
  const TernaryForm real_curve(curve.degree(), std::move(rotated));

  std::vector<std::vector<double>> traced;
  const auto outcomes = darboux_verify(lateral, curve, starts, tol);
  for (const auto& o : outcomes) {
    if (!o.report) {
      if (o.skipped()) continue;
      throw Error(*o.failure, o.message.substr(o.message.find(": ") + 2));
    }
    std::vector<double> params;
    for (std::size_t i = 0; i < o.report->params.size(); ++i) {
      params.push_back(require_real(o.report->params[i],
                                    "traced parameter " + std::to_string(i) + " from start " + detail::describe(o.start)));
    }
    traced.push_back(std::move(params));
  }

  std::vector<std::array<double, 2>> pts;
  auto collect = [&pts](const std::vector<double>& ps) {
    for (std::size_t i = 0; i < ps.size(); ++i) {
      pts.push_back({2.0 * ps[i], ps[i] * ps[i]});
      for (std::size_t j = i + 1; j < ps.size(); ++j) pts.push_back({ps[i] + ps[j], ps[i] * ps[j]});
    }
  };
  collect(base);
  for (const auto& t : traced) collect(t);
  const detail::Viewport view = detail::fit(pts);

  using detail::fmt2;
  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << kCanvas << "\" height=\"" << kCanvas
     << "\" viewBox=\"0 0 " << kCanvas << " " << kCanvas << "\">\n"
     << "  <defs><clipPath id=\"view\"><rect x=\"0\" y=\"0\" width=\"" << kCanvas << "\" height=\"" << kCanvas
     << "\"/></clipPath></defs>\n"
     << "  <rect x=\"0\" y=\"0\" width=\"" << kCanvas << "\" height=\"" << kCanvas << "\" fill=\"white\"/>\n"
     << "  <g clip-path=\"url(#view)\">\n";

  os << "    <polyline id=\"conic\" fill=\"none\" stroke=\"#1f77b4\" stroke-width=\"2\" points=\"";
  for (int s = 0; s < kConicSamples; ++s) {
    const double x = view.x0 + view.side * s / (kConicSamples - 1);
    os << (s ? " " : "") << fmt2(view.px(x)) << "," << fmt2(view.py(x * x / 4.0));
  }
  os << "\"/>\n";

  os << "    <path id=\"curve\" fill=\"none\" stroke=\"#d62728\" stroke-width=\"1.5\" d=\"";
  bool first = true;
  for (const auto& s : detail::marching_squares(real_curve, view)) {
    os << (first ? "" : " ") << "M" << fmt2(view.px(s[0])) << " " << fmt2(view.py(s[1])) << "L"
       << fmt2(view.px(s[2])) << " " << fmt2(view.py(s[3]));
    first = false;
  }
  os << "\"/>\n";

  for (const auto& t : traced) detail::tangent_lines(os, t, view, "#7f7f7f", " stroke-dasharray=\"6,4\"");
  detail::tangent_lines(os, base, view, "#2ca02c", "");
  for (const auto& t : traced) detail::vertex_marks(os, t, view, "#7f7f7f", 3.0);
  detail::vertex_marks(os, base, view, "black", 4.5);
  os << "  </g>\n";

  struct Entry {
    const char* color;
    const char* label;
  };
  std::vector<Entry> legend{{"#1f77b4", "conic of tangency"},
                            {"#2ca02c", "sides of the lateral"},
                            {"black", "vertices"},
                            {"#d62728", "curve through the vertices"}};
  if (!traced.empty()) legend.push_back({"#7f7f7f", "traced laterals"});
  const int rows = static_cast<int>(legend.size());
  os << "  <g id=\"legend\" font-family=\"sans-serif\" font-size=\"13\">\n"
     << "    <rect x=\"10\" y=\"10\" width=\"270\" height=\"" << 28 + 20 * rows
     << "\" fill=\"white\" fill-opacity=\"0.85\" stroke=\"#444\"/>\n";
  for (int i = 0; i < rows; ++i) {
    const int y = 30 + 20 * i;
    const Entry& e = legend[static_cast<std::size_t>(i)];
    if (std::string(e.label) == "vertices") {
      os << "    <circle cx=\"32\" cy=\"" << y - 4 << "\" r=\"4.50\" fill=\"" << e.color << "\"/>\n";
    } else {
      os << "    <line x1=\"20\" y1=\"" << y - 4 << "\" x2=\"44\" y2=\"" << y - 4 << "\" stroke=\"" << e.color
         << "\" stroke-width=\"3\"/>\n";
    }
    os << "    <text x=\"52\" y=\"" << y << "\">" << e.label << "</text>\n";
  }
  os << "    <text x=\"20\" y=\"" << 30 + 20 * rows << "\" font-size=\"11\">n = " << lateral.n() << ", view ["
     << fmt2(view.x0) << ", " << fmt2(view.x1()) << "] x [" << fmt2(view.y0) << ", " << fmt2(view.y0 + view.side)
     << "]</text>\n"
     << "  </g>\n</svg>\n";
  return os.str();
}

/// plot: the demo pencil lateral or a seeded one, traced from --starts when given.
inline std::string cmd_plot(const RunConfig& rc) {
  std::vector<Scalar> starts;
  if (rc.starts_given) {
    for (double s : rc.start_range.values()) starts.emplace_back(s);
  }
  if (rc.demo) {
    const LateralSetup setup = demo_lateral_setup(rc.tol);
    return render_svg(setup.lateral, setup.curve(CurveSource::Pencil), starts, rc.tol);
  }
  Rng rng(rc.seed);
  const LateralSetup setup = random_lateral_setup(rng, rc.n, rc.tol);
  return render_svg(setup.lateral, setup.curve(rc.curve), starts, rc.tol);
}

}  // namespace poncelet::app

#endif  // PONCELET_APP_SVG_HPP
