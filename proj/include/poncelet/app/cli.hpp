#ifndef PONCELET_APP_CLI_HPP
#define PONCELET_APP_CLI_HPP

#include <cstdlib>
#include <fstream>
#include <iterator>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "poncelet/app/commands.hpp"
#include "poncelet/app/svg.hpp"

namespace poncelet::app {

namespace detail {

struct IoFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoFailure("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) throw IoFailure("cannot read " + path);
  return ss.str();
}

inline void write_output(const std::string& path, const std::string& text, std::ostream& out) {
  if (path == "-") {
    out << text;
    out.flush();
    if (!out) throw IoFailure("cannot write to standard output");
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw IoFailure("cannot open " + path + " for writing");
  f << text;
  f.close();
  if (!f) throw IoFailure("cannot write " + path);
}

}  // namespace detail

/// Runs the command-line tool on args (without the program name). The
/// document goes to out when --out is "-"; diagnostics go to err only.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
               const char* env_tol = std::getenv("PONCELET_TOL")) {
  CLI::App app{"Poncelet-type closure for pyramids and multilaterals", "poncelet"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kToolVersion));

  RunConfig rc;
  std::string k_text, starts_text, format_text = "json", curve_text;
  std::optional<double> tol_flag;

  const std::map<std::string, Format> formats{{"json", Format::Json}, {"csv", Format::Csv}, {"svg", Format::Svg}};
  const std::map<std::string, CurveSource> curves{{"nullspace", CurveSource::Nullspace}, {"pencil", CurveSource::Pencil}};

  auto common = [&](CLI::App* sub) {
    sub->add_option("--n", rc.n, "dimension n (the figure has n + 1 sides or faces)");
    sub->add_option("--seed", rc.seed, "64-bit seed of the configuration generator");
    sub->add_option("--tol", tol_flag, "relative tolerance, overrides PONCELET_TOL");
    sub->add_option("--out", rc.out, "output path, - for standard output");
  };
  CLI::App* pyr = app.add_subcommand("pyramid", "sweep the pyramid family of a seeded configuration");
  common(pyr);
  pyr->add_option("--k", k_text, "k range lo:hi:count");
  pyr->add_option("--format", format_text, "json or csv")->check(CLI::IsMember({"json", "csv"}));

  CLI::App* lat = app.add_subcommand("lateral", "trace laterals on a curve through the vertices of a seeded lateral");
  common(lat);
  lat->add_option("--starts", starts_text, "start range lo:hi:count");
  lat->add_option("--format", format_text, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  lat->add_option("--curve", curve_text, "nullspace or pencil")->check(CLI::IsMember({"nullspace", "pencil"}));
  lat->add_flag("--demo", rc.demo, "use the n = 2 demo pencil t^3 - t, 1");

  CLI::App* plot = app.add_subcommand("plot", "render a real lateral as SVG");
  common(plot);
  plot->add_option("--starts", starts_text, "also draw laterals traced from these starts");
  plot->add_option("--format", format_text, "svg")->check(CLI::IsMember({"svg"}));
  plot->add_option("--curve", curve_text, "nullspace or pencil")->check(CLI::IsMember({"nullspace", "pencil"}));
  plot->add_flag("--demo", rc.demo, "use the n = 2 demo pencil t^3 - t, 1");

  CLI::App* ver = app.add_subcommand("verify", "re-derive and re-check a stored JSON report");
  ver->add_option("--in", rc.in, "stored report")->required();
  ver->add_option("--tol", tol_flag, "relative tolerance, overrides the stored one");
  ver->add_option("--out", rc.out, "output path, - for standard output");
  ver->add_option("--format", format_text, "json or csv")->check(CLI::IsMember({"json", "csv"}));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::Success& e) {
    // --help and --version
    out << (e.get_exit_code() == 0 && dynamic_cast<const CLI::CallForVersion*>(&e) ? std::string(kToolVersion) + "\n"
                                                                                   : app.help());
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "poncelet: " << e.what() << "\n";
    return kUsage;
  }

  try {
    if (*pyr) rc.command = Command::Pyramid;
    if (*lat) rc.command = Command::Lateral;
    if (*plot) rc.command = Command::Plot;
    if (*ver) rc.command = Command::Verify;
    if (rc.command == Command::Plot && plot->count("--format") == 0) format_text = "svg";
    rc.format = formats.at(format_text);
    if (!k_text.empty()) rc.k_range = Range::parse(k_text);
    if (!starts_text.empty()) {
      rc.start_range = Range::parse(starts_text);
      rc.starts_given = true;
    }
    if (!curve_text.empty()) {
      rc.curve = curves.at(curve_text);
    } else if (rc.demo) {
      rc.curve = CurveSource::Pencil;
    }
    if (rc.command == Command::Verify) {
      rc.tol_override = tol_flag;
    } else {
      rc.tol = resolve_tolerance(rc.tol, env_tol, tol_flag);
    }
    rc.validate();

    std::string text;
    int code = kOk;
    switch (rc.command) {
      case Command::Pyramid: {
        const Report r = cmd_pyramid(rc);
        text = render(r, rc.format);
        code = r.exit_code;
        break;
      }
      case Command::Lateral: {
        const Report r = rc.demo ? lateral_report(rc, demo_lateral_setup(rc.tol)) : cmd_lateral(rc);
        text = render(r, rc.format);
        code = r.exit_code;
        break;
      }
      case Command::Verify: {
        const Report r = cmd_verify(rc, detail::read_file(rc.in));
        text = render(r, rc.format);
        code = r.exit_code;
        break;
      }
      case Command::Plot:
        text = cmd_plot(rc);
        break;
    }
    detail::write_output(rc.out, text, out);
    return code;
  } catch (const Error& e) {
    err << "poncelet: " << e.what() << "\n";
    return exit_code_for(e.code());
  } catch (const detail::IoFailure& e) {
    err << "poncelet: " << e.what() << "\n";
    return kIoError;
  }
}

}  // namespace poncelet::app

#endif  // PONCELET_APP_CLI_HPP
