#ifndef PONCELET_APP_RUN_CONFIG_HPP
#define PONCELET_APP_RUN_CONFIG_HPP

#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "poncelet/core/error.hpp"
#include "poncelet/core/scalar.hpp"

namespace poncelet::app {

/// Process exit codes of the command-line tool.
enum ExitCode : int {
  kOk = 0,
  kVerificationFailed = 2,
  kIoError = 3,
  kNonReal = 4,
  kUsage = 64,
  kSchema = 65,
};

inline int exit_code_for(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidConfig:
      return kUsage;
    case ErrorCode::SchemaError:
      return kSchema;
    case ErrorCode::NonRealConfiguration:
      return kNonReal;
    default:
      return kVerificationFailed;
  }
}

enum class Command { Pyramid, Lateral, Verify, Plot };
enum class Format { Json, Csv, Svg };
/// Which curve through the vertices a lateral run traces on.
enum class CurveSource { Nullspace, Pencil };

inline const char* to_string(Command c) noexcept {
  switch (c) {
    case Command::Pyramid: return "pyramid";
    case Command::Lateral: return "lateral";
    case Command::Verify: return "verify";
    case Command::Plot: return "plot";
  }
  return "unknown";
}

inline const char* to_string(Format f) noexcept {
  switch (f) {
    case Format::Json: return "json";
    case Format::Csv: return "csv";
    case Format::Svg: return "svg";
  }
  return "unknown";
}

inline const char* to_string(CurveSource c) noexcept {
  return c == CurveSource::Nullspace ? "nullspace" : "pencil";
}

/// lo:hi:count, sampled inclusively; count 1 is the single value lo.
struct Range {
  double lo = 0.0;
  double hi = 0.0;
  int count = 1;

  static Range parse(const std::string& text) {
    const auto first = text.find(':');
    const auto second = first == std::string::npos ? std::string::npos : text.find(':', first + 1);
    if (second == std::string::npos || text.find(':', second + 1) != std::string::npos) {
      throw Error(ErrorCode::InvalidConfig, "range must look like lo:hi:count, got '" + text + "'");
    }
    Range r;
    try {
      std::size_t used = 0;
      const std::string lo = text.substr(0, first);
      const std::string hi = text.substr(first + 1, second - first - 1);
      const std::string count = text.substr(second + 1);
      r.lo = std::stod(lo, &used);
      if (used != lo.size()) throw std::invalid_argument(lo);
      r.hi = std::stod(hi, &used);
      if (used != hi.size()) throw std::invalid_argument(hi);
      r.count = std::stoi(count, &used);
      if (used != count.size()) throw std::invalid_argument(count);
    } catch (const std::logic_error&) {
      throw Error(ErrorCode::InvalidConfig, "range must look like lo:hi:count, got '" + text + "'");
    }
    r.validate();
    return r;
  }

  void validate() const {
    if (!std::isfinite(lo) || !std::isfinite(hi)) throw Error(ErrorCode::InvalidConfig, "range bounds must be finite");
    if (count < 1) throw Error(ErrorCode::InvalidConfig, "range count must be at least 1");
    if (lo > hi) throw Error(ErrorCode::InvalidConfig, "range needs lo <= hi");
  }

  std::vector<double> values() const {
    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(count));
    if (count == 1) {
      out.push_back(lo);
      return out;
    }
    for (int i = 0; i < count; ++i) {
      // endpoints exact, interior points by interpolation
      out.push_back(i == count - 1 ? hi : lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(count - 1));
    }
    return out;
  }
};

struct RunConfig {
  Command command = Command::Pyramid;
  int n = 2;
  std::uint64_t seed = 0;
  Range k_range{0.1, 5.0, 50};
  Range start_range{-2.0, 2.0, 20};
  bool starts_given = false;
  Tolerance tol;
  std::optional<double> tol_override;  // --tol, applied after everything else
  std::string out = "-";
  std::string in;
  Format format = Format::Json;
  CurveSource curve = CurveSource::Nullspace;
  bool demo = false;

  void validate() const {
    if (command != Command::Verify && !(command == Command::Plot && demo) && n < 2) {
      throw Error(ErrorCode::InvalidConfig, "--n must be at least 2");
    }
    if (n > 12) throw Error(ErrorCode::InvalidConfig, "--n above 12 is not supported");
    k_range.validate();
    start_range.validate();
    tol.validate();
    if (command == Command::Plot && format != Format::Svg) {
      throw Error(ErrorCode::InvalidConfig, "plot only writes svg");
    }
    if (command != Command::Plot && format == Format::Svg) {
      throw Error(ErrorCode::InvalidConfig, "svg output is only available from plot");
    }
    if (command == Command::Verify && in.empty()) throw Error(ErrorCode::InvalidConfig, "verify needs --in");
  }
};

/// Default tolerance, then PONCELET_TOL, then --tol; each sets rel_eps.
inline Tolerance resolve_tolerance(Tolerance base, const char* env_value, std::optional<double> flag) {
  if (env_value != nullptr && *env_value != '\0') {
    char* end = nullptr;
    const double v = std::strtod(env_value, &end);
    if (end == env_value || *end != '\0') {
      throw Error(ErrorCode::InvalidConfig, std::string("PONCELET_TOL is not a number: ") + env_value);
    }
    base.rel_eps = v;
  }
  if (flag) base.rel_eps = *flag;
  base.validate();
  return base;
}

}  // namespace poncelet::app

#endif  // PONCELET_APP_RUN_CONFIG_HPP
