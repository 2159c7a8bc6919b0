#ifndef PONCELET_APP_REPORT_HPP
#define PONCELET_APP_REPORT_HPP

#include <cmath>
#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "poncelet/core/error.hpp"
#include "poncelet/core/scalar.hpp"

namespace poncelet::app {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchemaVersion = "poncelet/1";

#ifdef PONCELET_VERSION
inline constexpr const char* kToolVersion = PONCELET_VERSION;
#else
inline constexpr const char* kToolVersion = "unknown";
#endif

/// Decimal with 17 significant digits, enough to round-trip any double.
inline std::string format_double(double v) {
  if (!std::isfinite(v)) return "null";
  if (v == 0.0) v = 0.0;  // no "-0"
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

inline Json to_json(Scalar z) { return Json::array({z.real(), z.imag()}); }

inline Json to_json(const std::vector<Scalar>& v) {
  Json out = Json::array();
  for (const Scalar& z : v) out.push_back(to_json(z));
  return out;
}

namespace detail {

inline bool is_flat(const Json& j) {
  for (const auto& e : j) {
    if (e.is_structured()) {
      // arrays of [re, im] pairs stay on one line too
      if (!e.is_array()) return false;
      for (const auto& x : e) {
        if (x.is_structured()) return false;
      }
    }
  }
  return true;
}

inline void write_value(std::ostream& os, const Json& j, int depth) {
  const std::string pad(static_cast<std::size_t>(2 * (depth + 1)), ' ');
  const std::string close_pad(static_cast<std::size_t>(2 * depth), ' ');
  switch (j.type()) {
    case Json::value_t::object: {
      if (j.empty()) {
        os << "{}";
        return;
      }
      os << "{\n";
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) os << ",\n";
        first = false;
        os << pad << Json(it.key()).dump() << ": ";
        write_value(os, it.value(), depth + 1);
      }
      os << "\n" << close_pad << "}";
      return;
    }
    case Json::value_t::array: {
      if (j.empty()) {
        os << "[]";
        return;
      }
      if (is_flat(j)) {
        os << "[";
        bool first = true;
        for (const auto& e : j) {
          if (!first) os << ", ";
          first = false;
          write_value(os, e, depth + 1);
        }
        os << "]";
        return;
      }
      os << "[\n";
      bool first = true;
      for (const auto& e : j) {
        if (!first) os << ",\n";
        first = false;
        os << pad;
        write_value(os, e, depth + 1);
      }
      os << "\n" << close_pad << "]";
      return;
    }
    case Json::value_t::number_float:
      os << format_double(j.get<double>());
      return;
    default:
      os << j.dump();
      return;
  }
}

}  // namespace detail

/// Pretty JSON with stable field order and 17-digit numbers.
inline std::string write_json(const Json& doc) {
  std::ostringstream os;
  detail::write_value(os, doc, 0);
  os << "\n";
  return os.str();
}

inline Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::SchemaError, std::string("input is not valid JSON: ") + e.what());
  }
}

// Schema access helpers: every miss is a SchemaError naming the path.

inline const Json& require(const Json& obj, const char* key, const std::string& where) {
  if (!obj.is_object() || !obj.contains(key)) {
    throw Error(ErrorCode::SchemaError, "missing field '" + where + "." + key + "'");
  }
  return obj.at(key);
}

inline double require_number(const Json& obj, const char* key, const std::string& where) {
  const Json& v = require(obj, key, where);
  if (!v.is_number()) throw Error(ErrorCode::SchemaError, "field '" + where + "." + key + "' must be a number");
  return v.get<double>();
}

inline Scalar scalar_from_json(const Json& v, const std::string& where) {
  if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number()) {
    throw Error(ErrorCode::SchemaError, "field '" + where + "' must be a [re, im] pair");
  }
  return {v[0].get<double>(), v[1].get<double>()};
}

inline std::vector<Scalar> scalars_from_json(const Json& v, const std::string& where) {
  if (!v.is_array()) throw Error(ErrorCode::SchemaError, "field '" + where + "' must be an array");
  std::vector<Scalar> out;
  for (std::size_t i = 0; i < v.size(); ++i) out.push_back(scalar_from_json(v[i], where + "[" + std::to_string(i) + "]"));
  return out;
}

/// Aggregate block shared by every report: counts by verdict and the
/// largest residual over all items that produced one.
inline Json aggregate(const Json& items) {
  std::size_t passed = 0, failed = 0, skipped = 0;
  double worst = 0.0;
  for (const auto& item : items) {
    const std::string verdict = item.at("verdict").get<std::string>();
    if (verdict == "pass") ++passed;
    if (verdict == "fail") ++failed;
    if (verdict == "skip") ++skipped;
    const auto& r = item.at("max_residual");
    if (r.is_number()) worst = std::max(worst, r.get<double>());
  }
  Json out;
  out["items"] = items.size();
  out["passed"] = passed;
  out["failed"] = failed;
  out["skipped"] = skipped;
  out["max_residual"] = worst;
  return out;
}

/// CSV view of a report: item_index, the item's parameter columns split into
/// re/im, max_residual, verdict. Skipped items leave parameter cells empty.
inline std::string write_csv(const Json& doc) {
  const Json& items = doc.at("items");
  const Json& config = doc.at("config");
  std::string command = config.at("command").get<std::string>();
  if (command == "verify") command = config.at("source").get<std::string>();
  const bool pyramid = command == "pyramid";
  const char* lead = pyramid ? "k" : "start";
  const char* list = pyramid ? "roots" : "params";
  std::size_t width = 0;
  for (const auto& item : items) {
    if (item.contains(list)) width = std::max(width, item.at(list).size());
  }
  std::ostringstream os;
  os << "item_index," << lead << "_re," << lead << "_im";
  for (std::size_t i = 0; i < width; ++i) os << "," << list << i << "_re," << list << i << "_im";
  os << ",max_residual,verdict\n";
  for (const auto& item : items) {
    os << item.at("index").get<std::size_t>();
    const Scalar head = scalar_from_json(item.at(lead), lead);
    os << "," << format_double(head.real()) << "," << format_double(head.imag());
    for (std::size_t i = 0; i < width; ++i) {
      if (item.contains(list) && i < item.at(list).size()) {
        const Scalar z = scalar_from_json(item.at(list)[i], list);
        os << "," << format_double(z.real()) << "," << format_double(z.imag());
      } else {
        os << ",,";
      }
    }
    const auto& r = item.at("max_residual");
    os << "," << (r.is_number() ? format_double(r.get<double>()) : std::string()) << ","
       << item.at("verdict").get<std::string>() << "\n";
  }
  return os.str();
}

}  // namespace poncelet::app

#endif  // PONCELET_APP_REPORT_HPP
