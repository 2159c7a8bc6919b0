#ifndef PONCELET_APP_COMMANDS_HPP
#define PONCELET_APP_COMMANDS_HPP

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

#include "poncelet/app/generate.hpp"
#include "poncelet/app/report.hpp"
#include "poncelet/app/run_config.hpp"
#include "poncelet/lateral/correspondence.hpp"
#include "poncelet/pyramid/closure.hpp"

namespace poncelet::app {

/// A finished document and the exit code it implies.
struct Report {
  Json document;
  int exit_code = kOk;
};

namespace detail {

inline Json tolerance_json(const Tolerance& tol) {
  Json t;
  t["rel_eps"] = tol.rel_eps;
  t["rank_eps"] = tol.rank_eps;
  t["root_sep_eps"] = tol.root_sep_eps;
  return t;
}

inline Tolerance tolerance_from_json(const Json& t) {
  Tolerance tol;
  tol.rel_eps = require_number(t, "rel_eps", "config.tolerance");
  tol.rank_eps = require_number(t, "rank_eps", "config.tolerance");
  tol.root_sep_eps = require_number(t, "root_sep_eps", "config.tolerance");
  try {
    tol.validate();
  } catch (const Error& e) {
    throw Error(ErrorCode::SchemaError, e.what());
  }
  return tol;
}

inline Json range_json(const Range& r) {
  Json j;
  j["lo"] = r.lo;
  j["hi"] = r.hi;
  j["count"] = r.count;
  return j;
}

inline Json failure_item(std::size_t index, const char* lead, Scalar value, const std::string& message, bool skipped) {
  Json item;
  item["index"] = index;
  item[lead] = to_json(value);
  item["verdict"] = skipped ? "skip" : "fail";
  item["max_residual"] = nullptr;
  item["error"] = message;
  return item;
}

inline bool pyramid_skip(ErrorCode c) noexcept {
  return c == ErrorCode::ClusteredRoots || c == ErrorCode::DegeneratePyramid || c == ErrorCode::DegenerateContact;
}

inline bool lateral_skip(ErrorCode c) noexcept {
  return c == ErrorCode::DegenerateRestriction || c == ErrorCode::ClusteredParams;
}

inline int exit_code_from_items(const Json& items) {
  for (const auto& item : items) {
    if (item.at("verdict") == "fail") return kVerificationFailed;
  }
  return kOk;
}

}  // namespace detail

/// One family member as a report item. The verdict is pass when the pyramid
/// closes within rel_eps and every face hyperosculates to order n.
inline Json pyramid_item(const CanonicalConfig& cfg, std::size_t index, Scalar k, const Tolerance& tol) {
  PyramidFamilyMember member;
  std::string error;
  try {
    member = generate_pyramid(cfg, k, tol);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::ClosureViolation) return detail::failure_item(index, "k", k, e.what(), detail::pyramid_skip(e.code()));
    member = measure_pyramid(cfg, k, tol);
    error = e.what();
  }
  const bool orders_ok = std::all_of(member.hyperosculation_orders.begin(), member.hyperosculation_orders.end(),
                                     [&cfg](int o) { return o == cfg.n; });
  Json item;
  item["index"] = index;
  item["k"] = to_json(k);
  item["verdict"] = error.empty() && orders_ok ? "pass" : "fail";
  item["max_residual"] = member.max_offdiagonal;
  item["roots"] = to_json(member.roots);
  item["max_offdiagonal"] = member.max_offdiagonal;
  item["min_diagonal"] = member.min_diagonal;
  item["max_relation_residual"] = member.max_relation_residual;
  item["hyperosculation_orders"] = member.hyperosculation_orders;
  if (!error.empty()) {
    item["error"] = error;
  } else if (!orders_ok) {
    item["error"] = "hyperosculation order differs from n";
  }
  return item;
}

/// One traced lateral as a report item.
inline Json lateral_item(const Multilateral& lateral, const TernaryForm& curve, std::size_t index, Scalar start,
                         const Tolerance& tol) {
  const std::vector<Scalar> one{start};
  const TraceOutcome outcome = darboux_verify(lateral, curve, one, tol).front();
  if (!outcome.report) {
    return detail::failure_item(index, "start", start, outcome.message, outcome.skipped());
  }
  const ClosureTraceReport& rep = *outcome.report;
  Json item;
  item["index"] = index;
  item["start"] = to_json(start);
  item["verdict"] = rep.verdict ? "pass" : "fail";
  item["max_residual"] = rep.max_residual();
  item["params"] = to_json(rep.params);
  item["max_vertex_residual"] = rep.max_vertex_residual();
  item["symmetry_defect"] = rep.symmetry_defect;
  return item;
}

inline Report cmd_pyramid(const RunConfig& rc) {
  Rng rng(rc.seed);
  const CanonicalConfig cfg = random_canonical_config(rng, rc.n, rc.tol);

  Json config;
  config["command"] = "pyramid";
  config["tool"] = kToolVersion;
  config["n"] = rc.n;
  config["seed"] = rc.seed;
  config["k"] = detail::range_json(rc.k_range);
  config["tolerance"] = detail::tolerance_json(rc.tol);
  Json canonical;
  canonical["a"] = to_json(cfg.a);
  canonical["A"] = to_json(cfg.A);
  canonical["B"] = to_json(cfg.B);
  config["canonical"] = canonical;

  Json items = Json::array();
  const auto ks = rc.k_range.values();
  for (std::size_t i = 0; i < ks.size(); ++i) items.push_back(pyramid_item(cfg, i, ks[i], rc.tol));

  Report r;
  r.document["version"] = kSchemaVersion;
  r.document["config"] = config;
  r.document["items"] = items;
  r.document["aggregate"] = aggregate(items);
  r.exit_code = detail::exit_code_from_items(items);
  return r;
}

inline Json lateral_config_json(const LateralSetup& setup, CurveSource source) {
  const TernaryForm& curve = setup.curve(source);
  Json lateral;
  lateral["params"] = to_json(setup.lateral.params);
  lateral["second_form"] = to_json(setup.second_form.coeffs());
  lateral["combination"] = to_json(setup.combination);
  lateral["curve_source"] = to_string(source);
  Json c;
  c["degree"] = curve.degree();
  c["coeffs"] = to_json(curve.coeffs());
  lateral["curve"] = c;
  return lateral;
}

/// Largest relative value of the curve over the vertices of the lateral.
inline double vertex_fit(const Multilateral& lateral, const TernaryForm& curve) {
  double worst = 0.0;
  for (const auto& v : lateral.vertices()) worst = std::max(worst, curve.relative_value(v.coords()));
  return worst;
}

inline Report lateral_report(const RunConfig& rc, const LateralSetup& setup) {
  const TernaryForm& curve = setup.curve(rc.curve);
  Json config;
  config["command"] = "lateral";
  config["tool"] = kToolVersion;
  config["n"] = setup.lateral.n();
  config["seed"] = rc.seed;
  config["starts"] = detail::range_json(rc.start_range);
  config["tolerance"] = detail::tolerance_json(rc.tol);
  config["lateral"] = lateral_config_json(setup, rc.curve);

  Json items = Json::array();
  const auto starts = rc.start_range.values();
  for (std::size_t i = 0; i < starts.size(); ++i) items.push_back(lateral_item(setup.lateral, curve, i, starts[i], rc.tol));

  Json agg = aggregate(items);
  agg["projective_dimension"] = setup.system.projective_dimension;
  agg["gap_ratio"] = setup.system.kernel.gap_ratio();
  agg["vertex_fit"] = vertex_fit(setup.lateral, curve);

  Report r;
  r.document["version"] = kSchemaVersion;
  r.document["config"] = config;
  r.document["items"] = items;
  r.document["aggregate"] = agg;
  r.exit_code = detail::exit_code_from_items(items);
  return r;
}

inline Report cmd_lateral(const RunConfig& rc) {
  Rng rng(rc.seed);
  return lateral_report(rc, random_lateral_setup(rng, rc.n, rc.tol));
}

namespace detail {

// Stored list versus re-derived list; a mismatch overrides the verdict.
inline void compare_stored(Json& item, const Json& stored, const char* list, double sep_eps) {
  if (!item.contains(list) && !stored.contains(list)) return;
  if (item.contains(list) != stored.contains(list)) {
    item["verdict"] = "fail";
    item["error"] = std::string("stored ") + list + " presence disagrees with the re-derived item";
    return;
  }
  const auto a = scalars_from_json(stored.at(list), std::string("items[].") + list);
  const auto b = scalars_from_json(item.at(list), list);
  const double d = matched_distance(a, b, chordal_distance);
  item["stored_mismatch"] = d;
  if (!(d <= sep_eps)) {
    item["verdict"] = "fail";
    item["error"] = std::string("stored ") + list + " disagree with the re-derived ones";
  }
}

inline Json verify_pyramid_items(const Json& config, const Json& items, const Tolerance& tol) {
  const Json& canonical = require(config, "canonical", "config");
  CanonicalConfig cfg;
  try {
    cfg = CanonicalConfig::make(scalars_from_json(require(canonical, "a", "config.canonical"), "config.canonical.a"),
                                scalars_from_json(require(canonical, "A", "config.canonical"), "config.canonical.A"),
                                scalars_from_json(require(canonical, "B", "config.canonical"), "config.canonical.B"), tol);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::SchemaError) throw;
    throw Error(ErrorCode::SchemaError, std::string("stored configuration is invalid: ") + e.what());
  }
  Json out = Json::array();
  for (std::size_t i = 0; i < items.size(); ++i) {
    const Json& stored = items[i];
    const std::string where = "items[" + std::to_string(i) + "]";
    const Scalar k = scalar_from_json(require(stored, "k", where), where + ".k");
    const std::string stored_verdict = require(stored, "verdict", where).get<std::string>();
    Json item = pyramid_item(cfg, i, k, tol);
    compare_stored(item, stored, "roots", tol.root_sep_eps);
    item["stored_verdict"] = stored_verdict;
    out.push_back(item);
  }
  return out;
}

inline Json verify_lateral_items(const Json& config, const Json& items, const Tolerance& tol, Json& agg_extra) {
  const Json& lateral_json = require(config, "lateral", "config");
  const Json& curve_json = require(lateral_json, "curve", "config.lateral");
  Multilateral lateral;
  TernaryForm curve;
  try {
    lateral = Multilateral::make(scalars_from_json(require(lateral_json, "params", "config.lateral"), "config.lateral.params"), tol);
    const Json& degree = require(curve_json, "degree", "config.lateral.curve");
    if (!degree.is_number_integer()) throw Error(ErrorCode::SchemaError, "curve degree must be an integer");
    curve = TernaryForm(degree.get<int>(), scalars_from_json(require(curve_json, "coeffs", "config.lateral.curve"),
                                                             "config.lateral.curve.coeffs"));
  } catch (const Error& e) {
    if (e.code() == ErrorCode::SchemaError) throw;
    throw Error(ErrorCode::SchemaError, std::string("stored configuration is invalid: ") + e.what());
  }
  if (curve.degree() != lateral.n()) throw Error(ErrorCode::SchemaError, "curve degree must equal n");
  agg_extra["vertex_fit"] = vertex_fit(lateral, curve);
  Json out = Json::array();
  for (std::size_t i = 0; i < items.size(); ++i) {
    const Json& stored = items[i];
    const std::string where = "items[" + std::to_string(i) + "]";
    const Scalar start = scalar_from_json(require(stored, "start", where), where + ".start");
    const std::string stored_verdict = require(stored, "verdict", where).get<std::string>();
    Json item = lateral_item(lateral, curve, i, start, tol);
    compare_stored(item, stored, "params", tol.root_sep_eps);
    item["stored_verdict"] = stored_verdict;
    out.push_back(item);
  }
  return out;
}

}  // namespace detail

/// Re-derives every item of a stored document from its configuration echo.
/// Stored roots and params are compared against the re-derived ones, never
/// trusted; the stored tolerance applies unless --tol is given.
inline Report cmd_verify(const RunConfig& rc, const std::string& text) {
  const Json doc = parse_json(text);
  if (!doc.is_object()) throw Error(ErrorCode::SchemaError, "document must be a JSON object");
  const Json& version = require(doc, "version", "$");
  if (version != kSchemaVersion) throw Error(ErrorCode::SchemaError, "unsupported schema version " + version.dump());
  const Json& config = require(doc, "config", "$");
  const Json& items = require(doc, "items", "$");
  if (!items.is_array()) throw Error(ErrorCode::SchemaError, "field '$.items' must be an array");
  require(doc, "aggregate", "$");
  const Json& command = require(config, "command", "config");
  Tolerance tol = detail::tolerance_from_json(require(config, "tolerance", "config"));
  if (rc.tol_override) {
    tol.rel_eps = *rc.tol_override;
    tol.validate();
  }

  Json agg_extra = Json::object();
  Json out_items;
  if (command == "pyramid") {
    out_items = detail::verify_pyramid_items(config, items, tol);
  } else if (command == "lateral") {
    out_items = detail::verify_lateral_items(config, items, tol, agg_extra);
  } else {
    throw Error(ErrorCode::SchemaError, "cannot verify a document produced by " + command.dump());
  }

  Json vconfig;
  vconfig["command"] = "verify";
  vconfig["tool"] = kToolVersion;
  vconfig["source"] = command;
  vconfig["tolerance"] = detail::tolerance_json(tol);
  vconfig["input"] = config;

  Json agg = aggregate(out_items);
  std::size_t changed = 0;
  for (const auto& item : out_items) {
    if (item.at("verdict") != item.at("stored_verdict")) ++changed;
  }
  agg["verdict_changes"] = changed;
  for (auto it = agg_extra.begin(); it != agg_extra.end(); ++it) agg[it.key()] = it.value();

  Report r;
  r.document["version"] = kSchemaVersion;
  r.document["config"] = vconfig;
  r.document["items"] = out_items;
  r.document["aggregate"] = agg;
  r.exit_code = detail::exit_code_from_items(out_items);
  return r;
}

/// Serializes a JSON-producing report in the requested format.
inline std::string render(const Report& r, Format format) {
  return format == Format::Csv ? write_csv(r.document) : write_json(r.document);
}

}  // namespace poncelet::app

#endif  // PONCELET_APP_COMMANDS_HPP
