#ifndef CYCLEBOUND_REPORT_HPP
#define CYCLEBOUND_REPORT_HPP

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cyclebound/harness.hpp"
#include "json.hpp"

namespace cyclebound {

enum class ReportFormat { csv, markdown, json };

inline ReportFormat parse_report_format(std::string_view s) {
  if (s == "csv") return ReportFormat::csv;
  if (s == "md" || s == "markdown") return ReportFormat::markdown;
  if (s == "json") return ReportFormat::json;
  throw std::invalid_argument("unknown report format '" + std::string(s) + "'");
}

/// One report line: a component record and the graph it came from.
struct ReportRow {
  std::string graph;
  ComponentRecord record;

  friend bool operator==(const ReportRow&, const ReportRow&) = default;
};

struct Report {
  std::vector<std::pair<std::string, std::string>> meta;  // emitted in order
  std::vector<ReportRow> rows;

  friend bool operator==(const Report&, const Report&) = default;
};

struct Aggregate {
  double mean = 0;
  double median = 0;
  double stdev = 0;  // population
};

/// Mean, median and population standard deviation; values must be non-empty.
inline Aggregate aggregate(std::vector<double> values) {
  if (values.empty()) throw std::invalid_argument("aggregate of no values");
  Aggregate a;
  double sum = 0;
  for (double v : values) sum += v;
  a.mean = sum / static_cast<double>(values.size());
  double sq = 0;
  for (double v : values) sq += (v - a.mean) * (v - a.mean);
  a.stdev = std::sqrt(sq / static_cast<double>(values.size()));
  std::sort(values.begin(), values.end());
  const std::size_t k = values.size();
  a.median = k % 2 == 1 ? values[k / 2] : (values[k / 2 - 1] + values[k / 2]) / 2.0;
  return a;
}

namespace report_detail {

inline std::string fixed(double v, int decimals) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", decimals, v);
  std::string s = buf;
  // Avoid "-0.00".
  if (s.front() == '-' && s.find_first_not_of("-0.") == std::string::npos) s.erase(0, 1);
  return s;
}

inline std::string bound_text(const Interval& iv, bool integral) {
  const auto fmt = [&](const Rational& r) { return integral && r.is_integer() ? r.to_string() : fixed(r.to_double(), 2); };
  if (iv.lo && iv.hi) {
    if (*iv.lo == *iv.hi) return "=" + fmt(*iv.lo);
    return "[" + fmt(*iv.lo) + "," + fmt(*iv.hi) + "]";
  }
  if (iv.lo) return ">=" + fmt(*iv.lo);
  if (iv.hi) return "<=" + fmt(*iv.hi);
  return "";
}

struct Column {
  std::string name;
  int decimals = -1;  // < 0: text column, no aggregate
  std::function<std::optional<double>(const ReportRow&)> number;
  std::function<std::string(const ReportRow&)> text;
};

using Getter = std::function<std::optional<double>(const ComponentRecord&)>;
using TextGetter = std::function<std::string(const ComponentRecord&)>;

inline Column num(std::string name, int decimals, Getter g) {
  return {std::move(name), decimals, [g](const ReportRow& r) { return r.record.error.empty() ? g(r.record) : std::nullopt; },
          nullptr};
}
inline Column txt(std::string name, TextGetter g) {
  return {std::move(name), -1, nullptr, [g](const ReportRow& r) { return g(r.record); }};
}

inline std::optional<double> opt_rational(const std::optional<Rational>& r) {
  return r ? std::optional<double>(r->to_double()) : std::nullopt;
}

// Accessors for enumerated quantities, present only when enumeration ran.
template <typename F>
Getter truth(F f) {
  return [f](const ComponentRecord& r) -> std::optional<double> {
    if (!r.extremes || !r.extremes->complete) return std::nullopt;
    return f(*r.extremes);
  };
}
template <typename F>
Getter metric(F f) {
  return [f](const ComponentRecord& r) -> std::optional<double> {
    if (!r.metrics) return std::nullopt;
    return f(*r.metrics);
  };
}
template <typename F>
Getter delta(F f) {
  return [f](const ComponentRecord& r) -> std::optional<double> {
    if (!r.metrics || !r.metrics->delta) return std::nullopt;
    return f(*r.metrics->delta);
  };
}

/// Column order mirrors the component and benchmark tables: structure,
/// optimum means and estimators, critical cycles, strict bounds, then the
/// enumerated truth and its error metrics.
inline const std::vector<Column>& columns() {
  static const std::vector<Column> cols = {
      {"graph", -1, nullptr, [](const ReportRow& r) { return r.graph; }},
      num("scc", 0, [](const ComponentRecord& r) { return static_cast<double>(r.component_id); }),
      num("n", 0, [](const ComponentRecord& r) { return static_cast<double>(r.n); }),
      num("m", 0, [](const ComponentRecord& r) { return static_cast<double>(r.m); }),
      num("w_min", 0, [](const ComponentRecord& r) { return static_cast<double>(r.w_min); }),
      num("w_max", 0, [](const ComponentRecord& r) { return static_cast<double>(r.w_max); }),
      num("w_avg", 2, [](const ComponentRecord& r) { return r.w_avg.to_double(); }),
      num("lambda_min", 2, [](const ComponentRecord& r) { return r.lambda_min.to_double(); }),
      num("lambda_max", 2, [](const ComponentRecord& r) { return r.lambda_max.to_double(); }),
      num("lambda_avg", 2, [](const ComponentRecord& r) { return r.estimates.lambda_avg.to_double(); }),
      num("lambda_geo", 2, [](const ComponentRecord& r) { return r.estimates.lambda_geo; }),
      num("eps_avg_lmax_pct", 1, [](const ComponentRecord& r) { return r.eps_avg_lambda_max; }),
      num("eps_geo_lmax_pct", 1, [](const ComponentRecord& r) { return r.eps_geo_lambda_max; }),
      num("delta", 3, [](const ComponentRecord& r) { return opt_rational(r.estimates.delta); }),
      num("rho", 3, [](const ComponentRecord& r) { return opt_rational(r.bounds.rho); }),
      txt("sign", [](const ComponentRecord& r) { return r.error.empty() ? std::string(to_string(r.bounds.sign)) : ""; }),
      num("w_cmin", 0, [](const ComponentRecord& r) { return static_cast<double>(r.witness_min.weight); }),
      num("len_cmin", 0, [](const ComponentRecord& r) { return static_cast<double>(r.witness_min.length); }),
      num("w_cmax", 0, [](const ComponentRecord& r) { return static_cast<double>(r.witness_max.weight); }),
      num("len_cmax", 0, [](const ComponentRecord& r) { return static_cast<double>(r.witness_max.length); }),
      num("crit_min_cycles", 0, [](const ComponentRecord& r) { return static_cast<double>(r.bounds.critical_min.count); }),
      num("crit_max_cycles", 0, [](const ComponentRecord& r) { return static_cast<double>(r.bounds.critical_max.count); }),
      txt("crit_truncated",
          [](const ComponentRecord& r) {
            if (!r.error.empty()) return std::string();
            return std::string(r.bounds.critical_min.truncated || r.bounds.critical_max.truncated ? "yes" : "no");
          }),
      txt("bound_w_lw", [](const ComponentRecord& r) { return bound_text(r.bounds.max_weight.weight, false); }),
      txt("bound_len_lw", [](const ComponentRecord& r) { return bound_text(r.bounds.max_weight.length, true); }),
      txt("bound_w_ll", [](const ComponentRecord& r) { return bound_text(r.bounds.max_length.weight, false); }),
      txt("bound_len_ll", [](const ComponentRecord& r) { return bound_text(r.bounds.max_length.length, true); }),
      txt("bound_w_sw", [](const ComponentRecord& r) { return bound_text(r.bounds.min_weight.weight, false); }),
      txt("bound_len_sw", [](const ComponentRecord& r) { return bound_text(r.bounds.min_weight.length, true); }),
      txt("bound_w_sl", [](const ComponentRecord& r) { return bound_text(r.bounds.min_length.weight, false); }),
      txt("bound_len_sl", [](const ComponentRecord& r) { return bound_text(r.bounds.min_length.length, true); }),
      num("path_len_lo", 0,
          [](const ComponentRecord& r) -> std::optional<double> {
            if (!r.bounds.path.length_lo) return std::nullopt;
            return static_cast<double>(*r.bounds.path.length_lo);
          }),
      num("path_w_lo", 2, [](const ComponentRecord& r) { return opt_rational(r.bounds.path.weight_lo); }),
      txt("path_w_vacuous",
          [](const ComponentRecord& r) {
            if (!r.error.empty() || !r.bounds.path.weight_lo) return std::string();
            return std::string(r.bounds.path.weight_vacuous ? "yes" : "no");
          }),
      txt("enumeration", [](const ComponentRecord& r) { return std::string(to_string(r.status)); }),
      num("cycles", 0,
          [](const ComponentRecord& r) -> std::optional<double> {
            if (!r.extremes) return std::nullopt;
            return static_cast<double>(r.extremes->total_cycle_count);
          }),
      num("w_lw", 0, truth([](const ExtremalSummary& e) { return static_cast<double>(e.max_weight.weight); })),
      num("len_lw", 0, truth([](const ExtremalSummary& e) { return static_cast<double>(e.max_weight.length); })),
      num("lambda_lw", 2, truth([](const ExtremalSummary& e) { return e.max_weight.mean().to_double(); })),
      num("w_ll", 0, truth([](const ExtremalSummary& e) { return static_cast<double>(e.max_length.weight); })),
      num("len_ll", 0, truth([](const ExtremalSummary& e) { return static_cast<double>(e.max_length.length); })),
      num("lambda_ll", 2, truth([](const ExtremalSummary& e) { return e.max_length.mean().to_double(); })),
      num("w_sw", 0, truth([](const ExtremalSummary& e) { return static_cast<double>(e.min_weight.weight); })),
      num("len_sw", 0, truth([](const ExtremalSummary& e) { return static_cast<double>(e.min_weight.length); })),
      num("w_sl", 0, truth([](const ExtremalSummary& e) { return static_cast<double>(e.min_length.weight); })),
      num("len_sl", 0, truth([](const ExtremalSummary& e) { return static_cast<double>(e.min_length.length); })),
      num("d_w_lw_pct", 1, delta([](const DeltaBlock& d) { return d.weight_max_weight; })),
      num("d_len_lw_pct", 1, delta([](const DeltaBlock& d) { return d.length_max_weight; })),
      num("d_w_ll_pct", 1, delta([](const DeltaBlock& d) { return d.weight_max_length; })),
      num("d_len_ll_pct", 1, delta([](const DeltaBlock& d) { return d.length_max_length; })),
      num("eps_avg_lw_pct", 1, metric([](const MetricBlock& m) { return m.eps_avg_max_weight; })),
      num("eps_geo_lw_pct", 1, metric([](const MetricBlock& m) { return m.eps_geo_max_weight; })),
      num("eps_avg_ll_pct", 1, metric([](const MetricBlock& m) { return m.eps_avg_max_length; })),
      num("eps_geo_ll_pct", 1, metric([](const MetricBlock& m) { return m.eps_geo_max_length; })),
      txt("error", [](const ComponentRecord& r) { return r.error; }),
  };
  return cols;
}

inline std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

inline std::string md_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '|') out += '\\';
    out += c == '\n' ? ' ' : c;
  }
  return out;
}

inline std::vector<std::vector<std::string>> table_cells(const std::vector<ReportRow>& rows, const std::string& missing) {
  std::vector<std::vector<std::string>> cells;
  const auto& cols = columns();
  for (const ReportRow& row : rows) {
    std::vector<std::string> line;
    for (const Column& c : cols) {
      if (c.decimals < 0) {
        const std::string t = c.text(row);
        line.push_back(t.empty() ? missing : t);
      } else {
        const auto v = c.number(row);
        line.push_back(v ? fixed(*v, c.decimals) : missing);
      }
    }
    cells.push_back(std::move(line));
  }
  if (rows.empty()) return cells;
  for (const char* label : {"Average", "Median", "StDev"}) {
    std::vector<std::string> line;
    for (std::size_t i = 0; i < cols.size(); ++i) {
      const Column& c = cols[i];
      if (i == 0) {
        line.emplace_back(label);
        continue;
      }
      if (c.decimals < 0 || c.name == "scc") {
        line.push_back(missing);
        continue;
      }
      std::vector<double> vals;
      for (const ReportRow& row : rows) {
        if (auto v = c.number(row)) vals.push_back(*v);
      }
      if (vals.empty()) {
        line.push_back(missing);
        continue;
      }
      const Aggregate a = aggregate(vals);
      const double v = std::string_view(label) == "Average" ? a.mean : std::string_view(label) == "Median" ? a.median : a.stdev;
      line.push_back(fixed(v, std::max(c.decimals, 1)));
    }
    cells.push_back(std::move(line));
  }
  return cells;
}

}  // namespace report_detail

/// Names of the tabular columns, in emission order.
inline std::vector<std::string> report_columns() {
  std::vector<std::string> names;
  for (const auto& c : report_detail::columns()) names.push_back(c.name);
  return names;
}

/// Numeric value of a named column for a row (nullopt for text columns and
/// missing values).
inline std::optional<double> report_value(const ReportRow& row, std::string_view column) {
  for (const auto& c : report_detail::columns()) {
    if (c.name == column) return c.decimals < 0 ? std::nullopt : c.number(row);
  }
  throw std::invalid_argument("unknown report column '" + std::string(column) + "'");
}

// ---------------------------------------------------------------------------
// JSON

namespace report_detail {
using nlohmann::json;

inline json opt(const std::optional<double>& v) { return v ? json(*v) : json(nullptr); }
inline json opt(const std::optional<Rational>& v) { return v ? json(v->to_string()) : json(nullptr); }
inline std::optional<double> get_opt_double(const json& j) {
  return j.is_null() ? std::nullopt : std::optional<double>(j.get<double>());
}
inline std::optional<Rational> get_opt_rational(const json& j) {
  return j.is_null() ? std::nullopt : std::optional<Rational>(Rational::parse(j.get<std::string>()));
}
inline json rationals(const std::vector<Rational>& v) {
  json a = json::array();
  for (const auto& r : v) a.push_back(r.to_string());
  return a;
}
inline std::vector<Rational> get_rationals(const json& j) {
  std::vector<Rational> v;
  for (const auto& e : j) v.push_back(Rational::parse(e.get<std::string>()));
  return v;
}

inline json to_json(const CycleSummary& c) { return {{"weight", c.weight}, {"length", c.length}, {"nodes", c.nodes}}; }
inline CycleSummary cycle_from(const json& j) {
  return {j.at("weight").get<Weight>(), j.at("length").get<std::int64_t>(), j.at("nodes").get<std::vector<std::int64_t>>()};
}

inline json to_json(const Interval& iv) {
  return {{"lo", opt(iv.lo)}, {"hi", opt(iv.hi)}, {"lo_tight", iv.lo_tight}, {"hi_tight", iv.hi_tight}};
}
inline Interval interval_from(const json& j) {
  return {get_opt_rational(j.at("lo")), get_opt_rational(j.at("hi")), j.at("lo_tight").get<bool>(),
          j.at("hi_tight").get<bool>()};
}

inline json to_json(const CycleBounds& b) {
  return {{"weight", to_json(b.weight)}, {"length", to_json(b.length)}, {"case", b.theorem_case},
          {"possibly_loose", b.possibly_loose}};
}
inline CycleBounds cycle_bounds_from(const json& j) {
  return {interval_from(j.at("weight")), interval_from(j.at("length")), j.at("case").get<int>(),
          j.at("possibly_loose").get<bool>()};
}

inline json to_json(const CriticalSetStats& s) {
  return {{"min_length", s.min_length}, {"max_length", s.max_length}, {"min_weight", s.min_weight},
          {"max_weight", s.max_weight}, {"count", s.count}, {"truncated", s.truncated}};
}
inline CriticalSetStats stats_from(const json& j) {
  CriticalSetStats s;
  s.min_length = j.at("min_length").get<std::int64_t>();
  s.max_length = j.at("max_length").get<std::int64_t>();
  s.min_weight = j.at("min_weight").get<Weight>();
  s.max_weight = j.at("max_weight").get<Weight>();
  s.count = j.at("count").get<std::size_t>();
  s.truncated = j.at("truncated").get<bool>();
  return s;
}

inline SignClass sign_from(const std::string& s) {
  for (SignClass c : {SignClass::positive, SignClass::negative, SignClass::nonnegative, SignClass::zero,
                      SignClass::indeterminate}) {
    if (s == to_string(c)) return c;
  }
  throw std::invalid_argument("unknown sign class '" + s + "'");
}

inline EnumerationStatus status_from(const std::string& s) {
  for (EnumerationStatus c : {EnumerationStatus::skipped, EnumerationStatus::complete, EnumerationStatus::truncated,
                              EnumerationStatus::timeout}) {
    if (s == to_string(c)) return c;
  }
  throw std::invalid_argument("unknown enumeration status '" + s + "'");
}

inline json to_json(const BoundReport& b) {
  json path = {{"length_lo", b.path.length_lo ? json(*b.path.length_lo) : json(nullptr)},
               {"weight_lo", opt(b.path.weight_lo)},
               {"weight_vacuous", b.path.weight_vacuous}};
  return {{"lambda_min", b.lambda_min.to_string()},
          {"lambda_max", b.lambda_max.to_string()},
          {"w_max", b.w_max},
          {"critical_min", to_json(b.critical_min)},
          {"critical_max", to_json(b.critical_max)},
          {"sign", to_string(b.sign)},
          {"parametric", {{"per_arc_lo", b.parametric.per_arc_lo.to_string()}, {"per_arc_hi", b.parametric.per_arc_hi.to_string()}}},
          {"max_weight", to_json(b.max_weight)},
          {"max_length", to_json(b.max_length)},
          {"min_weight", to_json(b.min_weight)},
          {"min_length", to_json(b.min_length)},
          {"path", path},
          {"rho", opt(b.rho)}};
}
inline BoundReport bounds_from(const json& j) {
  BoundReport b;
  b.lambda_min = Rational::parse(j.at("lambda_min").get<std::string>());
  b.lambda_max = Rational::parse(j.at("lambda_max").get<std::string>());
  b.w_max = j.at("w_max").get<Weight>();
  b.critical_min = stats_from(j.at("critical_min"));
  b.critical_max = stats_from(j.at("critical_max"));
  b.sign = sign_from(j.at("sign").get<std::string>());
  b.parametric = {Rational::parse(j.at("parametric").at("per_arc_lo").get<std::string>()),
                  Rational::parse(j.at("parametric").at("per_arc_hi").get<std::string>())};
  b.max_weight = cycle_bounds_from(j.at("max_weight"));
  b.max_length = cycle_bounds_from(j.at("max_length"));
  b.min_weight = cycle_bounds_from(j.at("min_weight"));
  b.min_length = cycle_bounds_from(j.at("min_length"));
  const json& p = j.at("path");
  if (!p.at("length_lo").is_null()) b.path.length_lo = p.at("length_lo").get<std::int64_t>();
  b.path.weight_lo = get_opt_rational(p.at("weight_lo"));
  b.path.weight_vacuous = p.at("weight_vacuous").get<bool>();
  b.rho = get_opt_rational(j.at("rho"));
  return b;
}

inline json to_json(const EstimateReport& e) {
  return {{"lambda_avg", e.lambda_avg.to_string()},
          {"lambda_geo", opt(e.lambda_geo)},
          {"delta", opt(e.delta)},
          {"abs_error_bound_avg", e.abs_error_bound_avg.to_string()},
          {"rel_error_bound_avg", opt(e.rel_error_bound_avg)},
          {"abs_error_bound_geo", opt(e.abs_error_bound_geo)},
          {"rel_error_bound_geo", opt(e.rel_error_bound_geo)}};
}
inline EstimateReport estimates_from(const json& j) {
  EstimateReport e;
  e.lambda_avg = Rational::parse(j.at("lambda_avg").get<std::string>());
  e.lambda_geo = get_opt_double(j.at("lambda_geo"));
  e.delta = get_opt_rational(j.at("delta"));
  e.abs_error_bound_avg = Rational::parse(j.at("abs_error_bound_avg").get<std::string>());
  e.rel_error_bound_avg = get_opt_rational(j.at("rel_error_bound_avg"));
  e.abs_error_bound_geo = get_opt_rational(j.at("abs_error_bound_geo"));
  e.rel_error_bound_geo = get_opt_double(j.at("rel_error_bound_geo"));
  return e;
}

inline json to_json(const ComponentRecord& r, bool include_timings) {
  json j = {{"component_id", r.component_id},
            {"n", r.n},
            {"m", r.m},
            {"w_min", r.w_min},
            {"w_max", r.w_max},
            {"w_avg", r.w_avg.to_string()},
            {"nodes", r.nodes},
            {"lambda_min", r.lambda_min.to_string()},
            {"lambda_max", r.lambda_max.to_string()},
            {"witness_min", to_json(r.witness_min)},
            {"witness_max", to_json(r.witness_max)},
            {"potential_min", rationals(r.potential_min)},
            {"potential_max", rationals(r.potential_max)},
            {"bounds", to_json(r.bounds)},
            {"estimates", to_json(r.estimates)},
            {"eps_avg_lambda_max", opt(r.eps_avg_lambda_max)},
            {"eps_geo_lambda_max", opt(r.eps_geo_lambda_max)},
            {"enumeration", to_string(r.status)},
            {"error", r.error}};
  if (r.extremes) {
    j["extremes"] = {{"max_weight", to_json(r.extremes->max_weight)},
                     {"max_length", to_json(r.extremes->max_length)},
                     {"min_weight", to_json(r.extremes->min_weight)},
                     {"min_length", to_json(r.extremes->min_length)},
                     {"total_cycle_count", r.extremes->total_cycle_count},
                     {"complete", r.extremes->complete}};
  } else {
    j["extremes"] = nullptr;
  }
  if (r.metrics) {
    json m = {{"eps_avg_max_weight", opt(r.metrics->eps_avg_max_weight)},
              {"eps_geo_max_weight", opt(r.metrics->eps_geo_max_weight)},
              {"eps_avg_max_length", opt(r.metrics->eps_avg_max_length)},
              {"eps_geo_max_length", opt(r.metrics->eps_geo_max_length)}};
    if (r.metrics->delta) {
      const DeltaBlock& d = *r.metrics->delta;
      m["delta"] = {{"weight_max_weight", opt(d.weight_max_weight)},
                    {"length_max_weight", opt(d.length_max_weight)},
                    {"weight_max_length", opt(d.weight_max_length)},
                    {"length_max_length", opt(d.length_max_length)}};
    } else {
      m["delta"] = nullptr;
    }
    j["metrics"] = m;
  } else {
    j["metrics"] = nullptr;
  }
  if (include_timings) {
    j["timings_ms"] = {{"cycle_means", r.timings.cycle_means_ms},
                       {"critical", r.timings.critical_ms},
                       {"enumeration", r.timings.enumeration_ms}};
  }
  return j;
}

inline ComponentRecord record_from(const json& j) {
  ComponentRecord r;
  r.component_id = j.at("component_id").get<std::size_t>();
  r.n = j.at("n").get<std::size_t>();
  r.m = j.at("m").get<std::size_t>();
  r.w_min = j.at("w_min").get<Weight>();
  r.w_max = j.at("w_max").get<Weight>();
  r.w_avg = Rational::parse(j.at("w_avg").get<std::string>());
  r.nodes = j.at("nodes").get<std::vector<std::int64_t>>();
  r.lambda_min = Rational::parse(j.at("lambda_min").get<std::string>());
  r.lambda_max = Rational::parse(j.at("lambda_max").get<std::string>());
  r.witness_min = cycle_from(j.at("witness_min"));
  r.witness_max = cycle_from(j.at("witness_max"));
  r.potential_min = get_rationals(j.at("potential_min"));
  r.potential_max = get_rationals(j.at("potential_max"));
  r.bounds = bounds_from(j.at("bounds"));
  r.estimates = estimates_from(j.at("estimates"));
  r.eps_avg_lambda_max = get_opt_double(j.at("eps_avg_lambda_max"));
  r.eps_geo_lambda_max = get_opt_double(j.at("eps_geo_lambda_max"));
  r.status = status_from(j.at("enumeration").get<std::string>());
  r.error = j.at("error").get<std::string>();
  if (const json& e = j.at("extremes"); !e.is_null()) {
    ExtremalSummary es;
    es.max_weight = cycle_from(e.at("max_weight"));
    es.max_length = cycle_from(e.at("max_length"));
    es.min_weight = cycle_from(e.at("min_weight"));
    es.min_length = cycle_from(e.at("min_length"));
    es.total_cycle_count = e.at("total_cycle_count").get<std::uint64_t>();
    es.complete = e.at("complete").get<bool>();
    r.extremes = es;
  }
  if (const json& m = j.at("metrics"); !m.is_null()) {
    MetricBlock mb;
    mb.eps_avg_max_weight = get_opt_double(m.at("eps_avg_max_weight"));
    mb.eps_geo_max_weight = get_opt_double(m.at("eps_geo_max_weight"));
    mb.eps_avg_max_length = get_opt_double(m.at("eps_avg_max_length"));
    mb.eps_geo_max_length = get_opt_double(m.at("eps_geo_max_length"));
    if (const json& d = m.at("delta"); !d.is_null()) {
      mb.delta = DeltaBlock{get_opt_double(d.at("weight_max_weight")), get_opt_double(d.at("length_max_weight")),
                            get_opt_double(d.at("weight_max_length")), get_opt_double(d.at("length_max_length"))};
    }
    r.metrics = mb;
  }
  if (j.contains("timings_ms")) {
    const json& t = j.at("timings_ms");
    r.timings = {t.at("cycle_means").get<double>(), t.at("critical").get<double>(), t.at("enumeration").get<double>()};
  }
  return r;
}

}  // namespace report_detail

struct EmitOptions {
  bool include_timings = false;  // timings make output run-dependent
};

/// Renders a report. CSV and markdown carry one row per component followed
/// by Average / Median / StDev rows; JSON carries the full records with exact
/// rationals.
inline std::string emit_report(const Report& report, ReportFormat format, const EmitOptions& opt = {}) {
  using namespace report_detail;
  if (format == ReportFormat::json) {
    json meta = json::object();
    for (const auto& [k, v] : report.meta) meta[k] = v;
    json rows = json::array();
    for (const ReportRow& row : report.rows) {
      json r = to_json(row.record, opt.include_timings);
      r["graph"] = row.graph;
      rows.push_back(std::move(r));
    }
    json meta_keys = json::array();
    for (const auto& [k, v] : report.meta) meta_keys.push_back(k);
    return json{{"meta", meta}, {"meta_order", meta_keys}, {"records", rows}}.dump(2) + "\n";
  }

  const auto names = report_columns();
  std::string out;
  if (format == ReportFormat::csv) {
    for (const auto& [k, v] : report.meta) out += "# " + k + "=" + v + "\n";
    for (std::size_t i = 0; i < names.size(); ++i) out += (i ? "," : "") + names[i];
    out += "\n";
    for (const auto& line : table_cells(report.rows, "")) {
      for (std::size_t i = 0; i < line.size(); ++i) out += (i ? "," : "") + csv_escape(line[i]);
      out += "\n";
    }
    return out;
  }
  for (const auto& [k, v] : report.meta) out += "- " + k + ": " + v + "\n";
  if (!report.meta.empty()) out += "\n";
  out += "|";
  for (const auto& n : names) out += " " + n + " |";
  out += "\n|";
  for (const auto& c : columns()) out += c.decimals < 0 ? " --- |" : " ---: |";
  out += "\n";
  for (const auto& line : table_cells(report.rows, "-")) {
    out += "|";
    for (const auto& cell : line) out += " " + md_escape(cell) + " |";
    out += "\n";
  }
  return out;
}

/// Inverse of emit_report(..., ReportFormat::json, ...).
inline Report parse_json_report(std::string_view text) {
  using namespace report_detail;
  const json j = json::parse(text);
  Report rep;
  const json& meta = j.at("meta");
  for (const auto& k : j.at("meta_order")) {
    const auto key = k.get<std::string>();
    rep.meta.emplace_back(key, meta.at(key).get<std::string>());
  }
  for (const json& r : j.at("records")) rep.rows.push_back({r.at("graph").get<std::string>(), record_from(r)});
  return rep;
}

}  // namespace cyclebound

#endif  // CYCLEBOUND_REPORT_HPP
