#ifndef CYCLEBOUND_HARNESS_HPP
#define CYCLEBOUND_HARNESS_HPP

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cyclebound/bounds.hpp"
#include "cyclebound/critical.hpp"
#include "cyclebound/cycle.hpp"
#include "cyclebound/digraph.hpp"
#include "cyclebound/enumeration.hpp"
#include "cyclebound/estimators.hpp"
#include "cyclebound/howard.hpp"
#include "cyclebound/scc.hpp"

namespace cyclebound {

struct AnalyzeOptions {
  bool ground_truth = false;
  std::uint64_t max_cycles = default_cycle_cap;           // enumeration cap per component
  std::uint64_t critical_cycle_cap = default_cycle_cap;   // critical-cycle collection cap
  std::optional<double> timeout_seconds;                  // enumeration budget per component
};

/// A cycle in global 1-based node ids.
struct CycleSummary {
  Weight weight = 0;
  std::int64_t length = 0;
  std::vector<std::int64_t> nodes;

  [[nodiscard]] Rational mean() const { return Rational(weight, length); }
  friend bool operator==(const CycleSummary&, const CycleSummary&) = default;
};

struct ExtremalSummary {
  CycleSummary max_weight;  // L_w
  CycleSummary max_length;  // L_l
  CycleSummary min_weight;  // S_w
  CycleSummary min_length;  // S_l
  std::uint64_t total_cycle_count = 0;
  bool complete = false;

  friend bool operator==(const ExtremalSummary&, const ExtremalSummary&) = default;
};

enum class EnumerationStatus { skipped, complete, truncated, timeout };

inline const char* to_string(EnumerationStatus s) {
  switch (s) {
    case EnumerationStatus::skipped: return "skipped";
    case EnumerationStatus::complete: return "complete";
    case EnumerationStatus::truncated: return "truncated";
    case EnumerationStatus::timeout: return "timeout";
  }
  return "?";
}

/// Looseness of the strict lower bounds, (true - bound) / true, in percent.
struct DeltaBlock {
  std::optional<double> weight_max_weight;  // w(L_w) vs max|C_max| lambda_min
  std::optional<double> length_max_weight;  // |L_w| vs max|C_max|
  std::optional<double> weight_max_length;  // w(L_l) vs max w(C_min)
  std::optional<double> length_max_length;  // |L_l| vs max w(C_min) / lambda_max

  friend bool operator==(const DeltaBlock&, const DeltaBlock&) = default;
};

/// Error metrics against enumerated ground truth (true-mean reference).
struct MetricBlock {
  std::optional<DeltaBlock> delta;
  std::optional<double> eps_avg_max_weight;
  std::optional<double> eps_geo_max_weight;
  std::optional<double> eps_avg_max_length;
  std::optional<double> eps_geo_max_length;

  friend bool operator==(const MetricBlock&, const MetricBlock&) = default;
};

struct StageTimings {
  double cycle_means_ms = 0;
  double critical_ms = 0;
  double enumeration_ms = 0;

  friend bool operator==(const StageTimings&, const StageTimings&) = default;
};

struct ComponentRecord {
  std::size_t component_id = 0;  // 1-based among all SCCs, ordered by smallest node
  std::size_t n = 0;
  std::size_t m = 0;
  Weight w_min = 0;
  Weight w_max = 0;
  Rational w_avg;
  std::vector<std::int64_t> nodes;  // global 1-based ids

  Rational lambda_min;
  Rational lambda_max;
  CycleSummary witness_min;
  CycleSummary witness_max;
  std::vector<Rational> potential_min;  // per entry of `nodes`
  std::vector<Rational> potential_max;

  BoundReport bounds;
  EstimateReport estimates;
  std::optional<double> eps_avg_lambda_max;  // |lambda_max - lambda_avg| / |lambda_max|
  std::optional<double> eps_geo_lambda_max;

  EnumerationStatus status = EnumerationStatus::skipped;
  std::optional<ExtremalSummary> extremes;
  std::optional<MetricBlock> metrics;  // present iff enumeration completed

  std::string error;  // non-empty when this component's analysis failed
  StageTimings timings;

  friend bool operator==(const ComponentRecord&, const ComponentRecord&) = default;
};

struct AnalysisResult {
  std::size_t node_count = 0;
  std::size_t arc_count = 0;
  std::size_t component_count = 0;
  std::size_t trivial_count = 0;
  std::vector<ComponentRecord> records;
};

inline CycleSummary summarize_cycle(const Component& comp, const Cycle& c) {
  CycleSummary s;
  s.weight = c.weight;
  s.length = c.length;
  for (ArcId a : c.arcs) s.nodes.push_back(static_cast<std::int64_t>(comp.nodes[comp.graph.arc(a).tail]) + 1);
  return s;
}

namespace detail {
inline std::optional<double> percent(const Rational& num, const Rational& den) {
  if (den.is_zero()) return std::nullopt;
  return 100.0 * (num / den).to_double();
}
inline double elapsed_ms(std::chrono::steady_clock::time_point since) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - since).count();
}
}  // namespace detail

/// Relative looseness of the four strict lower bounds against enumerated
/// truth. Needs complete enumeration and lambda_min > 0; entries whose true
/// value is zero are nullopt.
inline std::optional<DeltaBlock> bound_errors(const ComponentRecord& r) {
  if (!r.extremes || !r.extremes->complete || r.lambda_min.sign() <= 0) return std::nullopt;
  const auto& lw = r.extremes->max_weight;
  const auto& ll = r.extremes->max_length;
  const Rational cmax_len(r.bounds.critical_max.max_length);
  const Rational cmin_w(r.bounds.critical_min.max_weight);
  DeltaBlock d;
  d.weight_max_weight = detail::percent(Rational(lw.weight) - cmax_len * r.lambda_min, Rational(lw.weight));
  d.length_max_weight = detail::percent(Rational(lw.length) - cmax_len, Rational(lw.length));
  d.weight_max_length = detail::percent(Rational(ll.weight) - cmin_w, Rational(ll.weight));
  d.length_max_length = detail::percent(Rational(ll.length) - cmin_w / r.lambda_max, Rational(ll.length));
  return d;
}

/// Heuristic errors of lambda_avg / lambda_geo against the means of L_w and L_l.
inline MetricBlock compute_metrics(const ComponentRecord& r) {
  MetricBlock mb;
  mb.delta = bound_errors(r);
  const Rational lw = r.extremes->max_weight.mean();
  const Rational ll = r.extremes->max_length.mean();
  const double avg = r.estimates.lambda_avg.to_double();
  mb.eps_avg_max_weight = heuristic_error(lw, avg, lw);
  mb.eps_avg_max_length = heuristic_error(ll, avg, ll);
  if (r.estimates.lambda_geo) {
    mb.eps_geo_max_weight = heuristic_error(lw, *r.estimates.lambda_geo, lw);
    mb.eps_geo_max_length = heuristic_error(ll, *r.estimates.lambda_geo, ll);
  }
  return mb;
}

inline void analyze_component(const Component& comp, const AnalyzeOptions& opt, ComponentRecord& r) {
  const WeightedDigraph& g = comp.graph;
  r.w_min = g.min_weight();
  r.w_max = g.max_weight();
  r.w_avg = Rational::from_wide(g.total_weight(), static_cast<wide_int>(g.arc_count()));

  auto t0 = std::chrono::steady_clock::now();
  const CycleMeanCertificate cmin = min_cycle_mean(g);
  const CycleMeanCertificate cmax = max_cycle_mean(g);
  r.timings.cycle_means_ms = detail::elapsed_ms(t0);
  r.lambda_min = cmin.lambda;
  r.lambda_max = cmax.lambda;
  r.witness_min = summarize_cycle(comp, cmin.witness);
  r.witness_max = summarize_cycle(comp, cmax.witness);
  r.potential_min = cmin.potential;
  r.potential_max = cmax.potential;

  t0 = std::chrono::steady_clock::now();
  const CriticalSubgraph crit_min = critical_subgraph(g, cmin, opt.critical_cycle_cap);
  const CriticalSubgraph crit_max = critical_subgraph(g, cmax, opt.critical_cycle_cap);
  r.timings.critical_ms = detail::elapsed_ms(t0);

  r.bounds = evaluate_bounds(r.lambda_min, r.lambda_max, critical_set_stats(crit_min), critical_set_stats(crit_max),
                             r.w_max);
  r.estimates = estimate(r.lambda_min, r.lambda_max);
  const double avg = r.estimates.lambda_avg.to_double();
  r.eps_avg_lambda_max = heuristic_error(r.lambda_max, avg, r.lambda_max);
  if (r.estimates.lambda_geo) r.eps_geo_lambda_max = heuristic_error(r.lambda_max, *r.estimates.lambda_geo, r.lambda_max);

  if (!opt.ground_truth) return;
  t0 = std::chrono::steady_clock::now();
  EnumerationLimits limits{opt.max_cycles, std::nullopt};
  if (opt.timeout_seconds) {
    limits.deadline = t0 + std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                               std::chrono::duration<double>(*opt.timeout_seconds));
  }
  const ExtremalCycles ex = extremal_cycles(g, limits);
  r.timings.enumeration_ms = detail::elapsed_ms(t0);
  ExtremalSummary es;
  es.max_weight = summarize_cycle(comp, ex.max_weight);
  es.max_length = summarize_cycle(comp, ex.max_length);
  es.min_weight = summarize_cycle(comp, ex.min_weight);
  es.min_length = summarize_cycle(comp, ex.min_length);
  es.total_cycle_count = ex.total_cycle_count;
  es.complete = ex.complete;
  r.extremes = es;
  r.status = ex.complete ? EnumerationStatus::complete
                         : (ex.timed_out ? EnumerationStatus::timeout : EnumerationStatus::truncated);
  if (ex.complete) {
    r.bounds.path = path_bounds({r.lambda_min, r.lambda_max, r.w_max, r.bounds.critical_max.max_length,
                                 ex.max_length.length, ex.max_weight.weight});
    r.metrics = compute_metrics(r);
  }
}

/// SCC split, then per non-trivial component: optimum cycle means with
/// certificates, critical sets, bounds, estimates and, with ground_truth,
/// enumeration and error metrics. Failures are recorded per component.
inline AnalysisResult analyze(const WeightedDigraph& g, const AnalyzeOptions& opt = {}) {
  AnalysisResult res;
  res.node_count = g.node_count();
  res.arc_count = g.arc_count();
  const SccDecomposition scc = decompose_sccs(g);
  res.component_count = scc.components.size();
  for (const Component& comp : scc.components) {
    if (comp.trivial) {
      ++res.trivial_count;
      continue;
    }
    ComponentRecord r;
    r.component_id = comp.id + 1;
    r.n = comp.graph.node_count();
    r.m = comp.graph.arc_count();
    for (NodeId v : comp.nodes) r.nodes.push_back(static_cast<std::int64_t>(v) + 1);
    try {
      analyze_component(comp, opt, r);
    } catch (const std::exception& e) {
      r.error = e.what();
    }
    res.records.push_back(std::move(r));
  }
  return res;
}

}  // namespace cyclebound

#endif  // CYCLEBOUND_HARNESS_HPP
