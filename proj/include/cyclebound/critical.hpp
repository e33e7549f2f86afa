#ifndef CYCLEBOUND_CRITICAL_HPP
#define CYCLEBOUND_CRITICAL_HPP

#include <algorithm>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "cyclebound/cycle.hpp"
#include "cyclebound/digraph.hpp"
#include "cyclebound/enumeration.hpp"
#include "cyclebound/howard.hpp"

namespace cyclebound {

/// Arcs that are tight under a certificate, and the critical cycles found
/// among them. When the tight subgraph holds more than the cycle cap, only
/// the witness is kept and `truncated` is set.
struct CriticalSubgraph {
  Direction direction = Direction::min;
  Rational lambda;
  std::vector<ArcId> arcs;
  std::vector<Cycle> cycles;
  bool truncated = false;

  friend bool operator==(const CriticalSubgraph&, const CriticalSubgraph&) = default;
};

inline CriticalSubgraph critical_subgraph(const WeightedDigraph& g, const CycleMeanCertificate& cert,
                                          std::uint64_t cycle_cap = default_cycle_cap) {
  if (cert.potential.size() != g.node_count()) throw std::invalid_argument("certificate does not match graph");
  CriticalSubgraph out;
  out.direction = cert.direction;
  out.lambda = cert.lambda;
  std::vector<Arc> tight_arcs;
  for (ArcId a = 0; a < g.arc_count(); ++a) {
    if (certificate_slack(g, cert, a).is_zero()) {
      out.arcs.push_back(a);
      tight_arcs.push_back(g.arc(a));
    }
  }
  const WeightedDigraph tight(g.node_count(), std::move(tight_arcs));

  const CycleVisitor collect = [&](std::span<const ArcId> local) {
    std::vector<ArcId> arcs;
    arcs.reserve(local.size());
    for (ArcId a : local) arcs.push_back(out.arcs[a]);
    out.cycles.push_back(make_cycle(g, std::move(arcs)));
  };
  const EnumerationResult r = enumerate_simple_cycles(tight, cycle_cap, collect);
  if (!r.complete) {
    out.cycles.assign(1, cert.witness);
    out.truncated = true;
  }
  for (const Cycle& c : out.cycles) {
    if (cycle_mean(c) != cert.lambda) throw std::logic_error("critical subgraph holds a cycle with mean != lambda");
  }
  if (out.cycles.empty()) throw std::logic_error("critical subgraph holds no cycle");
  return out;
}

/// Length and weight extremes of a set of critical cycles.
struct CriticalSetStats {
  std::int64_t min_length = 0;
  std::int64_t max_length = 0;
  Weight min_weight = 0;
  Weight max_weight = 0;
  std::size_t count = 0;
  bool truncated = false;

  friend bool operator==(const CriticalSetStats&, const CriticalSetStats&) = default;
};

inline CriticalSetStats critical_set_stats(std::span<const Cycle> cycles, bool truncated = false) {
  if (cycles.empty()) throw std::invalid_argument("empty critical set");
  CriticalSetStats s;
  s.min_length = s.max_length = cycles.front().length;
  s.min_weight = s.max_weight = cycles.front().weight;
  for (const Cycle& c : cycles) {
    s.min_length = std::min(s.min_length, c.length);
    s.max_length = std::max(s.max_length, c.length);
    s.min_weight = std::min(s.min_weight, c.weight);
    s.max_weight = std::max(s.max_weight, c.weight);
  }
  s.count = cycles.size();
  s.truncated = truncated;
  return s;
}

inline CriticalSetStats critical_set_stats(const CriticalSubgraph& sub) {
  return critical_set_stats(sub.cycles, sub.truncated);
}

}  // namespace cyclebound

#endif  // CYCLEBOUND_CRITICAL_HPP
