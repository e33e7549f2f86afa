#ifndef CYCLEBOUND_ENUMERATION_HPP
#define CYCLEBOUND_ENUMERATION_HPP

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "cyclebound/cycle.hpp"
#include "cyclebound/digraph.hpp"
#include "cyclebound/howard.hpp"

namespace cyclebound {

inline constexpr std::uint64_t default_cycle_cap = 1'000'000;

struct EnumerationLimits {
  std::uint64_t max_cycles = default_cycle_cap;
  std::optional<std::chrono::steady_clock::time_point> deadline;
};

struct EnumerationResult {
  std::uint64_t count = 0;
  bool complete = true;
  bool timed_out = false;
};

/// Receives each simple cycle as an arc sequence starting at its smallest node.
using CycleVisitor = std::function<void(std::span<const ArcId>)>;

namespace detail {

class JohnsonEnumerator {
 public:
  JohnsonEnumerator(const WeightedDigraph& g, const EnumerationLimits& limits, const CycleVisitor& visit)
      : g_(g), limits_(limits), visit_(visit), n_(g.node_count()) {}

  EnumerationResult run() {
    allowed_.assign(n_, false);
    blocked_.assign(n_, false);
    blockers_.assign(n_, {});
    for (NodeId s = 0; s < n_ && !stopped_; ++s) {
      if (!restrict_to_component_of(s)) continue;
      circuits_from(s);
    }
    return result_;
  }

 private:
  // Marks allowed_ = SCC of s in the subgraph induced by nodes >= s.
  // Returns false when s lies on no cycle there.
  bool restrict_to_component_of(NodeId s) {
    std::fill(allowed_.begin(), allowed_.end(), false);
    std::vector<bool> fwd(n_, false), bwd(n_, false);
    std::vector<NodeId> stack{s};
    fwd[s] = true;
    while (!stack.empty()) {
      const NodeId v = stack.back();
      stack.pop_back();
      for (ArcId a : g_.out_arcs(v)) {
        const NodeId w = g_.arc(a).head;
        if (w >= s && !fwd[w]) {
          fwd[w] = true;
          stack.push_back(w);
        }
      }
    }
    stack.push_back(s);
    bwd[s] = true;
    while (!stack.empty()) {
      const NodeId v = stack.back();
      stack.pop_back();
      for (ArcId a : g_.in_arcs(v)) {
        const NodeId u = g_.arc(a).tail;
        if (u >= s && fwd[u] && !bwd[u]) {
          bwd[u] = true;
          stack.push_back(u);
        }
      }
    }
    bool any_arc = false;
    for (NodeId v = s; v < n_; ++v) allowed_[v] = fwd[v] && bwd[v];
    for (ArcId a : g_.in_arcs(s)) any_arc = any_arc || allowed_[g_.arc(a).tail];
    return any_arc;
  }

  void unblock(NodeId u) {
    std::vector<NodeId> work{u};
    blocked_[u] = false;
    while (!work.empty()) {
      const NodeId v = work.back();
      work.pop_back();
      for (NodeId w : blockers_[v]) {
        if (blocked_[w]) {
          blocked_[w] = false;
          work.push_back(w);
        }
      }
      blockers_[v].clear();
    }
  }

  bool out_of_time() {
    if (!limits_.deadline) return false;
    if ((++ticks_ & 0x3FF) != 0) return false;
    if (std::chrono::steady_clock::now() < *limits_.deadline) return false;
    result_.timed_out = true;
    result_.complete = false;
    stopped_ = true;
    return true;
  }

  void report(ArcId closing) {
    if (result_.count >= limits_.max_cycles) {
      result_.complete = false;
      stopped_ = true;
      return;
    }
    ++result_.count;
    path_.push_back(closing);
    visit_(path_);
    path_.pop_back();
  }

  void circuits_from(NodeId s) {
    for (NodeId v = s; v < n_; ++v) {
      if (allowed_[v]) {
        blocked_[v] = false;
        blockers_[v].clear();
      }
    }
    struct Frame {
      NodeId v;
      std::size_t next;
      bool found;
    };
    std::vector<Frame> frames{{s, 0, false}};
    path_.clear();
    blocked_[s] = true;
    while (!frames.empty()) {
      if (stopped_ || out_of_time()) return;
      Frame& f = frames.back();
      const auto out = g_.out_arcs(f.v);
      if (f.next < out.size()) {
        const ArcId a = out[f.next++];
        const NodeId w = g_.arc(a).head;
        if (!allowed_[w]) continue;
        if (w == s) {
          f.found = true;
          report(a);
        } else if (!blocked_[w]) {
          path_.push_back(a);
          blocked_[w] = true;
          frames.push_back({w, 0, false});
        }
        continue;
      }
      const Frame done = f;
      frames.pop_back();
      if (done.found) {
        unblock(done.v);
      } else {
        for (ArcId a : out) {
          const NodeId w = g_.arc(a).head;
          if (!allowed_[w]) continue;
          auto& list = blockers_[w];
          if (std::find(list.begin(), list.end(), done.v) == list.end()) list.push_back(done.v);
        }
      }
      if (!frames.empty()) {
        path_.pop_back();
        frames.back().found = frames.back().found || done.found;
      }
    }
  }

  const WeightedDigraph& g_;
  const EnumerationLimits& limits_;
  const CycleVisitor& visit_;
  std::size_t n_;
  std::vector<bool> allowed_;
  std::vector<bool> blocked_;
  std::vector<std::vector<NodeId>> blockers_;
  std::vector<ArcId> path_;
  EnumerationResult result_;
  std::uint64_t ticks_ = 0;
  bool stopped_ = false;
};

}  // namespace detail

/// Johnson's circuit enumeration over arc ids, so parallel arcs give distinct
/// cycles. Each cycle is reported once, rotated to start at its smallest node.
/// Stops with complete = false when a (max_cycles + 1)-th cycle is found or
/// the deadline passes.
inline EnumerationResult enumerate_simple_cycles(const WeightedDigraph& g, const EnumerationLimits& limits,
                                                 const CycleVisitor& visit) {
  return detail::JohnsonEnumerator(g, limits, visit).run();
}

inline EnumerationResult enumerate_simple_cycles(const WeightedDigraph& g, std::uint64_t max_cycles,
                                                 const CycleVisitor& visit) {
  return enumerate_simple_cycles(g, EnumerationLimits{max_cycles, std::nullopt}, visit);
}

/// L_w, L_l, S_w, S_l from one enumeration pass.
struct ExtremalCycles {
  Cycle max_weight;
  Cycle max_length;
  Cycle min_weight;
  Cycle min_length;
  std::uint64_t total_cycle_count = 0;
  bool complete = false;
  bool timed_out = false;

  friend bool operator==(const ExtremalCycles&, const ExtremalCycles&) = default;
};

namespace detail {

/// Reproducibility tie-break: shorter first, then smaller node sequence,
/// then smaller arc sequence (parallel arcs).
inline bool tie_less(const WeightedDigraph& g, const Cycle& a, const Cycle& b) {
  if (a.length != b.length) return a.length < b.length;
  for (std::size_t i = 0; i < a.arcs.size(); ++i) {
    const NodeId ta = g.arc(a.arcs[i]).tail;
    const NodeId tb = g.arc(b.arcs[i]).tail;
    if (ta != tb) return ta < tb;
  }
  return a.arcs < b.arcs;
}

}  // namespace detail

inline ExtremalCycles extremal_cycles(const WeightedDigraph& g, const EnumerationLimits& limits) {
  ExtremalCycles ex;
  bool first = true;
  Cycle c;
  const CycleVisitor visit = [&](std::span<const ArcId> arcs) {
    c.arcs.assign(arcs.begin(), arcs.end());
    c.weight = checked_weight_sum(g, arcs);
    c.length = static_cast<std::int64_t>(arcs.size());
    if (first) {
      ex.max_weight = ex.max_length = ex.min_weight = ex.min_length = c;
      first = false;
      return;
    }
    if (c.weight > ex.max_weight.weight || (c.weight == ex.max_weight.weight && detail::tie_less(g, c, ex.max_weight))) {
      ex.max_weight = c;
    }
    if (c.length > ex.max_length.length || (c.length == ex.max_length.length && detail::tie_less(g, c, ex.max_length))) {
      ex.max_length = c;
    }
    if (c.weight < ex.min_weight.weight || (c.weight == ex.min_weight.weight && detail::tie_less(g, c, ex.min_weight))) {
      ex.min_weight = c;
    }
    if (c.length < ex.min_length.length || (c.length == ex.min_length.length && detail::tie_less(g, c, ex.min_length))) {
      ex.min_length = c;
    }
  };
  const EnumerationResult r = enumerate_simple_cycles(g, limits, visit);
  if (first) throw NoCycleError("component has no cycle");
  ex.total_cycle_count = r.count;
  ex.complete = r.complete;
  ex.timed_out = r.timed_out;
  return ex;
}

inline ExtremalCycles extremal_cycles(const WeightedDigraph& g, std::uint64_t max_cycles = default_cycle_cap) {
  return extremal_cycles(g, EnumerationLimits{max_cycles, std::nullopt});
}

/// One dump line: `c <w(C)> <|C|> <v1> ... <v1>` with 1-based ids. node_ids
/// maps local nodes to global ones (empty for identity).
inline std::string cycle_dump_line(const WeightedDigraph& g, std::span<const ArcId> arcs,
                                   std::span<const NodeId> node_ids = {}) {
  const auto label = [&](NodeId v) { return std::to_string((node_ids.empty() ? v : node_ids[v]) + 1); };
  std::string line = "c " + std::to_string(checked_weight_sum(g, arcs)) + " " + std::to_string(arcs.size());
  for (ArcId a : arcs) line += " " + label(g.arc(a).tail);
  line += " " + label(g.arc(arcs.front()).tail);
  return line;
}

}  // namespace cyclebound

#endif  // CYCLEBOUND_ENUMERATION_HPP
