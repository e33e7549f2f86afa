#ifndef CYCLEBOUND_CYCLE_HPP
#define CYCLEBOUND_CYCLE_HPP

#include <cstdint>
#include <limits>
#include <span>
#include <stdexcept>
#include <vector>

#include "cyclebound/digraph.hpp"
#include "cyclebound/rational.hpp"

namespace cyclebound {

/// Which optimum a cycle-mean computation targets.
enum class Direction { min, max };

inline const char* to_string(Direction d) { return d == Direction::min ? "min" : "max"; }

/// A node-simple directed cycle, stored as arc ids of its parent graph.
/// The weight and length are cached at construction.
struct Cycle {
  std::vector<ArcId> arcs;
  Weight weight = 0;
  std::int64_t length = 0;

  friend bool operator==(const Cycle&, const Cycle&) = default;
};

inline Weight checked_weight_sum(const WeightedDigraph& g, std::span<const ArcId> arcs) {
  wide_int sum = 0;
  for (ArcId a : arcs) sum += g.arc(a).weight;
  if (sum > std::numeric_limits<Weight>::max() || sum < std::numeric_limits<Weight>::min()) {
    throw std::overflow_error("cycle weight exceeds 64 bits");
  }
  return static_cast<Weight>(sum);
}

/// Builds a cycle from an arc sequence, checking head-to-tail adjacency,
/// closure and that no node repeats.
inline Cycle make_cycle(const WeightedDigraph& g, std::vector<ArcId> arcs) {
  if (arcs.empty()) throw std::invalid_argument("cycle needs at least one arc");
  std::vector<bool> seen(g.node_count(), false);
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    if (arcs[i] >= g.arc_count()) throw std::invalid_argument("cycle arc id out of range");
    const Arc& a = g.arc(arcs[i]);
    const Arc& next = g.arc(arcs[(i + 1) % arcs.size()]);
    if (a.head != next.tail) throw std::invalid_argument("cycle arcs are not head-to-tail adjacent");
    if (seen[a.tail]) throw std::invalid_argument("cycle visits a node twice");
    seen[a.tail] = true;
  }
  Cycle c;
  c.weight = checked_weight_sum(g, arcs);
  c.length = static_cast<std::int64_t>(arcs.size());
  c.arcs = std::move(arcs);
  return c;
}

/// w(C) / |C|, exact.
inline Rational cycle_mean(const Cycle& c) {
  if (c.length < 1) throw std::invalid_argument("cycle mean of empty cycle");
  return Rational(c.weight, c.length);
}

/// Visited nodes in order, starting at the tail of the first arc.
inline std::vector<NodeId> cycle_nodes(const WeightedDigraph& g, const Cycle& c) {
  std::vector<NodeId> nodes;
  nodes.reserve(c.arcs.size());
  for (ArcId a : c.arcs) nodes.push_back(g.arc(a).tail);
  return nodes;
}

/// Rotates the arc sequence so it starts at the smallest node.
inline Cycle canonical_rotation(const WeightedDigraph& g, Cycle c) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < c.arcs.size(); ++i) {
    if (g.arc(c.arcs[i]).tail < g.arc(c.arcs[best]).tail) best = i;
  }
  std::vector<ArcId> rotated(c.arcs.begin() + static_cast<std::ptrdiff_t>(best), c.arcs.end());
  rotated.insert(rotated.end(), c.arcs.begin(), c.arcs.begin() + static_cast<std::ptrdiff_t>(best));
  c.arcs = std::move(rotated);
  return c;
}

}  // namespace cyclebound

#endif  // CYCLEBOUND_CYCLE_HPP
