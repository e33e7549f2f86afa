#ifndef CYCLEBOUND_SCC_HPP
#define CYCLEBOUND_SCC_HPP

#include <algorithm>
#include <cstdint>
#include <limits>
#include <utility>
#include <vector>

#include "cyclebound/digraph.hpp"

namespace cyclebound {

/// A strongly connected component extracted as a standalone graph.
///
/// Local node i corresponds to global node nodes[i]; nodes are sorted, so
/// local order agrees with global order. Local arc j is global arc arcs[j].
struct Component {
  std::size_t id = 0;
  std::vector<NodeId> nodes;
  std::vector<ArcId> arcs;
  bool trivial = false;
  WeightedDigraph graph;
};

struct SccDecomposition {
  std::vector<std::size_t> component_of;  // per global node
  std::vector<Component> components;      // ordered by smallest member node

  [[nodiscard]] std::size_t nontrivial_count() const {
    return static_cast<std::size_t>(
        std::count_if(components.begin(), components.end(), [](const Component& c) { return !c.trivial; }));
  }
};

namespace detail {

/// Tarjan's algorithm with an explicit stack. Returns a raw component label
/// per node (labels in reverse topological order of the condensation).
inline std::vector<std::size_t> tarjan_labels(const WeightedDigraph& g, std::size_t& label_count) {
  constexpr std::size_t unvisited = std::numeric_limits<std::size_t>::max();
  const std::size_t n = g.node_count();
  std::vector<std::size_t> index(n, unvisited), low(n, 0), label(n, unvisited);
  std::vector<bool> on_stack(n, false);
  std::vector<NodeId> stack;
  struct Frame {
    NodeId v;
    std::size_t next;
  };
  std::vector<Frame> call;
  std::size_t counter = 0;
  label_count = 0;

  for (NodeId root = 0; root < n; ++root) {
    if (index[root] != unvisited) continue;
    call.push_back({root, 0});
    index[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = true;
    while (!call.empty()) {
      Frame& f = call.back();
      const auto out = g.out_arcs(f.v);
      if (f.next < out.size()) {
        const NodeId w = g.arc(out[f.next++]).head;
        if (index[w] == unvisited) {
          index[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = true;
          call.push_back({w, 0});
        } else if (on_stack[w]) {
          low[f.v] = std::min(low[f.v], index[w]);
        }
        continue;
      }
      const NodeId v = f.v;
      call.pop_back();
      if (!call.empty()) low[call.back().v] = std::min(low[call.back().v], low[v]);
      if (low[v] == index[v]) {
        NodeId w = 0;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          label[w] = label_count;
        } while (w != v);
        ++label_count;
      }
    }
  }
  return label;
}

}  // namespace detail

inline SccDecomposition decompose_sccs(const WeightedDigraph& g) {
  std::size_t raw_count = 0;
  const auto raw = detail::tarjan_labels(g, raw_count);

  // Renumber so components are ordered by their smallest node.
  constexpr std::size_t unset = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> renumber(raw_count, unset);
  std::size_t next = 0;
  for (NodeId v = 0; v < g.node_count(); ++v) {
    if (renumber[raw[v]] == unset) renumber[raw[v]] = next++;
  }

  SccDecomposition d;
  d.component_of.resize(g.node_count());
  d.components.resize(raw_count);
  for (std::size_t c = 0; c < raw_count; ++c) d.components[c].id = c;
  for (NodeId v = 0; v < g.node_count(); ++v) {
    d.component_of[v] = renumber[raw[v]];
    d.components[d.component_of[v]].nodes.push_back(v);
  }
  for (ArcId a = 0; a < g.arc_count(); ++a) {
    const Arc& arc = g.arc(a);
    if (d.component_of[arc.tail] == d.component_of[arc.head]) d.components[d.component_of[arc.tail]].arcs.push_back(a);
  }

  std::vector<NodeId> local(g.node_count(), 0);
  for (Component& c : d.components) {
    for (std::size_t i = 0; i < c.nodes.size(); ++i) local[c.nodes[i]] = static_cast<NodeId>(i);
    std::vector<Arc> arcs;
    arcs.reserve(c.arcs.size());
    for (ArcId a : c.arcs) {
      const Arc& arc = g.arc(a);
      arcs.push_back(Arc{local[arc.tail], local[arc.head], arc.weight});
    }
    c.trivial = c.arcs.empty();  // a single node with no self-loop
    c.graph = WeightedDigraph(c.nodes.size(), std::move(arcs));
  }
  return d;
}

/// True when every node reaches every other node.
inline bool is_strongly_connected(const WeightedDigraph& g) {
  if (g.node_count() == 0) return false;
  std::size_t count = 0;
  detail::tarjan_labels(g, count);
  return count == 1;
}

}  // namespace cyclebound

#endif  // CYCLEBOUND_SCC_HPP
