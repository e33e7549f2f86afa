#ifndef CYCLEBOUND_TESTS_SUPPORT_HPP
#define CYCLEBOUND_TESTS_SUPPORT_HPP

// Oracles and generators shared by the test binaries. Nothing here calls the
// library's algorithms; it only uses the graph container and Rational.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "cyclebound/digraph.hpp"
#include "cyclebound/rational.hpp"

namespace testsupport {

using cyclebound::Arc;
using cyclebound::ArcId;
using cyclebound::NodeId;
using cyclebound::Rational;
using cyclebound::Weight;
using cyclebound::WeightedDigraph;

inline std::string data_path(const std::string& name) { return std::string(CYCLEBOUND_DATA_DIR) + "/" + name; }

struct BruteCycle {
  std::vector<ArcId> arcs;
  std::vector<NodeId> nodes;  // starting at the smallest node
  Weight weight = 0;
  std::int64_t length = 0;
};

/// Every simple cycle, by plain DFS from each start s through nodes > s.
/// Exponential; meant for small graphs. Returns nullopt past `cap` cycles.
inline std::optional<std::vector<BruteCycle>> brute_cycles(const WeightedDigraph& g, std::size_t cap = 2'000'000) {
  const std::size_t n = g.node_count();
  std::vector<std::vector<ArcId>> out(n);
  for (ArcId a = 0; a < g.arc_count(); ++a) out[g.arc(a).tail].push_back(a);
  std::vector<BruteCycle> found;
  std::vector<char> on_path(n, 0);
  std::vector<ArcId> path;
  bool overflow = false;
  std::function<void(NodeId, NodeId)> dfs = [&](NodeId s, NodeId v) {
    for (ArcId a : out[v]) {
      if (overflow) return;
      const NodeId h = g.arc(a).head;
      if (h == s) {
        path.push_back(a);
        BruteCycle c;
        c.arcs = path;
        for (ArcId e : path) {
          c.nodes.push_back(g.arc(e).tail);
          c.weight += g.arc(e).weight;
        }
        c.length = static_cast<std::int64_t>(path.size());
        found.push_back(std::move(c));
        path.pop_back();
        if (found.size() > cap) overflow = true;
      } else if (h > s && !on_path[h]) {
        on_path[h] = 1;
        path.push_back(a);
        dfs(s, h);
        path.pop_back();
        on_path[h] = 0;
      }
    }
  };
  for (NodeId s = 0; s < n && !overflow; ++s) {
    on_path[s] = 1;
    dfs(s, s);
    on_path[s] = 0;
  }
  if (overflow) return std::nullopt;
  return found;
}

struct BruteMeans {
  Rational min;
  Rational max;
};

inline BruteMeans brute_means(const std::vector<BruteCycle>& cycles) {
  BruteMeans m{Rational(cycles.front().weight, cycles.front().length), Rational(cycles.front().weight, cycles.front().length)};
  for (const auto& c : cycles) {
    const Rational r(c.weight, c.length);
    m.min = std::min(m.min, r);
    m.max = std::max(m.max, r);
  }
  return m;
}

inline std::uint64_t uniform(std::mt19937_64& rng, std::uint64_t lo, std::uint64_t hi) {
  return std::uniform_int_distribution<std::uint64_t>(lo, hi)(rng);
}

inline Weight uniform_weight(std::mt19937_64& rng, Weight lo, Weight hi) {
  return std::uniform_int_distribution<Weight>(lo, hi)(rng);
}

/// Strongly connected multigraph: a random Hamiltonian cycle plus up to
/// `extra` random arcs (self-loops and parallel arcs allowed).
inline WeightedDigraph random_strong_multigraph(std::mt19937_64& rng, std::size_t n, std::size_t extra, Weight lo,
                                                Weight hi) {
  std::vector<NodeId> perm(n);
  std::iota(perm.begin(), perm.end(), NodeId{0});
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<Arc> arcs;
  for (std::size_t i = 0; i < n; ++i) arcs.push_back({perm[i], perm[(i + 1) % n], uniform_weight(rng, lo, hi)});
  const std::size_t k = uniform(rng, 0, extra);
  for (std::size_t i = 0; i < k; ++i) {
    const auto t = static_cast<NodeId>(uniform(rng, 0, n - 1));
    const auto h = static_cast<NodeId>(uniform(rng, 0, n - 1));
    arcs.push_back({t, h, uniform_weight(rng, lo, hi)});
  }
  std::shuffle(arcs.begin(), arcs.end(), rng);
  return WeightedDigraph(n, std::move(arcs));
}

/// Random cyclic topology with one large strongly connected core: a ring of
/// `core` nodes with short forward chords and back arcs, and the remaining
/// nodes attached as an acyclic fringe. Weights are all 1.
inline WeightedDigraph random_cyclic_topology(std::mt19937_64& rng, std::size_t n, std::size_t core, std::size_t chords,
                                              std::size_t backs, std::size_t target_arcs) {
  std::vector<Arc> arcs;
  for (std::size_t i = 0; i < core; ++i) arcs.push_back({static_cast<NodeId>(i), static_cast<NodeId>((i + 1) % core), 1});
  for (std::size_t k = 0; k < chords; ++k) {
    const std::size_t i = uniform(rng, 0, core - 1);
    arcs.push_back({static_cast<NodeId>(i), static_cast<NodeId>((i + uniform(rng, 2, 6)) % core), 1});
  }
  for (std::size_t k = 0; k < backs; ++k) {
    const std::size_t i = uniform(rng, 0, core - 1);
    arcs.push_back({static_cast<NodeId>(i), static_cast<NodeId>((i + core - uniform(rng, 1, 8)) % core), 1});
  }
  // Fringe node v only receives arcs from nodes < v and sends to nodes > v.
  for (std::size_t v = core; v < n; ++v) arcs.push_back({static_cast<NodeId>(uniform(rng, 0, v - 1)), static_cast<NodeId>(v), 1});
  while (arcs.size() < target_arcs && n > core) {
    const std::size_t a = uniform(rng, 0, n - 1);
    const std::size_t b = uniform(rng, 0, n - 1);
    const std::size_t lo = std::min(a, b);
    const std::size_t hi = std::max(a, b);
    if (hi < core || lo == hi) continue;
    arcs.push_back({static_cast<NodeId>(lo), static_cast<NodeId>(hi), 1});
  }
  return WeightedDigraph(n, std::move(arcs));
}

inline WeightedDigraph reweighted(const WeightedDigraph& g, std::mt19937_64& rng, Weight lo, Weight hi) {
  std::vector<Weight> w(g.arc_count());
  for (Weight& x : w) x = uniform_weight(rng, lo, hi);
  return g.with_weights(w);
}

}  // namespace testsupport

#endif  // CYCLEBOUND_TESTS_SUPPORT_HPP
