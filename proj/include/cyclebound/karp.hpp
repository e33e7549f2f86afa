#ifndef CYCLEBOUND_KARP_HPP
#define CYCLEBOUND_KARP_HPP

#include <limits>
#include <optional>
#include <stdexcept>
#include <vector>

#include "cyclebound/cycle.hpp"
#include "cyclebound/digraph.hpp"
#include "cyclebound/rational.hpp"

namespace cyclebound {

/// Optimum cycle mean by Karp's walk-length recurrence, O(nm) time and
/// O(n^2) memory. Certificate-free; kept as an independent cross-check of
/// the policy-iteration solver.
///
/// D_k(v) is the least weight of a k-arc walk ending at v, starting anywhere
/// (D_0 = 0 everywhere), and
///   lambda_min = min_v max_{0<=k<n} (D_n(v) - D_k(v)) / (n - k)
/// over nodes with finite D_n(v). The maximum is obtained on negated weights.
inline Rational karp_cycle_mean(const WeightedDigraph& g, Direction dir) {
  const std::size_t n = g.node_count();
  constexpr wide_int inf = std::numeric_limits<wide_int>::max();
  const wide_int sign = dir == Direction::min ? 1 : -1;

  std::vector<std::vector<wide_int>> dist(n + 1, std::vector<wide_int>(n, inf));
  std::fill(dist[0].begin(), dist[0].end(), 0);
  for (std::size_t k = 1; k <= n; ++k) {
    const auto& prev = dist[k - 1];
    auto& cur = dist[k];
    for (const Arc& a : g.arcs()) {
      if (prev[a.tail] == inf) continue;
      const wide_int cand = prev[a.tail] + sign * a.weight;
      if (cand < cur[a.head]) cur[a.head] = cand;
    }
  }

  std::optional<Rational> best;
  for (NodeId v = 0; v < n; ++v) {
    if (dist[n][v] == inf) continue;
    std::optional<Rational> worst;
    for (std::size_t k = 0; k < n; ++k) {
      if (dist[k][v] == inf) continue;
      const Rational r = Rational::from_wide(dist[n][v] - dist[k][v], static_cast<wide_int>(n - k));
      if (!worst || *worst < r) worst = r;
    }
    if (worst && (!best || *worst < *best)) best = worst;
  }
  if (!best) throw std::invalid_argument("graph has no cycle");
  return dir == Direction::min ? *best : -*best;
}

}  // namespace cyclebound

#endif  // CYCLEBOUND_KARP_HPP
