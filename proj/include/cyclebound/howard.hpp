#ifndef CYCLEBOUND_HOWARD_HPP
#define CYCLEBOUND_HOWARD_HPP

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "cyclebound/cycle.hpp"
#include "cyclebound/digraph.hpp"
#include "cyclebound/rational.hpp"
#include "cyclebound/scc.hpp"
#include "cyclebound/transform.hpp"

namespace cyclebound {

/// Optimum cycle mean together with a proof of optimality.
///
/// For Direction::min the potentials satisfy, for every arc (u, v),
///   potential[v] - potential[u] <= w(u, v) - lambda
/// with equality on each witness arc; Direction::max mirrors the inequality.
/// potential is zero at the smallest node of the witness.
struct CycleMeanCertificate {
  Direction direction = Direction::min;
  Rational lambda;
  Cycle witness;
  std::vector<Rational> potential;
  std::size_t iterations = 0;

  friend bool operator==(const CycleMeanCertificate& a, const CycleMeanCertificate& b) {
    return a.direction == b.direction && a.lambda == b.lambda && a.witness == b.witness && a.potential == b.potential;
  }
};

class NoCycleError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

namespace detail {

/// Howard's policy iteration for the minimum cycle mean of a strongly
/// connected graph. Every node keeps one outgoing arc (its policy); each
/// round solves the policy graph exactly and then improves, first on the
/// cycle value chi and, only when no chi improvement exists, on the bias d.
/// Improvements are strict, so the iteration cannot cycle. Nodes are scanned
/// in ascending id and the smallest improving arc id wins.
class HowardSolver {
 public:
  explicit HowardSolver(const WeightedDigraph& g) : g_(g), n_(g.node_count()) {}

  CycleMeanCertificate solve() {
    policy_.resize(n_);
    for (NodeId v = 0; v < n_; ++v) {
      const auto out = g_.out_arcs(v);
      if (out.empty()) throw std::invalid_argument("node without outgoing arc");
      ArcId best = out.front();
      for (ArcId a : out) {
        if (g_.arc(a).weight < g_.arc(best).weight) best = a;
      }
      policy_[v] = best;
    }

    const std::size_t limit = 1000 + 10 * n_ * (g_.arc_count() + 1);
    std::size_t iterations = 0;
    for (;;) {
      if (++iterations > limit) throw std::logic_error("policy iteration exceeded its iteration limit");
      evaluate_policy();
      if (!improve_value() && !improve_bias()) break;
    }
    return certificate(iterations);
  }

 private:
  Rational reduced(ArcId a, const Rational& lambda) const { return Rational(g_.arc(a).weight) - lambda; }
  NodeId next(NodeId v) const { return g_.arc(policy_[v]).head; }

  void evaluate_policy() {
    chi_.assign(n_, Rational(0));
    bias_.assign(n_, Rational(0));
    cycle_handles_.clear();
    enum : std::uint8_t { fresh, on_path, done };
    std::vector<std::uint8_t> state(n_, fresh);
    std::vector<NodeId> path;
    for (NodeId start = 0; start < n_; ++start) {
      if (state[start] != fresh) continue;
      path.clear();
      NodeId v = start;
      while (state[v] == fresh) {
        state[v] = on_path;
        path.push_back(v);
        v = next(v);
      }
      if (state[v] == on_path) {
        // v closes a new policy cycle.
        std::vector<NodeId> cyc;
        NodeId handle = v;
        NodeId u = v;
        wide_int weight = 0;
        do {
          cyc.push_back(u);
          weight += g_.arc(policy_[u]).weight;
          handle = std::min(handle, u);
          u = next(u);
        } while (u != v);
        const Rational lambda = Rational::from_wide(weight, static_cast<wide_int>(cyc.size()));
        // Walk backwards from the handle, which gets bias zero.
        chi_[handle] = lambda;
        bias_[handle] = Rational(0);
        state[handle] = done;
        std::size_t pos = 0;
        while (cyc[pos] != handle) ++pos;
        for (std::size_t step = 1; step < cyc.size(); ++step) {
          const NodeId w = cyc[(pos + cyc.size() - step) % cyc.size()];
          chi_[w] = lambda;
          bias_[w] = reduced(policy_[w], lambda) + bias_[next(w)];
          state[w] = done;
        }
        cycle_handles_.push_back(handle);
      }
      for (auto it = path.rbegin(); it != path.rend(); ++it) {
        const NodeId w = *it;
        if (state[w] == done) continue;
        const NodeId h = next(w);
        chi_[w] = chi_[h];
        bias_[w] = reduced(policy_[w], chi_[w]) + bias_[h];
        state[w] = done;
      }
    }
  }

  bool improve_value() {
    bool changed = false;
    for (NodeId v = 0; v < n_; ++v) {
      ArcId best = policy_[v];
      Rational best_chi = chi_[v];
      for (ArcId a : g_.out_arcs(v)) {
        const Rational& c = chi_[g_.arc(a).head];
        if (c < best_chi) {
          best_chi = c;
          best = a;
        }
      }
      if (best != policy_[v]) {
        policy_[v] = best;
        changed = true;
      }
    }
    return changed;
  }

  bool improve_bias() {
    bool changed = false;
    for (NodeId v = 0; v < n_; ++v) {
      ArcId best = policy_[v];
      Rational best_bias = bias_[v];
      for (ArcId a : g_.out_arcs(v)) {
        const NodeId h = g_.arc(a).head;
        if (chi_[h] != chi_[v]) continue;
        const Rational cand = reduced(a, chi_[v]) + bias_[h];
        if (cand < best_bias) {
          best_bias = cand;
          best = a;
        }
      }
      if (best != policy_[v]) {
        policy_[v] = best;
        changed = true;
      }
    }
    return changed;
  }

  CycleMeanCertificate certificate(std::size_t iterations) const {
    for (NodeId v = 1; v < n_; ++v) {
      if (chi_[v] != chi_[0]) throw std::invalid_argument("graph is not strongly connected");
    }
    NodeId anchor = std::numeric_limits<NodeId>::max();
    for (NodeId h : cycle_handles_) anchor = std::min(anchor, h);

    CycleMeanCertificate cert;
    cert.direction = Direction::min;
    cert.lambda = chi_[anchor];
    cert.iterations = iterations;
    std::vector<ArcId> arcs;
    NodeId u = anchor;
    do {
      arcs.push_back(policy_[u]);
      u = next(u);
    } while (u != anchor);
    cert.witness = make_cycle(g_, std::move(arcs));
    // The bias is a distance-to-cycle; its negation is a shortest-path style
    // potential. bias_[anchor] is zero by construction.
    cert.potential.reserve(n_);
    for (NodeId v = 0; v < n_; ++v) cert.potential.push_back(-bias_[v]);
    return cert;
  }

  const WeightedDigraph& g_;
  std::size_t n_;
  std::vector<ArcId> policy_;
  std::vector<Rational> chi_;
  std::vector<Rational> bias_;
  std::vector<NodeId> cycle_handles_;
};

inline void require_cyclic_component(const WeightedDigraph& g) {
  if (g.arc_count() == 0) throw NoCycleError("component has no cycle");
  if (!is_strongly_connected(g)) throw std::invalid_argument("graph is not strongly connected");
}

}  // namespace detail

/// Minimum cycle mean of a strongly connected graph with at least one arc.
inline CycleMeanCertificate min_cycle_mean(const WeightedDigraph& g) {
  detail::require_cyclic_component(g);
  return detail::HowardSolver(g).solve();
}

/// Maximum cycle mean, computed as the negated minimum on negated weights.
inline CycleMeanCertificate max_cycle_mean(const WeightedDigraph& g) {
  detail::require_cyclic_component(g);
  const LiftedDigraph neg = transform_weights(g, Negate{});
  CycleMeanCertificate cert = detail::HowardSolver(neg.graph).solve();
  cert.direction = Direction::max;
  cert.lambda = -cert.lambda;
  for (Rational& p : cert.potential) p = -p;
  cert.witness = make_cycle(g, cert.witness.arcs);
  return cert;
}

inline CycleMeanCertificate optimum_cycle_mean(const WeightedDigraph& g, Direction dir) {
  return dir == Direction::min ? min_cycle_mean(g) : max_cycle_mean(g);
}

/// Slack of arc a under the certificate: w - lambda - (p[head] - p[tail]) for
/// min, negated for max. Feasible certificates have no negative slack.
inline Rational certificate_slack(const WeightedDigraph& g, const CycleMeanCertificate& cert, ArcId a) {
  const Arc& arc = g.arc(a);
  const Rational s = Rational(arc.weight) - cert.lambda - (cert.potential[arc.head] - cert.potential[arc.tail]);
  return cert.direction == Direction::min ? s : -s;
}

/// Empty string when the certificate proves optimality on g, otherwise a
/// description of the first violated condition.
inline std::string certificate_violation(const WeightedDigraph& g, const CycleMeanCertificate& cert) {
  if (cert.potential.size() != g.node_count()) return "potential vector has wrong size";
  for (ArcId a = 0; a < g.arc_count(); ++a) {
    if (certificate_slack(g, cert, a).sign() < 0) return "arc " + std::to_string(a) + " violates the potential inequality";
  }
  try {
    const Cycle check = make_cycle(g, cert.witness.arcs);
    if (check.weight != cert.witness.weight || check.length != cert.witness.length) return "witness cache mismatch";
  } catch (const std::exception& e) {
    return std::string("witness is not a simple cycle: ") + e.what();
  }
  if (cycle_mean(cert.witness) != cert.lambda) return "witness mean differs from lambda";
  for (ArcId a : cert.witness.arcs) {
    if (!certificate_slack(g, cert, a).is_zero()) return "witness arc " + std::to_string(a) + " is not tight";
  }
  return {};
}

}  // namespace cyclebound

#endif  // CYCLEBOUND_HOWARD_HPP
