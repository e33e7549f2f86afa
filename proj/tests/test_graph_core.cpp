#include <gtest/gtest.h>

#include <fstream>
#include <random>
#include <set>
#include <sstream>

#include "cyclebound/cycle.hpp"
#include "cyclebound/digraph.hpp"
#include "cyclebound/scc.hpp"
#include "cyclebound/transform.hpp"
#include "support.hpp"

namespace cb = cyclebound;
using testsupport::data_path;

namespace {

cb::WeightedDigraph load(const std::string& name) {
  std::ifstream in(data_path(name));
  return cb::parse_edge_list(in);
}

// Reachability closure by repeated relaxation, for the SCC oracle.
std::vector<std::vector<char>> reach(const cb::WeightedDigraph& g) {
  const std::size_t n = g.node_count();
  std::vector<std::vector<char>> r(n, std::vector<char>(n, 0));
  for (std::size_t v = 0; v < n; ++v) r[v][v] = 1;
  for (const auto& a : g.arcs()) r[a.tail][a.head] = 1;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (r[i][k])
        for (std::size_t j = 0; j < n; ++j)
          if (r[k][j]) r[i][j] = 1;
  return r;
}

}  // namespace

TEST(Parse, SelfLoop) {
  const auto g = cb::parse_edge_list("p 1 1\na 1 1 5");
  EXPECT_EQ(g.node_count(), 1u);
  ASSERT_EQ(g.arc_count(), 1u);
  EXPECT_EQ(g.arc(0), (cb::Arc{0, 0, 5}));
}

TEST(Parse, TwoCycle) {
  const auto g = cb::parse_edge_list("p 2 2\na 1 2 3\na 2 1 7");
  const auto c = cb::make_cycle(g, {0, 1});
  EXPECT_EQ(c.weight, 10);
  EXPECT_EQ(c.length, 2);
}

TEST(Parse, CommentsBlankLinesAndNegativeWeights) {
  const auto g = cb::parse_edge_list("# header\n\np 3 2\n# arcs\na 1 2 -4\n\na 3 1 9\n");
  EXPECT_EQ(g.arc(0).weight, -4);
  EXPECT_EQ(g.arc(1), (cb::Arc{2, 0, 9}));
}

TEST(Parse, Scc4Fixture) {
  const auto g = load("scc4.graph");
  EXPECT_EQ(g.node_count(), 4u);
  EXPECT_EQ(g.arc_count(), 8u);
}

TEST(Parse, Errors) {
  EXPECT_THROW(cb::parse_edge_list("p 2 1\na 1 3 4\n"), cb::ParseError);        // id out of range
  EXPECT_THROW(cb::parse_edge_list("p 2 1\na 0 1 4\n"), cb::ParseError);        // ids are 1-based
  EXPECT_THROW(cb::parse_edge_list("p 2 2\na 1 2 4\n"), cb::ParseError);        // too few arcs
  EXPECT_THROW(cb::parse_edge_list("p 2 1\na 1 2 4\na 2 1 4\n"), cb::ParseError);  // too many
  EXPECT_THROW(cb::parse_edge_list("p 2 1\na 1 2 4.5\n"), cb::ParseError);      // non-integer
  EXPECT_THROW(cb::parse_edge_list("p 2 1\na 1 2\n"), cb::ParseError);          // malformed
  EXPECT_THROW(cb::parse_edge_list("a 1 2 3\n"), cb::ParseError);               // no header
  EXPECT_THROW(cb::parse_edge_list("p 2 1\nx 1 2 3\n"), cb::ParseError);
  try {
    cb::parse_edge_list("p 2 1\n# c\na 1 2 x\n");
    FAIL();
  } catch (const cb::ParseError& e) {
    EXPECT_EQ(e.line(), 3u);
  }
}

TEST(Parse, SerializeRoundTrip) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 200; ++i) {
    const auto g = testsupport::random_strong_multigraph(rng, 1 + i % 12, 20, -1000, 1000);
    const std::string text = cb::serialize_edge_list(g);
    const auto back = cb::parse_edge_list(text);
    EXPECT_EQ(back, g);
    EXPECT_EQ(cb::serialize_edge_list(back), text);
  }
}

TEST(Scc, ExampleGraph) {
  const auto g = load("fig1.graph");
  EXPECT_EQ(g.node_count(), 18u);
  EXPECT_EQ(g.arc_count(), 32u);
  const auto d = cb::decompose_sccs(g);
  std::vector<std::size_t> sizes;
  for (const auto& c : d.components)
    if (!c.trivial) sizes.push_back(c.nodes.size());
  EXPECT_EQ(sizes, (std::vector<std::size_t>{1, 2, 5, 4, 5, 1}));
  EXPECT_EQ(d.components.size(), 6u);
}

TEST(Scc, SingleNodeAndDag) {
  const auto one = cb::decompose_sccs(cb::WeightedDigraph(1, {}));
  ASSERT_EQ(one.components.size(), 1u);
  EXPECT_TRUE(one.components[0].trivial);

  std::mt19937_64 rng(5);
  std::vector<cb::Arc> arcs;
  for (int k = 0; k < 25; ++k) {
    auto a = static_cast<cb::NodeId>(rng() % 10), b = static_cast<cb::NodeId>(rng() % 10);
    if (a == b) continue;
    arcs.push_back({std::min(a, b), std::max(a, b), 1});
  }
  const auto d = cb::decompose_sccs(cb::WeightedDigraph(10, arcs));
  EXPECT_EQ(d.components.size(), 10u);
  EXPECT_EQ(d.nontrivial_count(), 0u);
}

TEST(Scc, SelfLoopIsNontrivial) {
  const auto d = cb::decompose_sccs(cb::parse_edge_list("p 2 1\na 2 2 1\n"));
  ASSERT_EQ(d.components.size(), 2u);
  EXPECT_TRUE(d.components[0].trivial);
  EXPECT_FALSE(d.components[1].trivial);
}

TEST(Scc, MatchesMutualReachability) {
  std::mt19937_64 rng(17);
  for (int it = 0; it < 300; ++it) {
    const std::size_t n = 1 + rng() % 15;
    std::vector<cb::Arc> arcs;
    const std::size_t m = rng() % (2 * n + 1);
    for (std::size_t k = 0; k < m; ++k)
      arcs.push_back({static_cast<cb::NodeId>(rng() % n), static_cast<cb::NodeId>(rng() % n), 1});
    const cb::WeightedDigraph g(n, arcs);
    const auto d = cb::decompose_sccs(g);
    const auto r = reach(g);
    std::set<cb::NodeId> seen;
    for (const auto& comp : d.components) {
      for (auto v : comp.nodes) {
        EXPECT_TRUE(seen.insert(v).second);
        EXPECT_EQ(d.component_of[v], comp.id);
      }
      // Local graph holds exactly the internal arcs.
      std::size_t internal = 0;
      for (const auto& a : g.arcs()) internal += d.component_of[a.tail] == comp.id && d.component_of[a.head] == comp.id;
      EXPECT_EQ(comp.graph.arc_count(), internal);
      EXPECT_EQ(comp.trivial, internal == 0);
      for (std::size_t j = 0; j < comp.arcs.size(); ++j) {
        const auto& ga = g.arc(comp.arcs[j]);
        const auto& la = comp.graph.arc(static_cast<cb::ArcId>(j));
        EXPECT_EQ(comp.nodes[la.tail], ga.tail);
        EXPECT_EQ(comp.nodes[la.head], ga.head);
        EXPECT_EQ(la.weight, ga.weight);
      }
    }
    EXPECT_EQ(seen.size(), n);
    for (std::size_t u = 0; u < n; ++u)
      for (std::size_t v = 0; v < n; ++v)
        EXPECT_EQ(d.component_of[u] == d.component_of[v], r[u][v] && r[v][u]);
    for (std::size_t i = 1; i < d.components.size(); ++i)
      EXPECT_LT(d.components[i - 1].nodes.front(), d.components[i].nodes.front());
  }
}

TEST(Cycle, MeanExamples) {
  const auto g = load("scc3.graph");
  // 4->6->7->8->5->4 in the example numbering is 1->3->4->5->2->1 here.
  const auto c4 = cb::make_cycle(g, {1, 2, 4, 5, 6});
  EXPECT_EQ(c4.weight, 21718);
  EXPECT_EQ(cb::cycle_mean(c4), cb::Rational(21718, 5));
  EXPECT_EQ(cb::cycle_mean(c4).to_double(), 4343.6);

  const auto s4 = load("scc4.graph");
  EXPECT_EQ(cb::cycle_mean(cb::make_cycle(s4, {1})), cb::Rational(887));

  const auto z = cb::parse_edge_list("p 3 3\na 1 2 5\na 2 3 -2\na 3 1 -3\n");
  EXPECT_EQ(cb::cycle_mean(cb::make_cycle(z, {0, 1, 2})), cb::Rational(0));
}

TEST(Cycle, Validation) {
  const auto g = cb::parse_edge_list("p 3 4\na 1 2 1\na 2 3 1\na 3 1 1\na 2 1 1\n");
  EXPECT_THROW(cb::make_cycle(g, {}), std::invalid_argument);
  EXPECT_THROW(cb::make_cycle(g, {0, 2}), std::invalid_argument);     // not adjacent
  EXPECT_THROW(cb::make_cycle(g, {0, 1}), std::invalid_argument);     // not closed
  EXPECT_THROW(cb::make_cycle(g, {0, 3, 0, 3}), std::invalid_argument);  // repeats a node
  EXPECT_NO_THROW(cb::make_cycle(g, {1, 2, 0}));
  EXPECT_EQ(cb::canonical_rotation(g, cb::make_cycle(g, {1, 2, 0})).arcs, (std::vector<cb::ArcId>{0, 1, 2}));
}

TEST(Transform, NegateIsInvolution) {
  std::mt19937_64 rng(23);
  for (int i = 0; i < 50; ++i) {
    const auto g = testsupport::random_strong_multigraph(rng, 6, 10, -50, 50);
    const auto twice = cb::transform_weights(cb::transform_weights(g, cb::Negate{}), cb::Negate{});
    EXPECT_EQ(twice.denominator, 1);
    EXPECT_EQ(twice.graph, g);
  }
}

TEST(Transform, ScaleRejectsNonPositive) {
  const auto g = cb::parse_edge_list("p 1 1\na 1 1 5");
  EXPECT_THROW(cb::transform_weights(g, cb::Scale{cb::Rational(0)}), std::invalid_argument);
  EXPECT_THROW(cb::transform_weights(g, cb::Scale{cb::Rational(-1, 2)}), std::invalid_argument);
}

TEST(Transform, CycleMeansMoveExactly) {
  std::mt19937_64 rng(29);
  for (int i = 0; i < 150; ++i) {
    const auto g = testsupport::random_strong_multigraph(rng, 2 + i % 9, 12, -50, 50);
    const auto cycles = *testsupport::brute_cycles(g);
    const cb::Rational c(static_cast<long long>(rng() % 201) - 100, 1 + static_cast<long long>(rng() % 7));
    const cb::Rational f(1 + static_cast<long long>(rng() % 9), 1 + static_cast<long long>(rng() % 9));
    const auto sh = cb::transform_weights(g, cb::Shift{c});
    const auto sc = cb::transform_weights(g, cb::Scale{f});
    const auto ng = cb::transform_weights(g, cb::Negate{});
    for (const auto& bc : cycles) {
      const cb::Rational mean(bc.weight, bc.length);
      const auto lifted_mean = [&](const cb::LiftedDigraph& t) {
        cb::Weight w = 0;
        for (auto a : bc.arcs) w += t.graph.arc(a).weight;
        return t.unlift(cb::Rational(w, bc.length));
      };
      EXPECT_EQ(lifted_mean(sh), mean + c);
      EXPECT_EQ(lifted_mean(sc), mean * f);
      EXPECT_EQ(lifted_mean(ng), -mean);
    }
  }
}
