#include <gtest/gtest.h>

#include <random>

#include "polyzoo/polyzoo.hpp"
#include "support/catalog.hpp"

using namespace polyzoo;
using polyzoo::testing::random_multigraph;
using polyzoo::testing::random_relabel;
using polyzoo::testing::random_simple_graph;
using polyzoo::testing::simple_graphs;

namespace {

Graph double_edge() { return Graph(2, {{0, 1}, {0, 1}}); }

}  // namespace

TEST(Graph, EdgesAreNormalizedAndSorted) {
  Graph g(3, {{2, 1}, {0, 2}, {1, 0}});
  ASSERT_EQ(g.size(), 3u);
  EXPECT_EQ(g.edges()[0], (Edge{0, 1}));
  EXPECT_EQ(g.edges()[1], (Edge{0, 2}));
  EXPECT_EQ(g.edges()[2], (Edge{1, 2}));
}

TEST(Graph, RejectsOutOfRangeEndpoint) { EXPECT_THROW(Graph(2, {{0, 2}}), std::invalid_argument); }

TEST(Graph, DegreeCountsLoopsTwice) {
  Graph g(2, {{0, 0}, {0, 1}});
  EXPECT_EQ(g.degree(0), 3u);
  EXPECT_EQ(g.degree(1), 1u);
  EXPECT_TRUE(g.has_loops());
  EXPECT_FALSE(g.is_simple());
}

TEST(Graph, Families) {
  EXPECT_EQ(complete_graph(5).size(), 10u);
  EXPECT_EQ(path_graph(5).size(), 4u);
  EXPECT_EQ(cycle_graph(5).size(), 5u);
  EXPECT_EQ(star_graph(4).order(), 5u);
  EXPECT_EQ(star_graph(4).degree(0), 4u);
  EXPECT_EQ(path_graph(0).order(), 0u);
  EXPECT_EQ(path_graph(1).size(), 0u);
  EXPECT_THROW(cycle_graph(2), std::invalid_argument);
}

TEST(Graph, DeleteEdge) {
  EXPECT_EQ(canonical_key(delete_edge(complete_graph(3), {0, 1, 0})), canonical_key(path_graph(3)));
  EXPECT_EQ(delete_edge(double_edge(), {0, 1, 0}), Graph(2, {{0, 1}}));
  EXPECT_EQ(delete_edge(complete_graph(2), {0, 1, 0}), empty_graph(2));
  EXPECT_THROW(delete_edge(complete_graph(2), {0, 1, 1}), std::invalid_argument);
  EXPECT_THROW(delete_edge(path_graph(3), {0, 2, 0}), std::invalid_argument);
}

TEST(Graph, ContractEdge) {
  EXPECT_EQ(contract_edge(complete_graph(3), {0, 1, 0}), double_edge());
  EXPECT_EQ(contract_edge(complete_graph(2), {0, 1, 0}), empty_graph(1));
  EXPECT_EQ(contract_edge(double_edge(), {0, 1, 0}), Graph(1, {{0, 0}}));
  EXPECT_THROW(contract_edge(Graph(1, {{0, 0}}), {0, 0, 0}), std::invalid_argument);
}

TEST(Graph, ContractShiftsHigherVertices) {
  // 0-1-2-3, contract {1,2}: vertex 3 becomes 2.
  EXPECT_EQ(contract_edge(path_graph(4), {1, 2, 0}), path_graph(3));
}

TEST(Graph, DisjointUnion) {
  EXPECT_EQ(disjoint_union(empty_graph(2), empty_graph(3)), empty_graph(5));
  EXPECT_EQ(disjoint_union(complete_graph(2), complete_graph(2)), Graph(4, {{0, 1}, {2, 3}}));
  const auto p = path_graph(4);
  EXPECT_EQ(disjoint_union(p, empty_graph(0)), p);
  EXPECT_EQ(disjoint_union(empty_graph(0), p), p);
}

TEST(Graph, Simplify) {
  auto s = simplify(double_edge());
  EXPECT_EQ(s.graph, complete_graph(2));
  EXPECT_FALSE(s.had_loops);
  s = simplify(Graph(1, {{0, 0}}));
  EXPECT_EQ(s.graph, empty_graph(1));
  EXPECT_TRUE(s.had_loops);
  s = simplify(cycle_graph(5));
  EXPECT_EQ(s.graph, cycle_graph(5));
  EXPECT_FALSE(s.had_loops);
}

TEST(Graph, SimplifyIsIdempotent) {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 100; ++t) {
    const auto g = random_multigraph(5, 8, rng);
    const auto once = simplify(g).graph;
    EXPECT_TRUE(once.is_simple());
    EXPECT_EQ(simplify(once).graph, once);
  }
}

TEST(Graph, ComponentsAndRank) {
  const auto g = disjoint_union(path_graph(3), disjoint_union(empty_graph(2), cycle_graph(4)));
  EXPECT_EQ(component_count(g), 4u);
  EXPECT_EQ(graph_rank(g), 9u - 4u);
  EXPECT_EQ(component_count(empty_graph(0)), 0u);
}

TEST(Graph, Bridges) {
  EXPECT_TRUE(is_bridge(path_graph(3), {0, 1}));
  EXPECT_FALSE(is_bridge(cycle_graph(4), {0, 1}));
  EXPECT_FALSE(is_bridge(double_edge(), {0, 1}));
  EXPECT_FALSE(is_bridge(Graph(1, {{0, 0}}), {0, 0}));
}

TEST(Graph, InducedAndRemove) {
  const auto k4 = complete_graph(4);
  const std::vector<Vertex> keep{0, 2, 3};
  EXPECT_EQ(induced_subgraph(k4, keep), complete_graph(3));
  const std::vector<Vertex> drop{1};
  EXPECT_EQ(remove_vertices(k4, drop), complete_graph(3));
}

// ---- edge list ----

TEST(EdgeList, Parses) {
  EXPECT_EQ(parse_edge_list("3\n0 1\n1 2\n"), path_graph(3));
  EXPECT_EQ(parse_edge_list("4"), empty_graph(4));
  EXPECT_EQ(parse_edge_list("2 0 0 0 1 0 1"), Graph(2, {{0, 0}, {0, 1}, {0, 1}}));
}

TEST(EdgeList, Errors) {
  EXPECT_THROW(parse_edge_list("2\n0 5\n"), ParseError);
  EXPECT_THROW(parse_edge_list("-1"), ParseError);
  EXPECT_THROW(parse_edge_list("3 0 x"), ParseError);
  EXPECT_THROW(parse_edge_list("3 0 1 2"), ParseError);
  EXPECT_THROW(parse_edge_list(""), ParseError);
}

TEST(EdgeList, RoundTrip) {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 50; ++t) {
    const auto g = random_multigraph(6, 9, rng);
    EXPECT_EQ(parse_edge_list(to_edge_list(g)), g);
  }
}

// ---- graph6 ----
// Frozen vectors produced by an independent graph6 codec.

TEST(Graph6, FrozenVectors) {
  EXPECT_EQ(parse_graph6("@"), empty_graph(1));
  EXPECT_EQ(parse_graph6("?"), empty_graph(0));
  EXPECT_EQ(parse_graph6("Bw"), complete_graph(3));
  EXPECT_EQ(parse_graph6("C~"), complete_graph(4));
  EXPECT_EQ(parse_graph6("Cl"), cycle_graph(4));
  EXPECT_EQ(parse_graph6("DA_"), Graph(5, {{0, 4}, {1, 3}}));
  EXPECT_EQ(to_graph6(complete_graph(3)), "Bw");
  EXPECT_EQ(to_graph6(cycle_graph(4)), "Cl");
  EXPECT_EQ(to_graph6(Graph(5, {{0, 4}, {1, 3}})), "DA_");
  EXPECT_EQ(to_graph6(empty_graph(1)), "@");
  // P3 labelled 0-1-2 is "Bg" only with edges {0,2},{1,2}; check through isomorphism.
  EXPECT_EQ(canonical_key(parse_graph6("Bg")), canonical_key(path_graph(3)));
}

TEST(Graph6, PetersenAndLongForm) {
  const auto petersen = parse_graph6("IheA@GUAo");
  EXPECT_EQ(petersen.order(), 10u);
  EXPECT_EQ(petersen.size(), 15u);
  for (Vertex v = 0; v < 10; ++v) EXPECT_EQ(petersen.degree(v), 3u);
  const auto p70 = path_graph(70);
  const auto s = to_graph6(p70);
  EXPECT_EQ(s.substr(0, 4), "~?@E");
  EXPECT_EQ(parse_graph6(s), p70);
}

TEST(Graph6, HeaderAccepted) { EXPECT_EQ(parse_graph6(">>graph6<<Bw"), complete_graph(3)); }

TEST(Graph6, Errors) {
  EXPECT_THROW(parse_graph6(""), ParseError);
  EXPECT_THROW(parse_graph6("B"), ParseError);      // too short
  EXPECT_THROW(parse_graph6("Bww"), ParseError);    // too long
  EXPECT_THROW(parse_graph6("B\x7f"), ParseError);  // outside alphabet
  EXPECT_THROW(parse_graph6("Bx"), ParseError);     // padding bits set
}

TEST(Graph6, RejectsMultigraphOnWrite) { EXPECT_THROW(to_graph6(double_edge()), std::invalid_argument); }

TEST(Graph6, RoundTripExhaustive) {
  for (std::size_t n = 0; n <= 5; ++n) {
    for (const auto& g : simple_graphs(n)) EXPECT_EQ(parse_graph6(to_graph6(g)), g);
  }
  std::mt19937_64 rng(9);
  for (int t = 0; t < 50; ++t) {
    const auto g = random_simple_graph(1 + t, 0.3, rng);
    EXPECT_EQ(parse_graph6(to_graph6(g)), g);
  }
}

// ---- canonical keys ----

TEST(Canonical, Examples) {
  EXPECT_EQ(canonical_key(Graph(3, {{0, 1}, {1, 2}})), canonical_key(Graph(3, {{0, 2}, {1, 2}})));
  EXPECT_NE(canonical_key(path_graph(3)), canonical_key(complete_graph(3)));
  const auto k2k1 = disjoint_union(complete_graph(2), empty_graph(1));
  for (auto perm : {std::vector<Vertex>{0, 1, 2}, {2, 0, 1}, {1, 2, 0}, {2, 1, 0}}) {
    EXPECT_EQ(canonical_key(relabel(k2k1, perm)), canonical_key(k2k1));
  }
}

TEST(Canonical, DistinguishesMultiplicityAndLoops) {
  EXPECT_NE(canonical_key(double_edge()), canonical_key(complete_graph(2)));
  EXPECT_NE(canonical_key(Graph(2, {{0, 0}})), canonical_key(empty_graph(2)));
  EXPECT_NE(canonical_key(Graph(2, {{0, 0}, {0, 1}})), canonical_key(Graph(2, {{0, 1}, {1, 1}, {1, 1}})));
}

TEST(Canonical, RelabelInvarianceExhaustive) {
  std::mt19937_64 rng(1);
  for (std::size_t n = 1; n <= 5; ++n) {
    for (const auto& g : simple_graphs(n)) {
      std::vector<Vertex> perm(n);
      for (Vertex i = 0; i < n; ++i) perm[i] = i;
      const auto key = canonical_key(g);
      do {
        EXPECT_EQ(canonical_key(relabel(g, perm)), key);
      } while (std::next_permutation(perm.begin(), perm.end()));
    }
  }
}

TEST(Canonical, RelabelInvarianceRandomMultigraphs) {
  std::mt19937_64 rng(2);
  for (int t = 0; t < 300; ++t) {
    const std::size_t n = 1 + t % 8;
    const auto g = random_multigraph(n, 2 * n, rng);
    EXPECT_EQ(canonical_key(random_relabel(g, rng)), canonical_key(g));
  }
}

TEST(Canonical, ClassCountsMatchKnownSequence) {
  const std::vector<std::size_t> expected{1, 1, 2, 4, 11, 34, 156};
  for (std::size_t n = 0; n < expected.size(); ++n) EXPECT_EQ(simple_graphs(n).size(), expected[n]) << n;
}

TEST(Canonical, RegularGraphsOnTen) {
  // Petersen vs. pentagonal prism: both cubic on 10 vertices, not isomorphic.
  const auto petersen = parse_graph6("IheA@GUAo");
  std::vector<Edge> prism;
  for (Vertex i = 0; i < 5; ++i) {
    prism.push_back({i, static_cast<Vertex>((i + 1) % 5)});
    prism.push_back({static_cast<Vertex>(i + 5), static_cast<Vertex>((i + 1) % 5 + 5)});
    prism.push_back({i, static_cast<Vertex>(i + 5)});
  }
  const Graph p(10, prism);
  EXPECT_NE(canonical_key(petersen), canonical_key(p));
  std::mt19937_64 rng(3);
  for (int t = 0; t < 5; ++t) {
    EXPECT_EQ(canonical_key(random_relabel(petersen, rng)), canonical_key(petersen));
    EXPECT_EQ(canonical_key(random_relabel(p, rng)), canonical_key(p));
  }
}
