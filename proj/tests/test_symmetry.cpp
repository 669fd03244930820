#include <gtest/gtest.h>

#include <numeric>

#include "homlp/graph_io.hpp"
#include "homlp/symmetry.hpp"
#include "oracles.hpp"

using namespace homlp;

// For q >= 2 the automorphisms of K_{p/q} are the rotations and reflections,
// so orbits are the distance classes. q = 1 is the complete graph.
TEST(Symmetry, CircularOrbitsMatchDistanceClasses) {
  for (int p = 3; p <= 17; ++p) {
    for (int q = 2; 2 * q < p; ++q) {
      if (std::gcd(p, q) != 1) continue;
      Graph g = circular_complete(p, q);
      auto found = edge_orbits(g);
      auto known = circular_orbits(p, q);
      EXPECT_EQ(found.r, (p - 2 * q + 2) / 2) << p << "/" << q;
      EXPECT_EQ(found.orbit_of_edge, known.orbit_of_edge) << p << "/" << q;
      EXPECT_EQ(found.sizes, known.sizes);
      auto cls = oracle::circular_classes(oracle::circular(p, q), p, q);
      EXPECT_EQ(found.orbit_of_edge, cls);
    }
  }
}

TEST(Symmetry, OrbitSizesPartitionTheEdges) {
  for (const char* text : {"C(7)", "K(5)", "Q(3/2)", "Q(4/3)", "P(K(3),2,1)", "K(11/4)"}) {
    Graph g = parse_graph(text);
    auto d = edge_orbits(g);
    EXPECT_EQ(std::accumulate(d.sizes.begin(), d.sizes.end(), 0), static_cast<int>(g.size())) << text;
    EXPECT_EQ(static_cast<int>(d.representatives.size()), d.r);
    // orbits are numbered by their smallest edge
    for (int c = 0; c + 1 < d.r; ++c) {
      auto first = [&](int orbit) {
        for (std::size_t e = 0; e < g.size(); ++e) {
          if (d.orbit_of_edge[e] == orbit) return e;
        }
        return g.size();
      };
      EXPECT_LT(first(c), first(c + 1));
    }
  }
}

TEST(Symmetry, EdgeTransitiveGraphs) {
  for (const char* text : {"C(5)", "C(8)", "K(4)", "K(6)", "K(7/3)"}) {
    EXPECT_EQ(edge_orbits(parse_graph(text)).r, 1) << text;
  }
}

TEST(Symmetry, NonTransitiveExamples) {
  // path on 4 vertices: the middle edge is alone
  Graph path = Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}});
  auto d = edge_orbits(path);
  EXPECT_EQ(d.r, 2);
  EXPECT_EQ(d.orbit_of_edge, (std::vector<int>{0, 1, 0}));
  EXPECT_FALSE(is_vertex_transitive(path));
  // triangle with a pendant edge
  Graph paw = Graph::from_edges(4, {{0, 1}, {1, 2}, {0, 2}, {2, 3}});
  EXPECT_EQ(edge_orbits(paw).r, 3);
  // distance 2 and distance 3 pairs of the 3-cube
  EXPECT_EQ(edge_orbits(parse_graph("Q(3/2)")).sizes, (std::vector<int>{12, 4}));
}

TEST(Symmetry, GeneratorsAreAutomorphisms) {
  Graph g = circular_complete(13, 5);
  auto res = edge_orbits_with_generators(g);
  ASSERT_FALSE(res.generators.empty());
  for (const auto& perm : res.generators) {
    for (auto [u, v] : g.edges()) EXPECT_TRUE(g.adjacent(perm[u], perm[v]));
  }
}

TEST(Symmetry, VertexTransitivity) {
  EXPECT_TRUE(is_vertex_transitive(cycle(9)));
  EXPECT_TRUE(is_vertex_transitive(circular_complete(11, 4)));
  EXPECT_TRUE(is_vertex_transitive(parse_graph("Q(4/3)")));
  EXPECT_FALSE(is_vertex_transitive(Graph::from_edges(3, {{0, 1}})));
}

TEST(Symmetry, BudgetIsEnforced) {
  EXPECT_THROW(edge_orbits(parse_graph("Q(4/3)"), 1), BudgetExceeded);
}
