#include <gtest/gtest.h>

#include <set>

#include "homlp/graph_io.hpp"
#include "homlp/hcuts.hpp"
#include "oracles.hpp"

using namespace homlp;

namespace {

oracle::Small small(const Graph& g) { return oracle::Small(g.order(), g.edges()); }

std::size_t oracle_cut_count(const Graph& g, const Graph& h) {
  auto sg = small(g), sh = small(h);
  std::set<std::vector<char>> seen;
  oracle::all_maps(sg.n, sh.n, [&](const std::vector<int>& f) {
    std::vector<char> in;
    for (auto [u, v] : sg.edges) in.push_back(sh.adj[f[u]][f[v]]);
    seen.insert(in);
  });
  return seen.size();
}

}  // namespace

TEST(HCuts, EdgeSetBasics) {
  EdgeSet a(70), b(70);
  a.insert(3);
  a.insert(65);
  b.insert(3);
  b.insert(65);
  b.insert(10);
  EXPECT_EQ(a.count(), 2u);
  EXPECT_TRUE(a.subset_of(b));
  EXPECT_FALSE(b.subset_of(a));
  EXPECT_EQ(b.members(), (std::vector<int>{3, 10, 65}));
  b.erase(10);
  EXPECT_EQ(a, b);
}

TEST(HCuts, CountsAgainstBruteForce) {
  EXPECT_EQ(enumerate_hcuts(cycle(4), complete(2)).size(), 8u);
  EXPECT_EQ(enumerate_hcuts(complete(3), complete(2)).size(), 4u);
  std::vector<std::pair<const char*, const char*>> pairs = {
      {"C(5)", "K(2)"}, {"C(6)", "K(2)"}, {"K(4)", "K(3)"}, {"K(8/3)", "K(2)"}, {"C(7)", "C(5)"}, {"Q(3/2)", "K(2)"}};
  for (auto [g, h] : pairs) {
    Graph gg = parse_graph(g), hh = parse_graph(h);
    auto cuts = enumerate_hcuts(gg, hh);
    EXPECT_EQ(cuts.size(), oracle_cut_count(gg, hh)) << g << " " << h;
    for (const auto& c : cuts) EXPECT_EQ(preimage(gg, hh, c.witness), c.edges);
  }
}

TEST(HCuts, MaximalCutsAreAnAntichain) {
  auto cuts = maximal_cuts(enumerate_hcuts(parse_graph("K(8/3)"), complete(2)));
  for (std::size_t i = 0; i < cuts.size(); ++i) {
    for (std::size_t j = 0; j < cuts.size(); ++j) {
      if (i != j) {
        EXPECT_FALSE(cuts[i].edges.subset_of(cuts[j].edges));
      }
    }
  }
}

TEST(HCuts, ThreeWayChi) {
  struct Case {
    const char* g;
    const char* h;
    Rational chi;
  };
  for (const auto& c : std::vector<Case>{{"C(5)", "K(2)", Rational(5, 4)},
                                         {"C(7)", "K(2)", Rational(7, 6)},
                                         {"K(2)", "K(2)", Rational(1)},
                                         {"K(3)", "K(2)", Rational(3, 2)},
                                         {"K(4)", "K(3)", Rational(6, 5)},
                                         {"Q(3/2)", "K(2)", Rational(3, 2)}}) {
    Graph g = parse_graph(c.g), h = parse_graph(c.h);
    EXPECT_EQ(chi_H_via_s(g, h), c.chi) << c.g;
    auto cover = chi_H_cover(g, h);
    ASSERT_TRUE(cover.finite);
    EXPECT_EQ(cover.value, c.chi) << c.g;
    EXPECT_TRUE(cover.verified);
    EXPECT_TRUE(verify_cover(g, enumerate_hcuts(g, h), cover));
    EXPECT_EQ(chi_f(hypergraph_reformulation(g, h)), c.chi) << c.g;
  }
  Graph g = circular_complete(8, 3);
  Rational want = Rational(1) / oracle::s_circular(oracle::clique(2), 8, 3);
  EXPECT_EQ(chi_H_via_s(g, complete(2)), want);
  EXPECT_EQ(chi_H_cover(g, complete(2)).value, want);
}

TEST(HCuts, EdgelessTargetHasNoCover) {
  Graph empty = Graph::from_edges(2, {});
  EXPECT_FALSE(chi_H_via_s(cycle(5), empty).has_value());
  EXPECT_FALSE(chi_H_cover(cycle(5), empty).finite);
  EXPECT_FALSE(chi_f(hypergraph_reformulation(cycle(5), empty)).has_value());
}

TEST(HCuts, ScaleUpperBound) {
  EXPECT_EQ(scale_upper_bound(complete(3), complete(2), 4), Rational(3, 2));
  EXPECT_EQ(scale_upper_bound(cycle(5), complete(2), 5), Rational(5, 4));
  EXPECT_TRUE(scale_membership(complete(3), complete(2), 3, 2));
  EXPECT_FALSE(scale_membership(complete(3), complete(2), 4, 3));
  // the bound is never below the true value
  for (int n = 5; n <= 9; n += 2) {
    auto ub = scale_upper_bound(cycle(n), complete(2), 5);
    ASSERT_TRUE(ub.has_value());
    EXPECT_GE(*ub, *chi_H_via_s(cycle(n), complete(2)));
  }
}

TEST(HCuts, BipartiteDensity) {
  EXPECT_EQ(bipartite_density(cycle(5)), Rational(4, 5));
  EXPECT_EQ(bipartite_density(complete(4)), Rational(2, 3));
  EXPECT_EQ(bipartite_density(cycle(6)), Rational(1));
}

TEST(HCuts, DensityConjecture) {
  auto eq = refute_density_conjecture(complete(4), "K(4)");
  EXPECT_EQ(eq.conclusion, "equality");
  auto r = refute_density_conjecture(circular_complete(11, 4), "K(11/4)");
  EXPECT_EQ(r.s, Rational(17, 22));
  EXPECT_EQ(r.max_cut, 18);
  EXPECT_EQ(r.edges, 22);
  EXPECT_EQ(r.conclusion, "refuted");
  EXPECT_EQ(r.orbit_cycles, (std::vector<bool>{true, true}));
  EXPECT_EQ(density_json(r)["conclusion"], "refuted");
}
