#include <gtest/gtest.h>

#include <random>

#include "homlp/graph_io.hpp"
#include "homlp/svalue.hpp"
#include "oracles.hpp"

using namespace homlp;

namespace {

oracle::Small small(const Graph& g) { return oracle::Small(g.order(), g.edges()); }

Rational s_of(const char* m, const char* n, SMethod method = SMethod::automatic) {
  SValueOptions opt;
  opt.method = method;
  return s_value(parse_graph(m), parse_graph(n), opt).s;
}

}  // namespace

TEST(SValue, ValuesWithKnownClosedForms) {
  EXPECT_EQ(s_of("K(2)", "C(5)"), Rational(4, 5));
  EXPECT_EQ(s_of("K(2)", "C(9)"), Rational(8, 9));
  EXPECT_EQ(s_of("K(2)", "K(2)"), Rational(1));
  EXPECT_EQ(s_of("K(2)", "K(3)"), Rational(2, 3));
  EXPECT_EQ(s_of("K(3)", "K(4)"), Rational(5, 6));
  EXPECT_EQ(s_of("K(2)", "K(11/4)"), Rational(17, 22));
}

TEST(SValue, CircularHostsAgainstBruteForce) {
  struct Case {
    const char* m;
    int p, q;
  };
  for (auto c : std::vector<Case>{{"K(2)", 5, 2},
                                  {"K(2)", 7, 3},
                                  {"K(2)", 8, 3},
                                  {"K(2)", 7, 2},
                                  {"K(2)", 9, 4},
                                  {"K(2)", 10, 3},
                                  {"K(2)", 11, 4},
                                  {"K(2)", 14, 5},
                                  {"K(3)", 7, 2},
                                  {"K(3)", 11, 4},
                                  {"C(5)", 7, 3},
                                  {"C(5)", 8, 3}}) {
    Graph m = parse_graph(c.m);
    Rational want = oracle::s_circular(small(m), c.p, c.q);
    SValueOptions opt;
    for (SMethod method : {SMethod::exhaustive, SMethod::congen}) {
      opt.method = method;
      auto r = s_value(m, circular_complete(c.p, c.q), opt);
      EXPECT_EQ(r.s, want) << c.m << " K(" << c.p << "/" << c.q << ") " << to_string(method);
      EXPECT_TRUE(r.certified);
    }
  }
}

TEST(SValue, OddCycleIntoEightThirds) {
  // oracle value over all 5^8 maps; the closed form (4k-1)/4k would give 7/8
  Rational want = oracle::s_circular(oracle::ring(5), 8, 3);
  EXPECT_EQ(want, Rational(25, 28));
  EXPECT_EQ(s_of("C(5)", "K(8/3)"), want);
}

TEST(SValue, LongOddCycleIntoElevenQuarters) {
  Rational want = oracle::s_circular(oracle::ring(5), 11, 4);
  EXPECT_EQ(want, Rational(19, 22));
  EXPECT_EQ(s_of("C(5)", "K(11/4)", SMethod::exhaustive), want);
  EXPECT_EQ(s_of("C(5)", "K(11/4)", SMethod::congen), want);
}

TEST(SValue, OptimalWeightsAreCertified) {
  Graph m = complete(2), n = circular_complete(11, 4);
  auto r = s_value(m, n);
  ASSERT_EQ(r.omega.size(), 2u);
  EXPECT_EQ(r.omega[0], Rational(3, 44));
  EXPECT_EQ(r.omega[1], Rational(1, 44));
  // mc at the optimal weights is s times the total weight (which is 1)
  auto w = edge_weights_from_orbits(r.orbits, r.omega);
  Rational total;
  for (const auto& x : w) total += x;
  EXPECT_EQ(total, Rational(1));
  EXPECT_EQ(mc(m, n, w, {true}).value, r.s);
  for (const auto& f : r.binding) {
    Rational v;
    for (int i = 0; i < r.orbits.r; ++i) v += Rational(f[i]) * r.omega[i];
    EXPECT_EQ(v, r.s);
  }
}

TEST(SValue, McAgainstBruteForce) {
  std::mt19937 rng(11);
  std::uniform_int_distribution<long> wt(0, 9);
  std::vector<Graph> targets = {complete(2), complete(3), cycle(5)};
  std::vector<Graph> sources = {cycle(7), circular_complete(8, 3), complete(5), parse_graph("Q(3/2)"),
                                Graph::from_edges(6, {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}, {4, 5}, {5, 3}})};
  for (const auto& m : targets) {
    for (const auto& n : sources) {
      for (int trial = 0; trial < 4; ++trial) {
        std::vector<long> w(n.size());
        std::vector<Rational> wr;
        for (auto& x : w) {
          x = wt(rng);
          wr.emplace_back(x);
        }
        auto res = mc(m, n, wr, {is_vertex_transitive(m)});
        EXPECT_EQ(res.value, Rational(oracle::max_preserved_weighted(small(m), small(n), w)));
        Rational check;
        for (std::size_t e = 0; e < n.size(); ++e) {
          auto [u, v] = n.edge(e);
          if (m.adjacent(res.witness[u], res.witness[v])) check += wr[e];
        }
        EXPECT_EQ(check, res.value);
      }
    }
  }
}

TEST(SValue, McWithFractionalWeights) {
  Graph n = cycle(5);
  std::vector<Rational> w = {Rational(1, 3), Rational(1, 5), Rational(1, 7), Rational(1, 11), Rational(1, 13)};
  // K_2 must drop one edge of an odd cycle: the lightest
  Rational total;
  for (const auto& x : w) total += x;
  EXPECT_EQ(mc(complete(2), n, w, {true}).value, total - Rational(1, 13));
}

TEST(SValue, ParetoIndices) {
  std::vector<Signature> s = {{1, 2}, {2, 1}, {1, 1}, {1, 2}, {0, 3}};
  auto keep = pareto_indices(s);
  std::vector<Signature> kept;
  for (auto i : keep) kept.push_back(s[i]);
  std::sort(kept.begin(), kept.end());
  EXPECT_EQ(kept, (std::vector<Signature>{{0, 3}, {1, 2}, {2, 1}}));
}

TEST(SValue, ParetoPruningIsSound) {
  for (auto [m, n] : std::vector<std::pair<const char*, const char*>>{
           {"K(2)", "K(11/4)"}, {"C(5)", "K(8/3)"}, {"K(3)", "K(7/2)"}, {"K(2)", "K(14/5)"}}) {
    Graph gm = parse_graph(m), gn = parse_graph(n);
    auto orbits = edge_orbits(gn);
    EnumerationOptions eo;
    eo.keep_all = true;
    eo.target_vertex_transitive = true;
    auto res = enumerate_signatures(gm, gn, orbits, eo);
    EXPECT_LE(res.frontier.signatures.size(), res.distinct.signatures.size());
    EXPECT_EQ(solve_orbit_lp(orbits.sizes, res.frontier.signatures).value,
              solve_orbit_lp(orbits.sizes, res.distinct.signatures).value)
        << m << " " << n;
    for (std::size_t i = 0; i < res.frontier.signatures.size(); ++i) {
      EXPECT_EQ(signature_of(res.frontier.witnesses[i], gm, gn, orbits), res.frontier.signatures[i]);
    }
  }
}

TEST(SValue, FixingTheFirstImageLosesNothing) {
  Graph m = cycle(5), n = circular_complete(8, 3);
  auto orbits = edge_orbits(n);
  EnumerationOptions fixed, free;
  fixed.target_vertex_transitive = true;
  auto a = enumerate_signatures(m, n, orbits, fixed).frontier.signatures;
  auto b = enumerate_signatures(m, n, orbits, free).frontier.signatures;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  EXPECT_EQ(a, b);
}

TEST(SValue, GenericLPMatchesOrbitLP) {
  for (auto [m, n] : std::vector<std::pair<const char*, const char*>>{
           {"K(2)", "C(5)"}, {"K(2)", "K(8/3)"}, {"K(2)", "K(11/4)"}, {"C(5)", "K(8/3)"}, {"K(2)", "Q(3/2)"}}) {
    Graph gm = parse_graph(m), gn = parse_graph(n);
    EXPECT_EQ(s_value_generic(gm, gn), s_value(gm, gn).s) << m << " " << n;
  }
  EXPECT_THROW(s_value_generic(complete(2), complete(12), 64), BudgetExceeded);
}

TEST(SValue, EdgeTransitiveShortcut) {
  for (const char* n : {"C(5)", "C(7)", "K(4)", "K(5)", "K(7/3)"}) {
    for (const char* m : {"K(2)", "K(3)", "C(5)"}) {
      Graph gm = parse_graph(m), gn = parse_graph(n);
      Rational direct = Rational(oracle::max_preserved(small(gm), small(gn)), static_cast<long>(gn.size()));
      EXPECT_EQ(s_value(gm, gn).s, direct) << m << " " << n;
    }
  }
}

TEST(SValue, SandwichMonotonicity) {
  const std::vector<const char*> chain = {"K(2)", "C(9)", "C(7)", "C(5)", "K(8/3)", "K(3)", "K(7/2)", "K(4)"};
  std::mt19937 rng(3);
  std::uniform_int_distribution<std::size_t> pick(0, chain.size() - 1);
  for (int trial = 0; trial < 20; ++trial) {
    std::size_t a = pick(rng), b = pick(rng), c = pick(rng);
    if (!(a < b && b < c)) continue;
    Graph m = parse_graph(chain[a]), h = parse_graph(chain[b]), n = parse_graph(chain[c]);
    ASSERT_TRUE(chain_holds(m, h, n));
    Rational mn = s_value(m, n).s;
    EXPECT_LE(mn, s_value(m, h).s);
    EXPECT_LE(mn, s_value(h, n).s);
  }
  auto rep = sandwich_bounds(Rational(4, 5), std::nullopt, std::nullopt);
  EXPECT_EQ(rep.mn.high, Rational(4, 5));
  EXPECT_TRUE(rep.consistent);
  EXPECT_FALSE(sandwich_bounds(Rational(1, 2), std::nullopt, Rational(3, 4)).consistent);
}

TEST(SValue, ClassBounds) {
  EXPECT_EQ(bound_from_class(5, GraphClass::k4_minor_free), Rational(4, 5));
  EXPECT_EQ(bound_from_class(9, GraphClass::k4_minor_free), Rational(6, 7));
  EXPECT_EQ(bound_from_class(11, GraphClass::k4_minor_free), Rational(8, 9));
  EXPECT_EQ(bound_from_class(11, GraphClass::girth_mad), Rational(17, 22));
  EXPECT_THROW(bound_from_class(3, GraphClass::k4_minor_free), DomainError);
  EXPECT_THROW(bound_from_class(9, GraphClass::girth_mad), DomainError);
  // odd cycles are K4-minor-free; the bound sits below their value
  for (int n = 5; n <= 13; n += 2) {
    EXPECT_GE(s_value(complete(2), cycle(n)).s, bound_from_class(n, GraphClass::k4_minor_free));
  }
}

TEST(SValue, BudgetIsEnforced) {
  SValueOptions opt;
  opt.method = SMethod::exhaustive;
  opt.budget = 10;
  EXPECT_THROW(s_value(complete(3), circular_complete(20, 7), opt), BudgetExceeded);
  EXPECT_THROW(s_value(complete(2), Graph::from_edges(3, {})), DomainError);
}

TEST(SValue, JsonReport) {
  auto r = s_value(complete(2), cycle(5));
  auto j = svalue_json("K(2)", "C(5)", r, false);
  EXPECT_EQ(j["schema"], "homlp/1");
  EXPECT_EQ(j["s"], "4/5");
  EXPECT_FALSE(j.contains("elapsed_ms"));
  EXPECT_EQ(j.dump(), svalue_json("K(2)", "C(5)", s_value(complete(2), cycle(5)), false).dump());
}
