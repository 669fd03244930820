#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "homlp/error.hpp"
#include "homlp/graph.hpp"
#include "homlp/rational.hpp"
#include "homlp/simplex.hpp"
#include "homlp/svalue.hpp"
#include "homlp/symmetry.hpp"
#include "json.hpp"

namespace homlp {

/// Bitset over the edge indices of a host graph.
struct EdgeSet {
  std::vector<std::uint64_t> bits;

  EdgeSet() = default;
  explicit EdgeSet(std::size_t edges) : bits((edges + 63) / 64, 0) {}

  bool contains(std::size_t e) const { return (bits[e / 64] >> (e % 64)) & 1U; }
  void insert(std::size_t e) { bits[e / 64] |= std::uint64_t{1} << (e % 64); }
  void erase(std::size_t e) { bits[e / 64] &= ~(std::uint64_t{1} << (e % 64)); }
  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : bits) c += std::popcount(w);
    return c;
  }
  bool subset_of(const EdgeSet& o) const {
    for (std::size_t i = 0; i < bits.size(); ++i) {
      if (bits[i] & ~o.bits[i]) return false;
    }
    return true;
  }
  std::vector<int> members() const {
    std::vector<int> out;
    for (std::size_t i = 0; i < bits.size(); ++i) {
      for (auto w = bits[i]; w; w &= w - 1) out.push_back(static_cast<int>(i * 64 + std::countr_zero(w)));
    }
    return out;
  }
  friend bool operator==(const EdgeSet&, const EdgeSet&) = default;
  friend auto operator<=>(const EdgeSet&, const EdgeSet&) = default;
};

struct EdgeSetHash {
  std::size_t operator()(const EdgeSet& s) const {
    std::size_t h = 1469598103934665603ULL;
    for (auto w : s.bits) h = (h ^ w) * 1099511628211ULL;
    return h;
  }
};

/// Preimage of E(H) under a vertex map G -> H.
struct HCut {
  EdgeSet edges;
  VertexMap witness;
};

inline EdgeSet preimage(const Graph& g, const Graph& h, const VertexMap& f) {
  check_map(f, g, h);
  EdgeSet s(g.size());
  for (std::size_t e = 0; e < g.size(); ++e) {
    auto [u, v] = g.edge(e);
    if (h.adjacent(f[u], f[v])) s.insert(e);
  }
  return s;
}

struct HCutOptions {
  std::uint64_t node_budget = kDefaultMapBudget;
  std::optional<bool> target_vertex_transitive;  // computed when absent
};

/// All distinct H-cuts of G, sorted by edge set, one witness each.
inline std::vector<HCut> enumerate_hcuts(const Graph& g, const Graph& h, const HCutOptions& opt = {}) {
  if (h.order() == 0) throw DomainError("H has no vertices");
  const bool vt = opt.target_vertex_transitive ? *opt.target_vertex_transitive : is_vertex_transitive(h);
  const int n = g.order();
  // back edges per vertex in index order
  std::vector<std::vector<std::pair<int, std::size_t>>> back(n);
  for (std::size_t e = 0; e < g.size(); ++e) {
    auto [u, v] = g.edge(e);
    back[v].push_back({u, e});
  }
  std::unordered_map<EdgeSet, std::size_t, EdgeSetHash> seen;
  std::vector<HCut> cuts;
  EdgeSet current(g.size());
  std::vector<int> image(n, -1);
  std::uint64_t nodes = 0;
  auto dfs = [&](auto&& self, int v) -> void {
    if (++nodes > opt.node_budget) throw BudgetExceeded("H-cut enumeration nodes", opt.node_budget);
    if (v == n) {
      if (seen.try_emplace(current, cuts.size()).second) cuts.push_back({current, VertexMap{image}});
      return;
    }
    const int k = (v == 0 && vt) ? 1 : h.order();
    for (int c = 0; c < k; ++c) {
      image[v] = c;
      for (auto [u, e] : back[v]) {
        if (h.adjacent(c, image[u])) current.insert(e);
      }
      self(self, v + 1);
      for (auto [u, e] : back[v]) current.erase(e);
    }
    image[v] = -1;
  };
  dfs(dfs, 0);
  std::sort(cuts.begin(), cuts.end(), [](const HCut& a, const HCut& b) { return a.edges < b.edges; });
  return cuts;
}

/// Cuts not strictly contained in another cut.
inline std::vector<HCut> maximal_cuts(const std::vector<HCut>& cuts) {
  std::vector<std::size_t> idx(cuts.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  std::stable_sort(idx.begin(), idx.end(),
                   [&](auto a, auto b) { return cuts[a].edges.count() > cuts[b].edges.count(); });
  std::vector<HCut> out;
  for (auto i : idx) {
    bool inside = false;
    for (const auto& m : out) {
      if (cuts[i].edges.subset_of(m.edges)) {
        inside = true;
        break;
      }
    }
    if (!inside) out.push_back(cuts[i]);
  }
  return out;
}

/// Fractional cover of E(G) by H-cuts. `cut_weight` (indexed like `cuts`)
/// covers every edge at least once; `edge_weight` packs every cut to at
/// most 1. Both sum to `value` when `finite`.
struct CoverCertificate {
  bool finite = false;
  Rational value;
  std::vector<HCut> cuts;
  std::vector<Rational> cut_weight;
  std::vector<Rational> edge_weight;
  std::size_t cut_count = 0;  // distinct cuts before the maximality filter
  bool verified = false;
};

inline bool verify_cover(const Graph& g, const std::vector<HCut>& all_cuts, const CoverCertificate& c) {
  if (!c.finite) return false;
  Rational sum_f, sum_g;
  std::vector<Rational> covered(g.size());
  for (std::size_t x = 0; x < c.cuts.size(); ++x) {
    if (c.cut_weight[x].sign() < 0) return false;
    sum_f += c.cut_weight[x];
    for (int e : c.cuts[x].edges.members()) covered[e] += c.cut_weight[x];
  }
  for (const auto& cov : covered) {
    if (cov < Rational(1)) return false;
  }
  for (const auto& w : c.edge_weight) {
    if (w.sign() < 0) return false;
    sum_g += w;
  }
  for (const auto& cut : all_cuts) {
    Rational load;
    for (int e : cut.edges.members()) load += c.edge_weight[e];
    if (load > Rational(1)) return false;
  }
  return sum_f == c.value && sum_g == c.value;
}

/// chi_H(G) from the cut LP. The edge-weight side (one variable per edge)
/// is solved with cutting planes over the maximal cuts; the cut weights are
/// read off its dual.
inline CoverCertificate chi_H_cover(const Graph& g, const Graph& h, const HCutOptions& opt = {}) {
  if (g.size() == 0) throw DomainError("chi_H needs an edge in G");
  CoverCertificate out;
  if (h.size() == 0) return out;
  auto all = enumerate_hcuts(g, h, opt);
  out.cut_count = all.size();
  auto cuts = maximal_cuts(all);
  const int e = static_cast<int>(g.size());
  LinearProgram lp(e);
  for (int i = 0; i < e; ++i) lp.objective[i] = 1;
  std::vector<std::size_t> rows;
  std::vector<char> used(cuts.size(), 0);
  auto add = [&](std::size_t x) {
    std::vector<Rational> row(e);
    for (int i : cuts[x].edges.members()) row[i] = 1;
    lp.add_le(std::move(row), 1);
    rows.push_back(x);
    used[x] = 1;
  };
  // one covering cut per edge keeps the start bounded
  for (int i = 0; i < e; ++i) {
    bool have = false;
    for (auto x : rows) have = have || cuts[x].edges.contains(i);
    if (have) continue;
    for (std::size_t x = 0; x < cuts.size(); ++x) {
      if (cuts[x].edges.contains(i)) {
        add(x);
        break;
      }
    }
  }
  LPSolution sol;
  for (;;) {
    sol = solve_max(lp);
    if (sol.status != LPStatus::optimal) throw Error("cut LP not optimal");
    std::size_t worst = cuts.size();
    Rational worst_load(1);
    for (std::size_t x = 0; x < cuts.size(); ++x) {
      if (used[x]) continue;
      Rational load;
      for (int i : cuts[x].edges.members()) load += sol.x[i];
      if (load > worst_load) {
        worst_load = load;
        worst = x;
      }
    }
    if (worst == cuts.size()) break;
    add(worst);
  }
  out.finite = true;
  out.value = sol.value;
  out.edge_weight = sol.x;
  for (std::size_t k = 0; k < rows.size(); ++k) {
    if (sol.dual_ineq[k].sign() == 0) continue;
    out.cuts.push_back(cuts[rows[k]]);
    out.cut_weight.push_back(sol.dual_ineq[k]);
  }
  out.verified = verify_cover(g, all, out);
  return out;
}

/// chi_H(G) = 1/s(H, G); nullopt when H has no edge (chi is infinite).
inline std::optional<Rational> chi_H_via_s(const Graph& g, const Graph& h, const SValueOptions& opt = {}) {
  if (g.size() == 0) throw DomainError("chi_H needs an edge in G");
  if (h.size() == 0) return std::nullopt;
  return Rational(1) / s_value(h, g, opt).s;
}

/// G -> H^n_k.
inline bool scale_membership(const Graph& g, const Graph& h, int n, int k,
                             std::uint64_t max_vertices = 1U << 16) {
  return hom_exists(g, power_graph(h, n, k, max_vertices));
}

/// Smallest n/k with n <= n_max and G -> H^n_k, an upper bound on chi_H(G).
inline std::optional<Rational> scale_upper_bound(const Graph& g, const Graph& h, int n_max,
                                                 std::uint64_t max_vertices = 1U << 16) {
  std::optional<Rational> best;
  for (int n = 1; n <= n_max; ++n) {
    for (int k = n; k >= 1; --k) {
      Rational r(n, k);
      if (best && r >= *best) break;
      if (scale_membership(g, h, n, k, max_vertices)) {
        best = r;
        break;
      }
    }
  }
  return best;
}

// ---------------------------------------------------------------------------
// Hypergraph form

/// Vertices are the edges of G; hyperedges are the edge sets of the minimal
/// subgraphs of G that do not map to H.
struct Hypergraph {
  int vertices = 0;
  std::vector<std::uint64_t> hyperedges;
};

inline Graph edge_subgraph(const Graph& g, std::uint64_t mask) {
  std::vector<Edge> edges;
  for (std::size_t e = 0; e < g.size(); ++e) {
    if ((mask >> e) & 1U) edges.push_back(g.edge(e));
  }
  return Graph::from_edges(g.order(), std::move(edges));
}

/// Subsets are visited by increasing size (Gosper's successor), so a subset
/// that contains no earlier hyperedge and still fails to map is minimal.
inline Hypergraph hypergraph_reformulation(const Graph& g, const Graph& h,
                                           std::uint64_t subset_budget = std::uint64_t{1} << 24) {
  const int m = static_cast<int>(g.size());
  if (m > 63) throw BudgetExceeded("hypergraph reformulation edge count", 63);
  Hypergraph out;
  out.vertices = m;
  std::uint64_t tested = 0;
  for (int size = 1; size <= m; ++size) {
    std::uint64_t s = (std::uint64_t{1} << size) - 1;
    const std::uint64_t end = std::uint64_t{1} << m;
    while (s < end) {
      bool covers = false;
      for (auto x : out.hyperedges) {
        if ((x & s) == x) {
          covers = true;
          break;
        }
      }
      if (!covers) {
        if (++tested > subset_budget) throw BudgetExceeded("hypergraph subsets", subset_budget);
        if (!hom_exists(edge_subgraph(g, s), h)) out.hyperedges.push_back(s);
      }
      std::uint64_t c = s & -s;
      std::uint64_t r = s + c;
      s = (((r ^ s) >> 2) / c) | r;
    }
  }
  return out;
}

namespace detail {

inline bool independent(const Hypergraph& hg, std::uint64_t set) {
  for (auto x : hg.hyperedges) {
    if ((x & set) == x) return false;
  }
  return true;
}

// Exact maximum-weight independent set by include/exclude branching.
class MaxIndependent {
 public:
  MaxIndependent(const Hypergraph& hg, const std::vector<Rational>& w) : hg_(hg), w_(w) {
    order_.resize(hg.vertices);
    for (int v = 0; v < hg.vertices; ++v) order_[v] = v;
    std::stable_sort(order_.begin(), order_.end(), [&](int a, int b) { return w[a] > w[b]; });
    suffix_.assign(hg.vertices + 1, Rational(0));
    for (int p = hg.vertices - 1; p >= 0; --p) suffix_[p] = suffix_[p + 1] + w[order_[p]];
  }
  std::pair<Rational, std::uint64_t> run() {
    dfs(0, 0, Rational(0));
    return {best_, best_set_};
  }

 private:
  void dfs(int p, std::uint64_t set, const Rational& value) {
    if (value > best_) {
      best_ = value;
      best_set_ = set;
    }
    if (p == hg_.vertices || !(value + suffix_[p] > best_)) return;
    const int v = order_[p];
    std::uint64_t with = set | (std::uint64_t{1} << v);
    if (w_[v].sign() > 0 && independent(hg_, with)) dfs(p + 1, with, value + w_[v]);
    dfs(p + 1, set, value);
  }

  const Hypergraph& hg_;
  const std::vector<Rational>& w_;
  std::vector<int> order_;
  std::vector<Rational> suffix_;
  Rational best_;
  std::uint64_t best_set_ = 0;
};

}  // namespace detail

/// Fractional chromatic number of a hypergraph: the covering LP over
/// independent sets, solved through its packing side with cutting planes.
/// Separation tries a greedy set first, then an exact search.
/// nullopt when some vertex is a hyperedge on its own.
inline std::optional<Rational> chi_f(const Hypergraph& hg) {
  const int n = hg.vertices;
  for (auto x : hg.hyperedges) {
    if (std::popcount(x) == 1) return std::nullopt;
  }
  if (n == 0) return Rational(0);
  LinearProgram lp(n);
  for (int v = 0; v < n; ++v) lp.objective[v] = 1;
  auto add = [&](std::uint64_t set) {
    std::vector<Rational> row(n);
    for (int v = 0; v < n; ++v) {
      if ((set >> v) & 1U) row[v] = 1;
    }
    lp.add_le(std::move(row), 1);
  };
  for (int v = 0; v < n; ++v) add(std::uint64_t{1} << v);
  for (;;) {
    LPSolution sol = solve_max(lp);
    if (sol.status != LPStatus::optimal) throw Error("independent-set LP not optimal");
    std::vector<int> order(n);
    for (int v = 0; v < n; ++v) order[v] = v;
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return sol.x[a] > sol.x[b]; });
    std::uint64_t greedy = 0;
    Rational load;
    for (int v : order) {
      std::uint64_t with = greedy | (std::uint64_t{1} << v);
      if (sol.x[v].sign() > 0 && detail::independent(hg, with)) {
        greedy = with;
        load += sol.x[v];
      }
    }
    if (load > Rational(1)) {
      add(greedy);
      continue;
    }
    auto [best, set] = detail::MaxIndependent(hg, sol.x).run();
    if (!(best > Rational(1))) return sol.value;
    add(set);
  }
}

// ---------------------------------------------------------------------------
// Bipartite density

inline Rational bipartite_density(const Graph& g) {
  if (g.size() == 0) throw DomainError("bipartite density needs an edge");
  return mc(complete(2), g, unit_weights(g), {true}).value / Rational(static_cast<long>(g.size()));
}

/// True when the edges of `orbit` form one cycle through every vertex.
inline bool orbit_is_spanning_cycle(const Graph& g, const OrbitDecomposition& d, int orbit) {
  std::vector<Edge> edges;
  for (std::size_t e = 0; e < g.size(); ++e) {
    if (d.orbit_of_edge[e] == orbit) edges.push_back(g.edge(e));
  }
  if (static_cast<int>(edges.size()) != g.order() || g.order() < 3) return false;
  Graph c = Graph::from_edges(g.order(), edges);
  for (int v = 0; v < c.order(); ++v) {
    if (c.degree(v) != 2) return false;
  }
  std::vector<char> seen(c.order(), 0);
  int prev = -1, cur = 0, steps = 0;
  while (!seen[cur]) {
    seen[cur] = 1;
    ++steps;
    int next = c.neighbors(cur)[0] == prev ? c.neighbors(cur)[1] : c.neighbors(cur)[0];
    prev = cur;
    cur = next;
  }
  return steps == c.order();
}

struct DensityReport {
  std::string graph;
  Rational s;
  long max_cut = 0;
  long edges = 0;
  std::vector<bool> orbit_cycles;  // every orbit a spanning cycle
  std::string conclusion;          // refuted | equality | inconclusive
};

/// Tests whether 1/chi_q(G) = s(K_2, G) can be a bipartite density b(S) of
/// a subgraph S. b(S) has denominator at most |E(S)| <= |E(G)|, so a
/// denominator of s above |E(G)| refutes outright, and a denominator equal
/// to |E(G)| leaves S = G as the only candidate.
inline DensityReport refute_density_conjecture(const Graph& g, const std::string& name) {
  DensityReport r;
  r.graph = name;
  r.s = s_value(complete(2), g).s;
  r.max_cut = mc(complete(2), g, unit_weights(g), {true}).value.num().get_si();
  r.edges = static_cast<long>(g.size());
  auto orbits = edge_orbits(g);
  for (int c = 0; c < orbits.r; ++c) r.orbit_cycles.push_back(orbit_is_spanning_cycle(g, orbits, c));
  const BigInt den = r.s.den();
  if (r.s == Rational(r.max_cut, r.edges)) r.conclusion = "equality";
  else if (den > r.edges) r.conclusion = "refuted";
  else if (den == r.edges) r.conclusion = "refuted";
  else r.conclusion = "inconclusive";
  return r;
}

inline nlohmann::ordered_json density_json(const DensityReport& r) {
  nlohmann::ordered_json j;
  j["schema"] = "homlp/1";
  j["graph"] = r.graph;
  j["s"] = r.s.str();
  j["max_cut"] = r.max_cut;
  j["edges"] = r.edges;
  j["parity"] = r.max_cut % 2 == 0 ? "even" : "odd";
  j["orbit_cycles"] = r.orbit_cycles;
  j["conclusion"] = r.conclusion;
  return j;
}

inline nlohmann::ordered_json cover_json(const std::string& g_text, const std::string& h_text,
                                         const CoverCertificate& c) {
  nlohmann::ordered_json j;
  j["schema"] = "homlp/1";
  j["G"] = g_text;
  j["H"] = h_text;
  j["status"] = c.finite ? "finite" : "infinite";
  if (c.finite) {
    j["chi"] = c.value.str();
    j["cuts"] = nlohmann::ordered_json::array();
    for (std::size_t x = 0; x < c.cuts.size(); ++x) {
      j["cuts"].push_back({{"edges", c.cuts[x].edges.members()}, {"weight", c.cut_weight[x].str()}});
    }
    j["edge_weights"] = nlohmann::ordered_json::array();
    for (const auto& w : c.edge_weight) j["edge_weights"].push_back(w.str());
    j["verified"] = c.verified;
  }
  return j;
}

}  // namespace homlp
