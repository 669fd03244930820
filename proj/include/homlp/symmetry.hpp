#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <vector>

#include "homlp/error.hpp"
#include "homlp/graph.hpp"

namespace homlp {

/// Partition of E(N) into edge orbits. Orbit indices are 0-based here and
/// numbered by their smallest edge, so orbit c corresponds to A_{c+1} in the
/// usual 1-based notation; for K_{p/q} orbit c holds the edges at circular
/// distance q + c.
struct OrbitDecomposition {
  int r = 0;
  std::vector<int> orbit_of_edge;
  std::vector<int> sizes;
  std::vector<Edge> representatives;

  friend bool operator==(const OrbitDecomposition&, const OrbitDecomposition&) = default;
};

using Permutation = std::vector<int>;

namespace detail {

struct MinUnionFind {
  std::vector<int> parent;
  explicit MinUnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (a < b) parent[b] = a;
    else parent[a] = b;
  }
};

inline OrbitDecomposition orbits_from_classes(const Graph& g, MinUnionFind& uf) {
  OrbitDecomposition d;
  d.orbit_of_edge.assign(g.size(), -1);
  std::vector<int> index_of_root(g.size(), -1);
  for (std::size_t e = 0; e < g.size(); ++e) {
    int root = uf.find(static_cast<int>(e));
    if (index_of_root[root] < 0) {
      index_of_root[root] = d.r++;
      d.sizes.push_back(0);
      d.representatives.push_back(g.edge(root));
    }
    d.orbit_of_edge[e] = index_of_root[root];
    ++d.sizes[index_of_root[root]];
  }
  return d;
}

}  // namespace detail

/// Searches for vertex automorphisms that extend a prescribed partial map.
/// Two colourings of the same graph (the "left" domain side and the "right"
/// image side) are refined in lockstep with a shared colour dictionary; a
/// class-size mismatch refutes the branch, a discrete colouring yields a
/// candidate bijection which is verified edge by edge.
class AutomorphismSearch {
 public:
  AutomorphismSearch(const Graph& g, std::uint64_t node_budget) : g_(g), budget_(node_budget) {}

  std::optional<Permutation> find(const std::vector<std::pair<int, int>>& prescribed) {
    const int n = g_.order();
    std::vector<int> left(n, 0), right(n, 0);
    int colour = 1;
    for (auto [a, b] : prescribed) {
      if (left[a] != 0 || right[b] != 0) {
        if (left[a] != right[b]) return std::nullopt;
        continue;
      }
      left[a] = right[b] = colour++;
    }
    return search(std::move(left), std::move(right));
  }

  std::uint64_t nodes() const { return nodes_; }

 private:
  // Returns the number of colour classes, or -1 if the two sides disagree.
  int refine(std::vector<int>& left, std::vector<int>& right) const {
    const int n = g_.order();
    int classes = -1;
    for (;;) {
      std::map<std::vector<int>, int> dictionary;
      auto key_of = [&](const std::vector<int>& colours, int v) {
        std::vector<int> key;
        key.reserve(g_.degree(v) + 1);
        for (int w : g_.neighbors(v)) key.push_back(colours[w]);
        std::sort(key.begin(), key.end());
        key.insert(key.begin(), colours[v]);
        return key;
      };
      std::vector<std::vector<int>> lkeys(n), rkeys(n);
      for (int v = 0; v < n; ++v) {
        lkeys[v] = key_of(left, v);
        rkeys[v] = key_of(right, v);
        dictionary.emplace(lkeys[v], 0);
        dictionary.emplace(rkeys[v], 0);
      }
      int next = 0;
      for (auto& [key, id] : dictionary) id = next++;
      std::vector<int> lcount(next, 0), rcount(next, 0);
      for (int v = 0; v < n; ++v) {
        left[v] = dictionary[lkeys[v]];
        right[v] = dictionary[rkeys[v]];
        ++lcount[left[v]];
        ++rcount[right[v]];
      }
      if (lcount != rcount) return -1;
      int now = 0;
      for (int c : lcount) now += c > 0 ? 1 : 0;
      if (now == classes) return classes;
      classes = now;
    }
  }

  std::optional<Permutation> search(std::vector<int> left, std::vector<int> right) {
    if (++nodes_ > budget_) throw BudgetExceeded("automorphism search nodes", budget_);
    const int n = g_.order();
    int classes = refine(left, right);
    if (classes < 0) return std::nullopt;
    if (classes == n) {
      std::vector<int> vertex_of_colour(n);
      for (int v = 0; v < n; ++v) vertex_of_colour[right[v]] = v;
      Permutation perm(n);
      for (int v = 0; v < n; ++v) perm[v] = vertex_of_colour[left[v]];
      for (auto [u, v] : g_.edges()) {
        if (!g_.adjacent(perm[u], perm[v])) return std::nullopt;
      }
      return perm;
    }
    std::vector<int> class_size(n, 0);
    for (int v = 0; v < n; ++v) ++class_size[left[v]];
    int target = -1;
    for (int c = 0; c < n; ++c) {
      if (class_size[c] > 1 && (target < 0 || class_size[c] < class_size[target])) target = c;
    }
    int x = 0;
    while (left[x] != target) ++x;
    for (int y = 0; y < n; ++y) {
      if (right[y] != target) continue;
      std::vector<int> l2 = left, r2 = right;
      l2[x] = n;
      r2[y] = n;
      if (auto perm = search(std::move(l2), std::move(r2))) return perm;
    }
    return std::nullopt;
  }

  const Graph& g_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
};

inline constexpr std::uint64_t kDefaultSymmetryBudget = 2'000'000;

/// Edge orbits of the automorphism group of g, together with the generators
/// discovered on the way.
///
/// Edges are visited in index order. An edge not yet merged into an earlier
/// class is tested against each earlier class representative by an
/// automorphism search; success adds a generator (whose whole edge action is
/// merged), exhaustion proves the edge starts a new orbit. The result is
/// therefore the exact orbit partition, never a finer one. A too-fine
/// partition would still give the right s (the LP would only carry
/// redundant symmetry), but orbit-indexed reports must be reproducible, so
/// a search that runs out of budget throws instead of guessing.
struct OrbitSearchResult {
  OrbitDecomposition orbits;
  std::vector<Permutation> generators;
};

inline OrbitSearchResult edge_orbits_with_generators(
    const Graph& g, std::uint64_t node_budget = kDefaultSymmetryBudget) {
  if (g.size() == 0) throw DomainError("edge orbits need at least one edge");
  AutomorphismSearch search(g, node_budget);
  detail::MinUnionFind uf(static_cast<int>(g.size()));
  std::vector<Permutation> generators;
  std::vector<int> reps;

  auto absorb = [&](const Permutation& perm) {
    for (std::size_t e = 0; e < g.size(); ++e) {
      auto [u, v] = g.edge(e);
      auto image = g.edge_index(perm[u], perm[v]);
      uf.unite(static_cast<int>(e), static_cast<int>(*image));
    }
    generators.push_back(perm);
  };

  for (std::size_t e = 0; e < g.size(); ++e) {
    if (uf.find(static_cast<int>(e)) != static_cast<int>(e)) continue;
    auto [a, b] = g.edge(e);
    bool merged = false;
    for (int rep : reps) {
      auto [u, v] = g.edge(rep);
      auto perm = search.find({{u, a}, {v, b}});
      if (!perm) perm = search.find({{u, b}, {v, a}});
      if (perm) {
        absorb(*perm);
        merged = true;
        break;
      }
    }
    if (!merged) reps.push_back(static_cast<int>(e));
  }
  return {detail::orbits_from_classes(g, uf), std::move(generators)};
}

inline OrbitDecomposition edge_orbits(const Graph& g,
                                      std::uint64_t node_budget = kDefaultSymmetryBudget) {
  return edge_orbits_with_generators(g, node_budget).orbits;
}

/// True when every vertex can be carried to vertex 0 by an automorphism.
inline bool is_vertex_transitive(const Graph& g,
                                 std::uint64_t node_budget = kDefaultSymmetryBudget) {
  const int n = g.order();
  if (n <= 1) return true;
  AutomorphismSearch search(g, node_budget);
  detail::MinUnionFind uf(n);
  for (int v = 1; v < n; ++v) {
    if (uf.find(v) == 0) continue;
    auto perm = search.find({{0, v}});
    if (!perm) return false;
    for (int x = 0; x < n; ++x) uf.unite(x, (*perm)[x]);
  }
  return true;
}

/// Closed-form orbits of K_{p/q}: orbit c collects the edges whose
/// endpoints are at circular distance q + c, for c = 0..ceil((p-2q+1)/2)-1.
/// Every orbit has p edges except the antipodal one when p is even (p/2).
inline OrbitDecomposition circular_orbits(int p, int q) {
  Graph g = circular_complete(p, q);
  if (p < 2 * q) throw DomainError("K(p/q) with p < 2q has no edges");
  OrbitDecomposition d;
  d.r = (p - 2 * q + 2) / 2;
  d.sizes.assign(d.r, 0);
  d.representatives.resize(d.r);
  for (std::size_t e = 0; e < g.size(); ++e) {
    auto [i, j] = g.edge(e);
    int dist = std::min(j - i, p - (j - i));
    int c = dist - q;
    d.orbit_of_edge.push_back(c);
    if (d.sizes[c]++ == 0) d.representatives[c] = g.edge(e);
  }
  return d;
}

}  // namespace homlp
