#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <queue>
#include <string>
#include <utility>
#include <vector>

#include "homlp/error.hpp"

namespace homlp {

using Edge = std::pair<int, int>;

/// Simple undirected graph on vertices 0..n-1. Edges are stored with u < v
/// and sorted lexicographically; the edge index used throughout the library
/// is the position in that list.
class Graph {
 public:
  Graph() = default;

  /// Builds a graph from any edge orientation and order. Loops, duplicate
  /// edges and out-of-range endpoints are rejected.
  static Graph from_edges(int n, std::vector<Edge> edges) {
    if (n < 0) throw DomainError("negative vertex count");
    for (auto& [u, v] : edges) {
      if (u < 0 || v < 0 || u >= n || v >= n) {
        throw DomainError("edge endpoint out of range: (" + std::to_string(u) + "," +
                          std::to_string(v) + ")");
      }
      if (u == v) throw DomainError("loop at vertex " + std::to_string(u));
      if (u > v) std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) {
      throw DomainError("duplicate edge");
    }
    Graph g;
    g.n_ = n;
    g.edges_ = std::move(edges);
    g.adj_.assign(n, {});
    for (auto [u, v] : g.edges_) {
      g.adj_[u].push_back(v);
      g.adj_[v].push_back(u);
    }
    for (auto& nb : g.adj_) std::sort(nb.begin(), nb.end());
    if (n <= kDenseLimit) {
      g.words_ = (n + 63) / 64;
      g.bits_.assign(static_cast<std::size_t>(n) * g.words_, 0);
      for (auto [u, v] : g.edges_) {
        g.bits_[static_cast<std::size_t>(u) * g.words_ + v / 64] |= std::uint64_t{1} << (v % 64);
        g.bits_[static_cast<std::size_t>(v) * g.words_ + u / 64] |= std::uint64_t{1} << (u % 64);
      }
    }
    return g;
  }

  int order() const { return n_; }
  std::size_t size() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(std::size_t i) const { return edges_[i]; }
  const std::vector<int>& neighbors(int v) const { return adj_[v]; }
  int degree(int v) const { return static_cast<int>(adj_[v].size()); }

  bool adjacent(int u, int v) const {
    if (!bits_.empty()) {
      return (bits_[static_cast<std::size_t>(u) * words_ + v / 64] >> (v % 64)) & 1U;
    }
    return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
  }

  std::optional<std::size_t> edge_index(int u, int v) const {
    if (u > v) std::swap(u, v);
    auto it = std::lower_bound(edges_.begin(), edges_.end(), Edge{u, v});
    if (it == edges_.end() || *it != Edge{u, v}) return std::nullopt;
    return static_cast<std::size_t>(it - edges_.begin());
  }

  /// Adjacency row of v as a bitset of `words()` 64-bit words; only
  /// available when order() <= kDenseLimit.
  const std::uint64_t* row(int v) const {
    return bits_.empty() ? nullptr : bits_.data() + static_cast<std::size_t>(v) * words_;
  }
  int words() const { return words_; }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

  static constexpr int kDenseLimit = 8192;

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> adj_;
  int words_ = 0;
  std::vector<std::uint64_t> bits_;
};

/// A vertex map from a source graph; image[v] is the target vertex of v.
struct VertexMap {
  std::vector<int> image;

  int source_order() const { return static_cast<int>(image.size()); }
  int operator[](int v) const { return image[v]; }
  friend bool operator==(const VertexMap&, const VertexMap&) = default;
};

/// Throws unless `f` is a total map V(source) -> V(target).
inline void check_map(const VertexMap& f, const Graph& source, const Graph& target) {
  if (f.source_order() != source.order()) {
    throw DomainError("vertex map has " + std::to_string(f.source_order()) +
                      " entries, source has " + std::to_string(source.order()) + " vertices");
  }
  for (int x : f.image) {
    if (x < 0 || x >= target.order()) {
      throw DomainError("vertex map image " + std::to_string(x) + " outside target");
    }
  }
}

/// Number of source edges carried onto target edges.
inline std::size_t preserved_edges(const VertexMap& f, const Graph& source, const Graph& target) {
  check_map(f, source, target);
  std::size_t count = 0;
  for (auto [u, v] : source.edges()) count += target.adjacent(f[u], f[v]) ? 1 : 0;
  return count;
}

inline bool is_homomorphism(const VertexMap& f, const Graph& source, const Graph& target) {
  return preserved_edges(f, source, target) == source.size();
}

// ---------------------------------------------------------------------------
// Standard families

/// Circular complete graph K_{p/q}: v_i v_j adjacent iff q <= |i-j| <= p-q.
/// Edgeless when p < 2q.
inline Graph circular_complete(int p, int q) {
  if (p < 1 || q < 1) throw DomainError("K(p/q) needs positive p and q");
  if (std::gcd(p, q) != 1) {
    throw DomainError("K(" + std::to_string(p) + "/" + std::to_string(q) +
                      ") is not in lowest terms");
  }
  std::vector<Edge> edges;
  for (int i = 0; i < p; ++i) {
    for (int j = i + 1; j < p; ++j) {
      if (j - i >= q && j - i <= p - q) edges.emplace_back(i, j);
    }
  }
  return Graph::from_edges(p, std::move(edges));
}

inline Graph cycle(int n) {
  if (n < 3) throw DomainError("C(n) needs n >= 3");
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return Graph::from_edges(n, std::move(edges));
}

inline Graph complete(int n) {
  if (n < 1) throw DomainError("K(n) needs n >= 1");
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  }
  return Graph::from_edges(n, std::move(edges));
}

/// H^n_k: vertices are n-tuples over V(H), encoded in mixed radix with
/// position 0 most significant; two tuples are adjacent when at least k
/// coordinates form an edge of H. power_graph(K_2, n, k) is Q_{n/k}.
inline Graph power_graph(const Graph& h, int n, int k, std::uint64_t max_vertices = 1U << 16) {
  if (n < 1 || k < 1) throw DomainError("power graph needs positive n and k");
  if (k > n) throw DomainError("power graph needs k <= n");
  if (h.order() < 1) throw DomainError("power graph needs a nonempty base graph");
  std::uint64_t count = 1;
  for (int i = 0; i < n; ++i) {
    count *= static_cast<std::uint64_t>(h.order());
    if (count > max_vertices) throw BudgetExceeded("power graph vertex count", max_vertices);
  }
  const int total = static_cast<int>(count);
  const int base = h.order();
  std::vector<std::vector<int>> digits(total, std::vector<int>(n));
  for (int x = 0; x < total; ++x) {
    int rest = x;
    for (int i = n - 1; i >= 0; --i) {
      digits[x][i] = rest % base;
      rest /= base;
    }
  }
  std::vector<Edge> edges;
  for (int a = 0; a < total; ++a) {
    for (int b = a + 1; b < total; ++b) {
      int hits = 0;
      for (int i = 0; i < n; ++i) hits += h.adjacent(digits[a][i], digits[b][i]) ? 1 : 0;
      if (hits >= k) edges.emplace_back(a, b);
    }
  }
  return Graph::from_edges(total, std::move(edges));
}

// ---------------------------------------------------------------------------
// Homomorphism search

/// Backtracking over vertex images. Source vertices are visited by
/// descending degree (ties by index); each assignment intersects the
/// candidate sets of unassigned neighbours with the image's adjacency row.
class HomomorphismSearch {
 public:
  HomomorphismSearch(const Graph& source, const Graph& target, std::uint64_t node_budget)
      : g_(source), h_(target), budget_(node_budget) {}

  std::optional<VertexMap> run() {
    const int n = g_.order();
    if (n == 0) return VertexMap{};
    if (h_.order() == 0) return std::nullopt;
    if (h_.row(0) == nullptr) {
      throw BudgetExceeded("homomorphism target order", Graph::kDenseLimit);
    }
    words_ = h_.words();
    order_.resize(n);
    std::iota(order_.begin(), order_.end(), 0);
    std::stable_sort(order_.begin(), order_.end(),
                     [&](int a, int b) { return g_.degree(a) > g_.degree(b); });
    domains_.assign(static_cast<std::size_t>(n) * words_, 0);
    for (int v = 0; v < n; ++v) {
      for (int x = 0; x < h_.order(); ++x) domain(v)[x / 64] |= std::uint64_t{1} << (x % 64);
    }
    assigned_.assign(n, false);
    image_.assign(n, -1);
    if (!extend(0)) return std::nullopt;
    return VertexMap{image_};
  }

  std::uint64_t nodes() const { return nodes_; }

 private:
  std::uint64_t* domain(int v) { return domains_.data() + static_cast<std::size_t>(v) * words_; }

  bool extend(int pos) {
    if (pos == g_.order()) return true;
    const int v = order_[pos];
    std::vector<std::uint64_t> candidates(domain(v), domain(v) + words_);
    std::vector<std::uint64_t> saved;
    for (int w = 0; w < words_; ++w) {
      std::uint64_t bits = candidates[w];
      while (bits != 0) {
        const int x = w * 64 + __builtin_ctzll(bits);
        bits &= bits - 1;
        if (++nodes_ > budget_) throw BudgetExceeded("homomorphism search nodes", budget_);
        saved.clear();
        bool wiped = false;
        const std::uint64_t* adj = h_.row(x);
        for (int u : g_.neighbors(v)) {
          if (assigned_[u]) continue;
          std::uint64_t* du = domain(u);
          saved.insert(saved.end(), du, du + words_);
          bool any = false;
          for (int t = 0; t < words_; ++t) {
            du[t] &= adj[t];
            any = any || du[t] != 0;
          }
          if (!any) {
            wiped = true;
            break;
          }
        }
        if (!wiped) {
          assigned_[v] = true;
          image_[v] = x;
          if (extend(pos + 1)) return true;
          assigned_[v] = false;
          image_[v] = -1;
        }
        std::size_t offset = 0;
        for (int u : g_.neighbors(v)) {
          if (assigned_[u]) continue;
          if (offset >= saved.size()) break;
          std::copy(saved.begin() + offset, saved.begin() + offset + words_, domain(u));
          offset += words_;
        }
      }
    }
    return false;
  }

  const Graph& g_;
  const Graph& h_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  int words_ = 0;
  std::vector<int> order_;
  std::vector<std::uint64_t> domains_;
  std::vector<bool> assigned_;
  std::vector<int> image_;
};

inline constexpr std::uint64_t kDefaultHomNodeBudget = std::uint64_t{1} << 34;

/// A homomorphism source -> target if one exists.
inline std::optional<VertexMap> find_homomorphism(const Graph& source, const Graph& target,
                                                  std::uint64_t node_budget = kDefaultHomNodeBudget) {
  return HomomorphismSearch(source, target, node_budget).run();
}

inline bool hom_exists(const Graph& source, const Graph& target,
                       std::uint64_t node_budget = kDefaultHomNodeBudget) {
  return find_homomorphism(source, target, node_budget).has_value();
}

/// Length of a shortest odd cycle, or nullopt for bipartite graphs.
/// From every root, an edge joining two vertices on the same BFS layer d
/// closes an odd walk of length 2d+1; the minimum over roots is exact.
inline std::optional<int> odd_girth(const Graph& g) {
  std::optional<int> best;
  std::vector<int> dist(g.order());
  for (int root = 0; root < g.order(); ++root) {
    std::fill(dist.begin(), dist.end(), -1);
    dist[root] = 0;
    std::queue<int> frontier;
    frontier.push(root);
    while (!frontier.empty()) {
      int u = frontier.front();
      frontier.pop();
      for (int w : g.neighbors(u)) {
        if (dist[w] < 0) {
          dist[w] = dist[u] + 1;
          frontier.push(w);
        } else if (dist[w] == dist[u]) {
          int len = 2 * dist[u] + 1;
          if (!best || len < *best) best = len;
        }
      }
    }
  }
  return best;
}

}  // namespace homlp
