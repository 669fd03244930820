#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <limits>
#include <numeric>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "homlp/error.hpp"
#include "homlp/graph.hpp"
#include "homlp/rational.hpp"
#include "homlp/simplex.hpp"
#include "homlp/symmetry.hpp"
#include "json.hpp"

namespace homlp {

using Signature = std::vector<int>;

inline constexpr std::uint64_t kDefaultMapBudget = std::uint64_t{1} << 31;
inline constexpr std::uint64_t kExhaustiveThreshold = 10'000'000;

/// Per-orbit counts of N-edges carried onto M-edges by f.
inline Signature signature_of(const VertexMap& f, const Graph& m, const Graph& n,
                              const OrbitDecomposition& orbits) {
  check_map(f, n, m);
  if (orbits.orbit_of_edge.size() != n.size()) throw DomainError("orbit data does not fit N");
  Signature sig(orbits.r, 0);
  for (std::size_t e = 0; e < n.size(); ++e) {
    auto [u, v] = n.edge(e);
    if (m.adjacent(f[u], f[v])) ++sig[orbits.orbit_of_edge[e]];
  }
  return sig;
}

inline std::vector<Rational> edge_weights_from_orbits(const OrbitDecomposition& orbits,
                                                      const std::vector<Rational>& omega) {
  std::vector<Rational> w(orbits.orbit_of_edge.size());
  for (std::size_t e = 0; e < w.size(); ++e) w[e] = omega[orbits.orbit_of_edge[e]];
  return w;
}

// ---------------------------------------------------------------------------
// mc_M(G, w)

namespace detail {

template <class W>
class MaxColourable {
 public:
  MaxColourable(const Graph& m, const Graph& g, const std::vector<W>& w, bool fix_first,
                std::uint64_t budget)
      : m_(m), g_(g), fix_first_(fix_first), budget_(budget), k_(m.order()) {
    const int n = g.order();
    std::vector<W> wdeg(n, W(0));
    for (std::size_t e = 0; e < g.size(); ++e) {
      auto [u, v] = g.edge(e);
      wdeg[u] += w[e];
      wdeg[v] += w[e];
    }
    order_.resize(n);
    std::iota(order_.begin(), order_.end(), 0);
    std::stable_sort(order_.begin(), order_.end(), [&](int a, int b) { return wdeg[a] > wdeg[b]; });
    pos_.resize(n);
    for (int p = 0; p < n; ++p) pos_[order_[p]] = p;
    later_.resize(n);
    suffix_.assign(n + 1, W(0));
    for (std::size_t e = 0; e < g.size(); ++e) {
      auto [u, v] = g.edge(e);
      if (pos_[u] > pos_[v]) std::swap(u, v);
      later_[u].push_back({v, w[e]});
      suffix_[pos_[u]] += w[e];
    }
    for (int p = n - 1; p >= 0; --p) suffix_[p] += suffix_[p + 1];
    mnbr_.resize(k_);
    for (int c = 0; c < k_; ++c) mnbr_[c] = m.neighbors(c);
    gain_.assign(static_cast<std::size_t>(n) * k_, W(0));
    colour_.assign(n, -1);
  }

  std::pair<W, std::vector<int>> run() {
    greedy();
    dfs(0, W(0));
    return {best_, best_map_};
  }

  std::uint64_t nodes() const { return nodes_; }

 private:
  struct Arc {
    int to;
    W w;
  };

  W& gain(int v, int c) { return gain_[static_cast<std::size_t>(v) * k_ + c]; }

  void apply(int v, int c, bool add) {
    for (const auto& a : later_[v]) {
      for (int d : mnbr_[c]) {
        if (add) gain(a.to, d) += a.w;
        else gain(a.to, d) -= a.w;
      }
    }
  }

  void greedy() {
    W total(0);
    for (int p = 0; p < g_.order(); ++p) {
      int v = order_[p];
      int c = 0;
      for (int d = 1; d < k_; ++d) {
        if (gain(v, d) > gain(v, c)) c = d;
      }
      total += gain(v, c);
      colour_[v] = c;
      apply(v, c, true);
    }
    best_ = total;
    best_map_ = colour_;
    for (int p = g_.order() - 1; p >= 0; --p) apply(order_[p], colour_[order_[p]], false);
    std::fill(colour_.begin(), colour_.end(), -1);
  }

  void dfs(int p, const W& decided) {
    if (++nodes_ > budget_) throw BudgetExceeded("max-colourable search nodes", budget_);
    const int n = g_.order();
    if (p == n) {
      if (decided > best_) {
        best_ = decided;
        best_map_ = colour_;
      }
      return;
    }
    W bound = decided + suffix_[p];
    for (int q = p; q < n; ++q) {
      int v = order_[q];
      const W* row = &gain_[static_cast<std::size_t>(v) * k_];
      bound += *std::max_element(row, row + k_);
    }
    if (!(bound > best_)) return;
    const int v = order_[p];
    std::vector<int> colours;
    if (p == 0 && fix_first_) {
      colours.push_back(0);
    } else {
      colours.resize(k_);
      std::iota(colours.begin(), colours.end(), 0);
      std::stable_sort(colours.begin(), colours.end(),
                       [&](int a, int b) { return gain(v, a) > gain(v, b); });
    }
    for (int c : colours) {
      colour_[v] = c;
      W next = decided + gain(v, c);
      apply(v, c, true);
      dfs(p + 1, next);
      apply(v, c, false);
    }
    colour_[v] = -1;
  }

  const Graph& m_;
  const Graph& g_;
  bool fix_first_;
  std::uint64_t budget_;
  int k_;
  std::vector<int> order_, pos_;
  std::vector<std::vector<Arc>> later_;
  std::vector<W> suffix_;
  std::vector<std::vector<int>> mnbr_;
  std::vector<W> gain_;
  std::vector<int> colour_;
  W best_{0};
  std::vector<int> best_map_;
  std::uint64_t nodes_ = 0;
};

}  // namespace detail

struct McResult {
  Rational value;
  VertexMap witness;
};

struct McOptions {
  bool target_vertex_transitive = false;
  std::uint64_t node_budget = kDefaultMapBudget;
};

/// Maximum weight of G-edges carried onto M-edges by a vertex map G -> M.
/// Branch and bound; weights are scaled to a common denominator and solved
/// in 64-bit integers when they fit, otherwise over exact rationals.
inline McResult mc(const Graph& m, const Graph& g, const std::vector<Rational>& w,
                   const McOptions& opt = {}) {
  if (m.size() == 0 || g.size() == 0) throw DomainError("mc needs edges in both graphs");
  if (w.size() != g.size()) throw DomainError("weight vector does not match edge count");
  BigInt lcm = 1;
  for (const auto& x : w) {
    if (x.sign() < 0) throw DomainError("negative edge weight");
    mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), x.den().get_mpz_t());
  }
  std::vector<BigInt> scaled;
  BigInt total = 0;
  for (const auto& x : w) {
    scaled.push_back(x.num() * (lcm / x.den()));
    total += scaled.back();
  }
  const BigInt limit = BigInt(1) << 62;
  if (total < limit) {
    std::vector<std::int64_t> iw;
    for (const auto& x : scaled) iw.push_back(x.get_si());
    detail::MaxColourable<std::int64_t> search(m, g, iw, opt.target_vertex_transitive,
                                               opt.node_budget);
    auto [best, map] = search.run();
    return {Rational(BigInt(static_cast<long>(best)), lcm), VertexMap{map}};
  }
  std::vector<mpq_class> qw;
  for (const auto& x : w) qw.push_back(x.raw());
  detail::MaxColourable<mpq_class> search(m, g, qw, opt.target_vertex_transitive, opt.node_budget);
  auto [best, map] = search.run();
  return {Rational(BigInt(best.get_num()), BigInt(best.get_den())), VertexMap{map}};
}

inline std::vector<Rational> unit_weights(const Graph& g) {
  return std::vector<Rational>(g.size(), Rational(1));
}

// ---------------------------------------------------------------------------
// Signatures

struct SignatureSet {
  std::vector<Signature> signatures;
  std::vector<VertexMap> witnesses;
  std::string provenance;  // "exhaustive" or "constraint-generated"
};

struct EnumerationOptions {
  bool target_vertex_transitive = false;
  std::uint64_t node_budget = kDefaultMapBudget;
  // orbits that must be carried entirely onto M-edges; other maps are pruned
  std::vector<int> full_orbits;
  bool keep_all = false;  // also return every distinct signature
};

struct EnumerationResult {
  SignatureSet frontier;
  SignatureSet distinct;  // filled only with keep_all
  std::uint64_t leaves = 0;
};

/// Keeps the members not dominated componentwise by another member.
inline std::vector<std::size_t> pareto_indices(const std::vector<Signature>& sigs) {
  std::vector<std::size_t> idx(sigs.size());
  std::iota(idx.begin(), idx.end(), 0);
  auto sum = [&](std::size_t i) { return std::accumulate(sigs[i].begin(), sigs[i].end(), 0L); };
  std::stable_sort(idx.begin(), idx.end(), [&](auto a, auto b) {
    long sa = sum(a), sb = sum(b);
    return sa != sb ? sa > sb : sigs[a] > sigs[b];
  });
  std::vector<std::size_t> kept;
  for (auto i : idx) {
    bool dominated = false;
    for (auto j : kept) {
      bool ge = true;
      for (std::size_t c = 0; c < sigs[i].size() && ge; ++c) ge = sigs[j][c] >= sigs[i][c];
      if (ge) {  // duplicates count as dominated
        dominated = true;
        break;
      }
    }
    if (!dominated) kept.push_back(i);
  }
  std::sort(kept.begin(), kept.end(), [&](auto a, auto b) { return sigs[a] > sigs[b]; });
  return kept;
}

namespace detail {

class SignatureScan {
 public:
  SignatureScan(const Graph& m, const Graph& n, const OrbitDecomposition& orbits,
                const EnumerationOptions& opt)
      : m_(m), n_(n), orbits_(orbits), opt_(opt) {
    const int nv = n.order();
    // BFS order keeps neighbours close, so orbit pruning bites early
    std::vector<char> seen(nv, 0);
    for (int s = 0; s < nv; ++s) {
      if (seen[s]) continue;
      seen[s] = 1;
      std::size_t head = order_.size();
      order_.push_back(s);
      while (head < order_.size()) {
        int u = order_[head++];
        for (int w : n.neighbors(u)) {
          if (!seen[w]) {
            seen[w] = 1;
            order_.push_back(w);
          }
        }
      }
    }
    pos_.resize(nv);
    for (int p = 0; p < nv; ++p) pos_[order_[p]] = p;
    back_.resize(nv);
    for (std::size_t e = 0; e < n.size(); ++e) {
      auto [u, v] = n.edge(e);
      if (pos_[u] > pos_[v]) std::swap(u, v);
      back_[pos_[v]].push_back({u, orbits.orbit_of_edge[e]});
    }
    full_.assign(orbits.r, 0);
    for (int c : opt.full_orbits) full_.at(c) = 1;
    radix_.resize(orbits.r);
    std::uint64_t span = 1;
    for (int c = orbits.r - 1; c >= 0; --c) {
      radix_[c] = span;
      span *= static_cast<std::uint64_t>(orbits.sizes[c]) + 1;
      if (span > (std::uint64_t{1} << 26)) dense_ = false;
    }
    if (dense_) seen_code_.assign(span, -1);
    sig_.assign(orbits.r, 0);
    image_.assign(nv, -1);
  }

  EnumerationResult run() {
    dfs(0);
    EnumerationResult out;
    out.leaves = leaves_;
    auto keep = pareto_indices(found_);
    out.frontier.provenance = "exhaustive";
    for (auto i : keep) {
      out.frontier.signatures.push_back(found_[i]);
      out.frontier.witnesses.push_back(witness_[i]);
    }
    if (opt_.keep_all) {
      out.distinct.provenance = "exhaustive";
      out.distinct.signatures = found_;
      out.distinct.witnesses = witness_;
    }
    return out;
  }

 private:
  struct Back {
    int u;
    int orbit;
  };

  void record() {
    ++leaves_;
    std::int64_t* slot;
    std::int64_t fresh = static_cast<std::int64_t>(found_.size());
    if (dense_) {
      std::uint64_t code = 0;
      for (int c = 0; c < orbits_.r; ++c) code += radix_[c] * sig_[c];
      slot = &seen_code_[code];
    } else {
      slot = &sparse_.try_emplace(sig_, -1).first->second;
    }
    if (*slot >= 0) return;
    *slot = fresh;
    found_.push_back(sig_);
    witness_.push_back(VertexMap{image_});
  }

  void dfs(int p) {
    if (++nodes_ > opt_.node_budget) throw BudgetExceeded("signature scan nodes", opt_.node_budget);
    if (p == n_.order()) {
      record();
      return;
    }
    const int v = order_[p];
    const int k = (p == 0 && opt_.target_vertex_transitive) ? 1 : m_.order();
    for (int c = 0; c < k; ++c) {
      bool ok = true;
      std::size_t done = 0;
      for (; done < back_[p].size(); ++done) {
        const auto& b = back_[p][done];
        if (m_.adjacent(c, image_[b.u])) {
          ++sig_[b.orbit];
        } else if (full_[b.orbit]) {
          ok = false;
          break;
        }
      }
      if (ok) {
        image_[v] = c;
        dfs(p + 1);
        image_[v] = -1;
      }
      for (std::size_t i = 0; i < done; ++i) {
        const auto& b = back_[p][i];
        if (m_.adjacent(c, image_[b.u])) --sig_[b.orbit];
      }
    }
  }

  struct SigHash {
    std::size_t operator()(const Signature& s) const {
      std::size_t h = 1469598103934665603ULL;
      for (int x : s) h = (h ^ static_cast<std::size_t>(x)) * 1099511628211ULL;
      return h;
    }
  };

  const Graph& m_;
  const Graph& n_;
  const OrbitDecomposition& orbits_;
  const EnumerationOptions& opt_;
  std::vector<int> order_, pos_;
  std::vector<std::vector<Back>> back_;
  std::vector<char> full_;
  std::vector<std::uint64_t> radix_;
  bool dense_ = true;
  std::vector<std::int64_t> seen_code_;
  std::unordered_map<Signature, std::int64_t, SigHash> sparse_;
  Signature sig_;
  std::vector<int> image_;
  std::vector<Signature> found_;
  std::vector<VertexMap> witness_;
  std::uint64_t nodes_ = 0, leaves_ = 0;
};

}  // namespace detail

/// Every map V(N) -> V(M) is scanned; the Pareto frontier of the resulting
/// signatures is returned with one witness each.
inline EnumerationResult enumerate_signatures(const Graph& m, const Graph& n,
                                              const OrbitDecomposition& orbits,
                                              const EnumerationOptions& opt = {}) {
  if (m.order() == 0) throw DomainError("target has no vertices");
  if (orbits.orbit_of_edge.size() != n.size()) throw DomainError("orbit data does not fit N");
  return detail::SignatureScan(m, n, orbits, opt).run();
}

// ---------------------------------------------------------------------------
// The orbit LP

/// min s  s.t.  sum_i f_i w_i <= s for each signature f,
///              sum_i |A_i| w_i = 1,  w, s >= 0.
/// Variables are w_0..w_{r-1} followed by s.
inline LinearProgram orbit_lp(const std::vector<int>& sizes, const std::vector<Signature>& sigs) {
  const int r = static_cast<int>(sizes.size());
  LinearProgram lp(r + 1);
  lp.objective[r] = 1;
  for (const auto& f : sigs) {
    if (static_cast<int>(f.size()) != r) throw DomainError("signature length differs from orbit count");
    std::vector<Rational> row(r + 1);
    for (int i = 0; i < r; ++i) row[i] = f[i];
    row[r] = -1;
    lp.add_le(std::move(row), 0);
  }
  std::vector<Rational> norm(r + 1);
  for (int i = 0; i < r; ++i) norm[i] = sizes[i];
  lp.add_eq(std::move(norm), 1);
  return lp;
}

struct OrbitLPResult {
  Rational value;
  std::vector<Rational> omega;
  std::vector<int> tight;  // indices into the signature list
  bool certified = false;  // dual certificate verified exactly
};

inline OrbitLPResult solve_orbit_lp(const std::vector<int>& sizes,
                                    const std::vector<Signature>& sigs) {
  if (sigs.empty()) throw DomainError("orbit LP needs at least one signature");
  LinearProgram lp = orbit_lp(sizes, sigs);
  LPSolution sol = solve_min(lp);
  if (sol.status != LPStatus::optimal) throw Error("orbit LP not optimal");
  OrbitLPResult out;
  out.value = sol.value;
  out.omega.assign(sol.x.begin(), sol.x.end() - 1);
  out.tight = sol.tight;
  out.certified = verify_min_certificate(lp, sol);
  return out;
}

enum class SMethod { automatic, exhaustive, congen };

inline const char* to_string(SMethod m) {
  switch (m) {
    case SMethod::automatic: return "automatic";
    case SMethod::exhaustive: return "exhaustive";
    case SMethod::congen: return "congen";
  }
  return "?";
}

struct SValueOptions {
  SMethod method = SMethod::automatic;
  std::uint64_t budget = kDefaultMapBudget;
  std::optional<OrbitDecomposition> orbits;  // computed when absent
};

struct SValueResult {
  Rational s;
  std::vector<Rational> omega;
  std::vector<Signature> binding;
  std::string method;
  OrbitDecomposition orbits;
  SignatureSet signatures;
  bool certified = false;
  int iterations = 1;
  double elapsed_ms = 0;
};

inline double map_space(const Graph& m, const Graph& n) {
  double space = 1;
  for (int i = 0; i < n.order(); ++i) space *= m.order();
  return space;
}

/// s(M, N) from the orbit LP. Exhaustive mode solves once over the Pareto
/// frontier; constraint generation grows the row set with mc as the
/// separation oracle until mc at the current weights equals the LP value.
inline SValueResult s_value(const Graph& m, const Graph& n, const SValueOptions& opt = {}) {
  auto start = std::chrono::steady_clock::now();
  if (m.size() == 0 || n.size() == 0) throw DomainError("s(M,N) needs edges in both graphs");
  SValueResult out;
  out.orbits = opt.orbits ? *opt.orbits : edge_orbits(n);
  const bool vt = is_vertex_transitive(m);
  SMethod method = opt.method;
  if (method == SMethod::automatic) {
    method = map_space(m, n) <= static_cast<double>(kExhaustiveThreshold) ? SMethod::exhaustive
                                                                            : SMethod::congen;
  }
  out.method = to_string(method);
  OrbitLPResult lp;
  if (method == SMethod::exhaustive) {
    EnumerationOptions eo;
    eo.target_vertex_transitive = vt;
    eo.node_budget = opt.budget;
    out.signatures = enumerate_signatures(m, n, out.orbits, eo).frontier;
    lp = solve_orbit_lp(out.orbits.sizes, out.signatures.signatures);
  } else {
    McOptions mo{vt, opt.budget};
    out.signatures.provenance = "constraint-generated";
    auto first = mc(m, n, unit_weights(n), mo);
    out.signatures.signatures.push_back(signature_of(first.witness, m, n, out.orbits));
    out.signatures.witnesses.push_back(first.witness);
    out.iterations = 0;
    for (;;) {
      ++out.iterations;
      lp = solve_orbit_lp(out.orbits.sizes, out.signatures.signatures);
      auto sep = mc(m, n, edge_weights_from_orbits(out.orbits, lp.omega), mo);
      if (sep.value == lp.value) break;
      if (sep.value < lp.value) throw Error("separation oracle below LP value");
      out.signatures.signatures.push_back(signature_of(sep.witness, m, n, out.orbits));
      out.signatures.witnesses.push_back(sep.witness);
    }
  }
  out.s = lp.value;
  out.omega = lp.omega;
  out.certified = lp.certified;
  for (int i : lp.tight) out.binding.push_back(out.signatures.signatures[i]);
  out.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return out;
}

/// s(M, N) with one weight per edge and no symmetry reduction, by
/// constraint generation over preserved-edge indicator rows.
inline Rational s_value_generic(const Graph& m, const Graph& n, std::size_t max_edges = 64,
                                std::uint64_t budget = kDefaultMapBudget) {
  if (m.size() == 0 || n.size() == 0) throw DomainError("s(M,N) needs edges in both graphs");
  if (n.size() > max_edges) throw BudgetExceeded("generic LP edge count", max_edges);
  const int e = static_cast<int>(n.size());
  McOptions mo{is_vertex_transitive(m), budget};
  LinearProgram lp(e + 1);
  lp.objective[e] = 1;
  std::vector<Rational> norm(e + 1, Rational(1));
  norm[e] = 0;
  lp.add_eq(norm, 1);
  auto add_row = [&](const VertexMap& f) {
    std::vector<Rational> row(e + 1);
    for (int i = 0; i < e; ++i) {
      auto [u, v] = n.edge(i);
      row[i] = m.adjacent(f[u], f[v]) ? 1 : 0;
    }
    row[e] = -1;
    lp.add_le(std::move(row), 0);
  };
  add_row(mc(m, n, unit_weights(n), mo).witness);
  for (;;) {
    LPSolution sol = solve_min(lp);
    if (sol.status != LPStatus::optimal) throw Error("generic LP not optimal");
    std::vector<Rational> w(sol.x.begin(), sol.x.end() - 1);
    auto sep = mc(m, n, w, mo);
    if (sep.value == sol.value) return sol.value;
    add_row(sep.witness);
  }
}

// ---------------------------------------------------------------------------
// Bounds

struct Interval {
  Rational low{0};
  Rational high{1};
  bool consistent() const { return low <= high; }
};

struct SandwichReport {
  Interval mh, hn, mn;  // s(M,H), s(H,N), s(M,N)
  bool consistent = true;
};

/// Interval propagation for a chain M -> H -> N, where
/// s(M,H) >= s(M,N) and s(H,N) >= s(M,N).
inline SandwichReport sandwich_bounds(const std::optional<Rational>& s_mh,
                                      const std::optional<Rational>& s_hn,
                                      const std::optional<Rational>& s_mn) {
  SandwichReport r;
  if (s_mh) r.mh.low = r.mh.high = *s_mh;
  if (s_hn) r.hn.low = r.hn.high = *s_hn;
  if (s_mn) r.mn.low = r.mn.high = *s_mn;
  r.mn.high = std::min({r.mn.high, r.mh.high, r.hn.high});
  r.mh.low = std::max(r.mh.low, r.mn.low);
  r.hn.low = std::max(r.hn.low, r.mn.low);
  r.consistent = r.mh.consistent() && r.hn.consistent() && r.mn.consistent();
  return r;
}

/// Whether M -> H -> N holds, by homomorphism search.
inline bool chain_holds(const Graph& m, const Graph& h, const Graph& n) {
  return hom_exists(m, h) && hom_exists(h, n);
}

enum class GraphClass { k4_minor_free, girth_mad };

/// Lower bound on s(K_2, G) for G in the class with the given (odd) girth.
/// K4-minor-free: odd girth >= 6k-1 gives 4k/(4k+1), >= 6k+3 gives
/// (4k+2)/(4k+3); the best k applies. Girth/mad table: 12, 11, 10.
inline Rational bound_from_class(int girth, GraphClass cls) {
  if (cls == GraphClass::k4_minor_free) {
    if (girth < 5) throw DomainError("K4-minor-free bound needs odd girth at least 5");
    Rational best;
    for (long k = 1; 6 * k - 1 <= girth; ++k) {
      best = std::max(best, Rational(4 * k, 4 * k + 1));
      if (6 * k + 3 <= girth) best = std::max(best, Rational(4 * k + 2, 4 * k + 3));
    }
    return best;
  }
  if (girth >= 12) return Rational(4, 5);
  if (girth == 11) return Rational(17, 22);
  if (girth == 10) return Rational(16, 21);
  throw DomainError("girth/mad bound needs girth at least 10");
}

// ---------------------------------------------------------------------------
// Reports

inline nlohmann::ordered_json signature_json(const Signature& f) {
  return nlohmann::ordered_json(f);
}

inline nlohmann::ordered_json svalue_json(const std::string& m_text, const std::string& n_text,
                                          const SValueResult& r, bool with_elapsed = true) {
  nlohmann::ordered_json j;
  j["schema"] = "homlp/1";
  j["M"] = m_text;
  j["N"] = n_text;
  j["s"] = r.s.str();
  j["omega"] = nlohmann::ordered_json::array();
  for (const auto& w : r.omega) j["omega"].push_back(w.str());
  j["binding"] = nlohmann::ordered_json::array();
  for (const auto& f : r.binding) j["binding"].push_back(signature_json(f));
  j["method"] = r.method;
  if (with_elapsed) j["elapsed_ms"] = static_cast<std::int64_t>(r.elapsed_ms);
  return j;
}

inline nlohmann::ordered_json orbit_json(const OrbitDecomposition& d) {
  nlohmann::ordered_json j;
  j["schema"] = "homlp/1";
  j["r"] = d.r;
  j["sizes"] = d.sizes;
  j["representatives"] = nlohmann::ordered_json::array();
  for (auto [u, v] : d.representatives) j["representatives"].push_back({u, v});
  return j;
}

}  // namespace homlp
