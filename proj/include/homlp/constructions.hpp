#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "homlp/error.hpp"
#include "homlp/graph.hpp"
#include "homlp/rational.hpp"
#include "homlp/svalue.hpp"
#include "homlp/symmetry.hpp"

namespace homlp {

// ---------------------------------------------------------------------------
// Walk coordinates on K_{p/q}

/// Positions along the cycle formed by the first orbit of K_{p/q}: the
/// vertex at position i is i*q mod p, and tau(v) = v * q^{-1} mod p is its
/// position. delta(a, b) is the forward distance from a to b along that
/// cycle.
struct TauCoords {
  int p = 0, q = 0, qinv = 0;
  std::vector<int> tau;  // vertex -> position
  std::vector<int> at;   // position -> vertex

  TauCoords(int p_, int q_) : p(p_), q(q_) {
    if (p < 2 || q < 1 || std::gcd(p, q) != 1) throw DomainError("walk coordinates need gcd(p,q) = 1");
    tau.resize(p);
    at.resize(p);
    for (int i = 0; i < p; ++i) {
      at[i] = static_cast<int>((static_cast<long>(i) * q) % p);
      tau[at[i]] = i;
    }
    qinv = tau[1];
  }

  int delta(int a, int b) const { return ((tau[b] - tau[a]) % p + p) % p; }

  /// Vertices at positions from, from+1, ..., to (mod p), inclusive.
  std::vector<int> interval(int from, int to) const {
    std::vector<int> out;
    from = ((from % p) + p) % p;
    to = ((to % p) + p) % p;
    for (int i = from;; i = (i + 1) % p) {
      out.push_back(at[i]);
      if (i == to) break;
    }
    return out;
  }

  /// |S ∩ (a, b]| along the walk.
  int count_half_open(const std::vector<char>& in_s, int a, int b) const {
    int c = 0;
    for (int i = (tau[a] + 1) % p, d = 0; d < delta(a, b); i = (i + 1) % p, ++d) c += in_s[at[i]];
    return c;
  }
};

/// The map f(S): position 0 goes to w_0, then each position steps one
/// place backwards around C_{2k+1} when its vertex is in S and forwards
/// otherwise.
struct WalkMap {
  int p = 0, q = 0, k = 0;
  std::vector<int> s;  // as given
  VertexMap map;
  bool closed = false;         // last vertex lands next to w_0
  bool v0_consistent = false;  // membership of v_0 matches the closing step
};

inline std::vector<char> membership(int p, const std::vector<int>& s) {
  std::vector<char> in(p, 0);
  for (int v : s) {
    if (v < 0 || v >= p) throw DomainError("S contains a vertex outside K(p/q)");
    in[v] = 1;
  }
  return in;
}

inline WalkMap build_fS(int p, int q, int k, const std::vector<int>& s) {
  if (k < 1) throw DomainError("odd cycle target needs k >= 1");
  TauCoords tc(p, q);
  auto in = membership(p, s);
  const int c = 2 * k + 1;
  WalkMap out;
  out.p = p;
  out.q = q;
  out.k = k;
  out.s = s;
  out.map.image.assign(p, 0);
  int prev = 0;
  for (int i = 1; i < p; ++i) {
    int v = tc.at[i];
    prev = in[v] ? (prev + c - 1) % c : (prev + 1) % c;
    out.map.image[v] = prev;
  }
  out.closed = prev == 1 || prev == c - 1;
  out.v0_consistent = out.closed ? (in[0] != 0) == (prev == 1) : in[0] == 0;
  return out;
}

/// The congruence test for f(v_i) f(v_j) being an edge of C_{2k+1}.
/// Holds on every edge of a closed walk map in either orientation; on an
/// open map only in the orientation of increasing position.
inline bool usefulcong_predicate(const TauCoords& tc, const std::vector<char>& in_s, int i, int j, int k) {
  const long c = 2 * k + 1;
  long count = tc.count_half_open(in_s, i, j);
  long d = tc.delta(i, j);
  auto mod = [c](long x) { return ((x % c) + c) % c; };
  return mod(count) == mod((k + 1) * (d + 1)) || mod(count) == mod((k + 1) * (d - 1));
}

// ---------------------------------------------------------------------------
// Preimage tables

/// Rows of the preimage table of a walk map, each with 2k+1 cells. A new row
/// starts whenever the walk turns around or wraps past w_0.
inline std::vector<std::vector<std::string>> preimage_table(const WalkMap& f) {
  TauCoords tc(f.p, f.q);
  const int c = 2 * f.k + 1;
  std::vector<std::vector<std::string>> rows;
  rows.emplace_back(c);
  int prev = -1, dir = 0;
  for (int i = 0; i < f.p; ++i) {
    int v = tc.at[i];
    int img = f.map[v];
    if (prev >= 0) {
      int step = (img == (prev + 1) % c) ? 1 : -1;
      bool wrap = (step == 1 && img == 0) || (step == -1 && img == c - 1);
      if ((dir != 0 && step != dir) || wrap) rows.emplace_back(c);
      dir = step;
    }
    rows.back()[img] = "v" + std::to_string(v);
    prev = img;
  }
  return rows;
}

inline std::string render_table(const std::vector<std::vector<std::string>>& rows) {
  std::string out;
  for (const auto& row : rows) {
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (j) out += " & ";
      out += row[j];
    }
    out += '\n';
  }
  return out;
}

/// Converts table rows written as "v_0 & v_{14} & & \\" to the canonical
/// rendering above, padding every row to `cells` entries.
inline std::string normalize_latex_table(std::string_view text, int cells) {
  std::vector<std::vector<std::string>> rows;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string line(text.substr(start, end - start));
    start = end + 1;
    if (auto bs = line.find("\\\\"); bs != std::string::npos) line.erase(bs);
    auto last = line.find_last_not_of(" \t");
    if (last == std::string::npos) continue;
    line.erase(last + 1);
    std::vector<std::string> row;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, '&')) {
      std::string clean;
      for (char ch : cell) {
        if (ch != ' ' && ch != '\t' && ch != '_' && ch != '{' && ch != '}') clean += ch;
      }
      row.push_back(clean);
    }
    if (line.back() == '&') row.emplace_back();
    row.resize(std::max<std::size_t>(row.size(), cells));
    if (static_cast<int>(row.size()) > cells) throw ParseError("table row wider than target", 0);
    rows.push_back(row);
  }
  return render_table(rows);
}

// ---------------------------------------------------------------------------
// Named families

/// A map with the signature its construction claims and the signature read
/// off the map itself. Unclaimed orbits are nullopt.
struct ConstructionResult {
  std::string name;
  int p = 0, q = 0, k = 0;
  VertexMap map;
  std::vector<int> s;  // walk set, empty for block constructions
  std::vector<std::optional<int>> claimed;
  Signature computed;
  std::vector<int> orbit_sizes;
  bool match = false;
  bool ranges_integral = true;
  std::string note;
};

inline ConstructionResult named(std::string name, int p, int q, int k) {
  ConstructionResult r;
  r.name = std::move(name);
  r.p = p;
  r.q = q;
  r.k = k;
  return r;
}

inline void finish(ConstructionResult& r) {
  Graph host = circular_complete(r.p, r.q);
  auto orbits = circular_orbits(r.p, r.q);
  r.orbit_sizes = orbits.sizes;
  r.computed = signature_of(r.map, cycle(2 * r.k + 1), host, orbits);
  r.match = r.claimed.size() == r.computed.size();
  for (std::size_t i = 0; r.match && i < r.claimed.size(); ++i) {
    if (r.claimed[i] && *r.claimed[i] != r.computed[i]) r.match = false;
  }
}

inline std::string claimed_text(const std::vector<std::optional<int>>& c) {
  std::string out = "(";
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) out += ",";
    out += c[i] ? std::to_string(*c[i]) : "?";
  }
  return out + ")";
}

inline std::string signature_text(const Signature& s) {
  std::string out = "(";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i]);
  return out + ")";
}

/// Host K_{(2kn+n-2m)/(kn-m)} into C_{2k+1}: consecutive vertex blocks sent
/// to w_0, w_2, ..., w_2k, w_1, ..., w_{2k-1}; claim (|A_1|-m, |A_2|, ...).
/// nullopt when the host fraction is not reduced.
inline std::optional<ConstructionResult> solalpha(int k, int n, int m) {
  if (k < 2 || n < 2 || m < 1 || 2 * m > n || m > 2 * k + 1) {
    throw DomainError("solalpha needs k,n >= 2 and 1 <= m <= min(n/2, 2k+1)");
  }
  const int p = 2 * k * n + n - 2 * m, q = k * n - m;
  if (std::gcd(p, q) != 1) return std::nullopt;
  ConstructionResult r = named("solalpha", p, q, k);
  std::vector<int> targets;
  for (int j = 0; j <= 2 * k; j += 2) targets.push_back(j);
  for (int j = 1; j < 2 * k; j += 2) targets.push_back(j);
  auto size_of = [&](int j) {
    if (m <= k) return j <= 2 * (k - m) ? n : n - 1;
    return j < 2 * (2 * k - m + 1) ? n - 1 : n - 2;
  };
  r.map.image.assign(p, 0);
  int v = 0;
  for (int j : targets) {
    for (int t = 0; t < size_of(j); ++t) r.map.image[v++] = j;
  }
  if (v != p) throw Error("solalpha blocks do not tile the host");
  auto sizes = circular_orbits(p, q).sizes;
  for (std::size_t c = 0; c < sizes.size(); ++c) r.claimed.push_back(c == 0 ? sizes[0] - m : sizes[c]);
  finish(r);
  return r;
}

/// Host K_{(2kn+n-2)/(kn-1)}, S = the last 2k-1 walk positions plus v_0.
inline std::optional<ConstructionResult> solbeta(int k, int n) {
  if (k < 2 || n < 2) throw DomainError("solbeta needs k, n >= 2");
  const int p = 2 * k * n + n - 2, q = k * n - 1;
  if (std::gcd(p, q) != 1) return std::nullopt;
  TauCoords tc(p, q);
  ConstructionResult r = named("solbeta", p, q, k);
  r.s = tc.interval(p - 2 * k + 1, 0);
  r.map = build_fS(p, q, k, r.s).map;
  auto sizes = circular_orbits(p, q).sizes;
  const int rr = static_cast<int>(sizes.size());
  for (int c = 0; c < rr; ++c) {
    if (c == 0) r.claimed.push_back(sizes[0]);
    else if (n % 2 == 0 && c == rr - 1) r.claimed.push_back(sizes[c] - (2 * k - 1));
    else r.claimed.push_back(sizes[c] - 2 * (2 * k - 1));
  }
  finish(r);
  return r;
}

/// Largest second-orbit count among maps that keep the whole first orbit,
/// by exhaustive scan with first-orbit pruning.
inline int max_second_orbit_given_full_first(int p, int q, int k) {
  Graph host = circular_complete(p, q);
  auto orbits = circular_orbits(p, q);
  if (orbits.r < 2) throw DomainError("host has a single orbit");
  EnumerationOptions opt;
  opt.target_vertex_transitive = true;
  opt.full_orbits = {0};
  auto res = enumerate_signatures(cycle(2 * k + 1), host, orbits, opt);
  int best = -1;
  for (const auto& f : res.frontier.signatures) {
    if (f[0] == orbits.sizes[0]) best = std::max(best, f[1]);
  }
  return best;
}

/// Host K_{(2kn+n-4)/(kn-2)} for odd n >= 3, S = the last 2k-2 walk
/// positions plus v_0. Claimed ranges i <= (n+1)/4 and i <= (n-1)/4 are
/// read with floor, which covers orbits 2..(n+1)/2 exactly once.
inline std::optional<ConstructionResult> splitend(int k, int n) {
  if (k < 2 || n < 3 || n % 2 == 0) throw DomainError("splitend needs k >= 2 and odd n >= 3");
  const int p = 2 * k * n + n - 4, q = k * n - 2;
  if (std::gcd(p, q) != 1) return std::nullopt;
  TauCoords tc(p, q);
  ConstructionResult r = named("splitend", p, q, k);
  r.s = tc.interval(2 * k * n + n - 2 * k - 2, 0);
  r.map = build_fS(p, q, k, r.s).map;
  auto sizes = circular_orbits(p, q).sizes;
  r.claimed.assign(sizes.size(), std::nullopt);
  r.claimed[0] = sizes[0];
  const int c = 2 * k + 1;
  for (int i = 1; i <= (n + 1) / 4; ++i) {
    int o = 2 * i - 1;  // 0-based index of orbit 2i
    if (o < static_cast<int>(sizes.size())) r.claimed[o] = sizes[o] - ((n - 1) / 2 - i) * c - (4 * k - 2);
  }
  for (int i = 1; i <= (n - 1) / 4; ++i) {
    int o = 2 * i;  // orbit 2i+1
    if (o < static_cast<int>(sizes.size())) r.claimed[o] = sizes[o] - (i - 1) * c - (4 * k - 2);
  }
  r.ranges_integral = (n + 1) % 4 == 0 && (n - 1) % 4 == 0;
  finish(r);
  return r;
}

// ---------------------------------------------------------------------------
// Window counting on a circle

/// Windows of s consecutive elements (out of r on a circle) meeting
/// P_1 ∪ P_2 in exactly i elements, where P_1, P_2 are runs of p elements
/// with q elements between them on one side.
inline long gamma_brute(int p, int q, int r, int s, int i) {
  std::vector<char> marked(r, 0);
  for (int t = 0; t < p; ++t) {
    marked[t] = 1;
    marked[(q + p + t) % r] = 1;
  }
  long count = 0;
  for (int start = 0; start < r; ++start) {
    int hit = 0;
    for (int t = 0; t < s; ++t) hit += marked[(start + t) % r];
    count += hit == i ? 1 : 0;
  }
  return count;
}

/// The closed-form branches; nullopt where no branch is defined.
inline std::optional<long> gamma_closed(int p, int q, int r, int s, int i) {
  if (p < 1 || q < 1 || r < 1 || s < 1 || i < 0) throw DomainError("gamma needs positive p, q, r, s");
  if (!(r > 2 * p + q + s) || s < p) throw DomainError("gamma needs r > 2p+q+s and s >= p");
  if (s <= q) {
    if (i == 0) return r - 2 * p - 2 * s + 2;
    if (i == p) return 2 * s - 2 * p + 2;
    if (i > p) return 0;
    return std::nullopt;
  }
  if (s == q + p) {
    if (i == 0) return r - 3 * p - 2 * q + 1;
    if (i == p) return 2 * q + p + 1;
    if (i > p) return 0;
    return std::nullopt;
  }
  if (s > q + p + 1) {
    if (i == 0) return r - 2 * p - q - s + 1;
    if (i == p) return 2 * q + 2;
    if (i == p + 1) return 2;
    if (i > 2 * p) return 0;
    return std::nullopt;
  }
  return std::nullopt;
}

struct GammaValue {
  long brute = 0;
  std::optional<long> closed;
};

inline GammaValue gamma(int p, int q, int r, int s, int i) {
  auto closed = gamma_closed(p, q, r, s, i);
  return {gamma_brute(p, q, r, s, i), closed};
}

/// Predicted count on the orbit whose edges span g(2k+1)-1 walk steps,
/// for S made of two runs of 2k with (u-1)(2k+1) positions between them.
inline long corw_predict(int k, long orbit_size, int u, int g) {
  if (k < 1 || u < 1 || g < 1) throw DomainError("corw needs k, u, g >= 1");
  if (g < u) return orbit_size - (8 * k - 4);
  if (g == u) return orbit_size - (4 * k - 2);
  return orbit_size - static_cast<long>(g - u) * (2 * k + 1) - (6 * k - 5);
}

/// Walk span g of orbit c (1-based) of K_{p/q}: the edge offset q+c-1 is
/// g(2k+1)-1 walk steps in one of its two orientations.
inline std::optional<int> orbit_walk_span(const TauCoords& tc, int c, int k) {
  const int m = 2 * k + 1;
  int d = tc.tau[(tc.q + c - 1) % tc.p];
  for (int len : {d, tc.p - d}) {
    if ((len + 1) % m == 0) return (len + 1) / m;
  }
  return std::nullopt;
}

struct SplitMiddleResult {
  ConstructionResult result;
  int family_index = 0;  // c in f^c
  int u = 0;             // run separation in blocks of 2k+1, 0 if not a multiple
  std::vector<std::optional<long>> corw;  // prediction per orbit
  bool corw_match = true;
  bool clause_conflict = false;
};

/// The family f^c, c = 2..(n+1)/2, on K_{(2kn+n-4)/(kn-2)}. Both members
/// use S = P_1 ∪ P_2 with P_2 the last 2k-1 positions plus v_0 and P_1 a
/// run of 2k positions. For even c the run is taken to end 2k-1 steps after
/// its start, since the printed end index would give an empty run.
inline std::vector<SplitMiddleResult> splitmiddle(int k, int n) {
  if (k < 2 || n < 5 || n % 2 == 0) throw DomainError("splitmiddle needs k >= 2 and odd n >= 5");
  const int p = 2 * k * n + n - 4, q = k * n - 2, m = 2 * k + 1;
  if (std::gcd(p, q) != 1) return {};
  TauCoords tc(p, q);
  auto sizes = circular_orbits(p, q).sizes;
  const int r = static_cast<int>(sizes.size());
  const int half = (n - 1) / 2;
  std::vector<SplitMiddleResult> out;
  for (int c = 2; c <= (n + 1) / 2; ++c) {
    const bool even = c % 2 == 0;
    const int i = even ? c / 2 : (c - 1) / 2;
    const int p1_start = even ? (half + i - 1) * m - 1 : (n - i - 1) * m - 1;
    const int p2_start = (n - 1) * m - 2;
    auto p1 = tc.interval(p1_start, p1_start + 2 * k - 1);
    auto p2 = tc.interval(p2_start, 0);
    SplitMiddleResult sm;
    sm.family_index = c;
    auto& res = sm.result;
    res = named("splitmiddle", p, q, k);
    res.s = p1;
    res.s.insert(res.s.end(), p2.begin(), p2.end());
    auto in = membership(p, res.s);
    if (std::count(in.begin(), in.end(), 1) != 4 * k) res.note = "runs overlap";
    res.map = build_fS(p, q, k, res.s).map;

    // the eight clauses, orbit indices 1-based
    std::vector<std::optional<long>> claim(r + 1);
    auto set = [&](int o, long v) {
      if (o < 1 || o > r) return;
      if (claim[o] && *claim[o] != v) sm.clause_conflict = true;
      claim[o] = v;
    };
    const long A8 = 8 * k - 4, A4 = 4 * k - 2, A6 = 6 * k - 5;
    set(1, sizes[0]);
    set(c, sizes[c - 1] - A4);
    if (even) {
      for (int j = 1; j <= (n - 1) / 4; ++j) set(2 * j + 1, sizes[2 * j] - A8);
      for (int j = i + 1; j <= (n + 1) / 4; ++j) set(2 * j, sizes[2 * j - 1] - A8);
      for (int j = 1; j <= i - 1; ++j) set(2 * j, sizes[2 * j - 1] - static_cast<long>(i - j) * m - A6);
    } else {
      for (int j = 1; j <= i - 1; ++j) set(2 * j + 1, sizes[2 * j] - A8);
      for (int j = 1; j <= (n + 1) / 4; ++j) {
        set(2 * j, sizes[2 * j - 1] - static_cast<long>(half - i - j) * m - A6);
      }
      for (int j = i + 1; j <= (n - 1) / 4; ++j) {
        set(2 * j + 1, sizes[2 * j] - static_cast<long>(j - i) * m - A6);
      }
    }
    for (int o = 1; o <= r; ++o) {
      res.claimed.push_back(claim[o] ? std::optional<int>(static_cast<int>(*claim[o])) : std::nullopt);
    }
    res.ranges_integral = (n + 1) % 4 == 0 && (n - 1) % 4 == 0;
    finish(res);

    // run separation: positions strictly between the runs, shorter side
    int p1_end = (p1_start + 2 * k - 1) % p;
    int gap_a = ((p2_start - p1_end - 1) % p + p) % p;
    int gap_b = ((p1_start - 0 - 1) % p + p) % p;
    int gap = std::min(gap_a, gap_b);
    sm.u = gap % m == 0 ? gap / m + 1 : 0;
    sm.corw.assign(r, std::nullopt);
    for (int o = 2; o <= r; ++o) {
      auto g = orbit_walk_span(tc, o, k);
      if (!g || sm.u == 0) continue;
      sm.corw[o - 1] = corw_predict(k, sizes[o - 1], sm.u, *g);
      if (*sm.corw[o - 1] != res.computed[o - 1]) sm.corw_match = false;
    }
    out.push_back(std::move(sm));
  }
  return out;
}

/// LP value over a chosen subset of signatures: a lower bound on s(M,N).
inline Rational relaxed_s(const std::vector<int>& orbit_sizes, const std::vector<Signature>& subset) {
  return solve_orbit_lp(orbit_sizes, subset).value;
}

/// Whether a subset of signatures already pins down s(M,N): true iff mc at
/// the relaxed optimum equals the relaxed value.
inline bool relaxed_is_exact(const Graph& m, const Graph& n, const OrbitDecomposition& orbits,
                             const std::vector<Signature>& subset) {
  auto lp = solve_orbit_lp(orbits.sizes, subset);
  McOptions opt{is_vertex_transitive(m)};
  return mc(m, n, edge_weights_from_orbits(orbits, lp.omega), opt).value == lp.value;
}

// ---------------------------------------------------------------------------
// Closed forms

namespace closed_form {

inline void need(bool ok, const char* what) {
  if (!ok) throw DomainError(what);
}

/// s(K_2, C_{2k+1}).
inline Rational odd_cycle(long k) {
  need(k >= 1, "odd_cycle needs k >= 1");
  return Rational(2 * k, 2 * k + 1);
}

/// s(K_2, K_{4k/(2k-1)}).
inline Rational k2_even_family(long k) {
  need(k >= 1, "k2_even_family needs k >= 1");
  return Rational(2 * k, 2 * k + 1);
}

/// s(K_2, K_{(6k+5)/(3k+1)}).
inline Rational k2_6k5(long k) {
  need(k >= 1, "k2_6k5 needs k >= 1");
  return Rational(6 * k * k + 8 * k + 3, 6 * k * k + 11 * k + 5);
}

/// s(K_2, K_{(8k+6)/(4k+1)}).
inline Rational k2_8k6(long k) {
  need(k >= 1, "k2_8k6 needs k >= 1");
  return Rational(8 * k * k + 6 * k + 2, 8 * k * k + 10 * k + 3);
}

/// Printed values of s(K_2, K_{p/q}) computed by other means.
inline std::optional<Rational> k2_table(int p, int q) {
  if (p == 17 && q == 6) return Rational(322, 425);
  if (p == 27 && q == 11) return Rational(5, 6);
  if (p == 20 && q == 7) return Rational(67, 89);
  return std::nullopt;
}

/// Stated value of s(C_{2k+1}, K_{P/(kn-1)}), P = 2(kn-1)+n.
inline Rational odd_m1_stated(long k, long n) {
  need(k >= 2 && n >= 2, "odd_m1 needs k, n >= 2");
  long big = 2 * (k * n - 1) + n;
  return Rational(big * (4 * k - 1), big * (4 * k - 1) + 4 * k - 2);
}

/// (1 - ab)/(2 - a - b), a = 1 - 1/P, b = 1 - 2(2k-1)/P: the optimum of
/// the two-row relaxation on the same host.
inline Rational odd_m1_relaxed(long k, long n) {
  need(k >= 2 && n >= 2, "odd_m1 needs k, n >= 2");
  Rational big(2 * (k * n - 1) + n);
  Rational a = Rational(1) - Rational(1) / big;
  Rational b = Rational(1) - Rational(2 * (2 * k - 1)) / big;
  return (Rational(1) - a * b) / (Rational(2) - a - b);
}

/// xi_n = t_{(n-1)/2} / 4 with t_0 = t_1 = 2, t_m = 2 t_{m-1} - c t_{m-2},
/// c = (2k-3)/(4k-2): power sums of the two reciprocal roots.
inline Rational xi(long k, long n) {
  need(k >= 2 && n >= 3 && n % 2 == 1, "xi needs k >= 2 and odd n >= 3");
  Rational c(2 * k - 3, 4 * k - 2);
  Rational t0(2), t1(2);
  for (long m = 2; m <= (n - 1) / 2; ++m) {
    Rational t2 = Rational(2) * t1 - c * t0;
    t0 = t1;
    t1 = t2;
  }
  return ((n - 1) / 2 == 0 ? t0 : t1) / Rational(4);
}

/// Lower bound claimed for s(C_{2k+1}, K_{P/(kn-2)}), P = 2(kn-2)+n.
inline Rational odd_m2_bound(long k, long n) {
  Rational x = xi(k, n);
  Rational big(2 * (k * n - 2) + n);
  Rational top = big * (x * Rational(4 * k - 1) + Rational(2 * k - 1));
  return top / (top + Rational(4 * k - 2) * (Rational(1) - x));
}

/// chi_q(Q_{n/k}) for k <= n < 2k.
inline Rational cube_scale(long n, long k) {
  need(k >= 1 && k <= n && n < 2 * k, "cube_scale needs k <= n < 2k");
  return k % 2 == 0 ? Rational(n, k) : Rational(n + 1, k + 1);
}

/// Claimed jump of s(K_r, K_{2+2/(2k-1)}) as r reaches 2+1/k.
inline Rational jump(long k) {
  need(k >= 1, "jump needs k >= 1");
  return Rational(2 * k - 1, 4 * k * (2 * k + 1));
}

/// Claimed s(C_{2k+1}, K_{4k/(2k-1)}).
inline Rational odd_a1_claim(long k) {
  need(k >= 1, "odd_a1_claim needs k >= 1");
  return Rational(4 * k - 1, 4 * k);
}

inline Rational evaluate(std::string_view name, const std::vector<long>& a) {
  auto arg = [&](std::size_t i) {
    need(i < a.size(), "missing closed-form argument");
    return a[i];
  };
  if (name == "odd_cycle") return odd_cycle(arg(0));
  if (name == "k2_even_family") return k2_even_family(arg(0));
  if (name == "k2_6k5") return k2_6k5(arg(0));
  if (name == "k2_8k6") return k2_8k6(arg(0));
  if (name == "k2_table") {
    auto v = k2_table(static_cast<int>(arg(0)), static_cast<int>(arg(1)));
    need(v.has_value(), "no tabulated value for this host");
    return *v;
  }
  if (name == "odd_m1_stated") return odd_m1_stated(arg(0), arg(1));
  if (name == "odd_m1_relaxed") return odd_m1_relaxed(arg(0), arg(1));
  if (name == "xi") return xi(arg(0), arg(1));
  if (name == "odd_m2_bound") return odd_m2_bound(arg(0), arg(1));
  if (name == "cube_scale") return cube_scale(arg(0), arg(1));
  if (name == "jump") return jump(arg(0));
  if (name == "odd_a1_claim") return odd_a1_claim(arg(0));
  throw DomainError("unknown closed form '" + std::string(name) + "'");
}

}  // namespace closed_form

}  // namespace homlp
