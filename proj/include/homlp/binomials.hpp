#pragma once

#include <string>
#include <vector>

#include "homlp/error.hpp"
#include "homlp/rational.hpp"
#include "json.hpp"

namespace homlp {

/// binom(n, k); zero outside 0 <= k <= n. Each partial product
/// r * (n-i) / (i+1) is itself a binomial coefficient, so the division is exact.
inline BigInt binom(long n, long k) {
  if (k < 0 || n < 0 || k > n) return BigInt(0);
  if (k > n - k) k = n - k;
  BigInt r(1);
  for (long i = 0; i < k; ++i) {
    r *= n - i;
    mpz_divexact_ui(r.get_mpz_t(), r.get_mpz_t(), static_cast<unsigned long>(i + 1));
  }
  return r;
}

namespace detail {
inline BigInt parity_sum(long n, long k, long x, int parity) {
  if (x < 1 || x > n || k < 0 || k > n) throw DomainError("need 1 <= x <= n and 0 <= k <= n");
  BigInt sum(0);
  for (long t = parity; t <= k && t <= x; t += 2) sum += binom(x, t) * binom(n - x, k - t);
  return sum;
}
}  // namespace detail

/// k-subsets of {1..n} meeting {1..x} in an odd number of elements.
inline BigInt N_odd(long n, long k, long x) { return detail::parity_sum(n, k, x, 1); }
/// ... and in an even number.
inline BigInt N_even(long n, long k, long x) { return detail::parity_sum(n, k, x, 0); }

struct SweepReport {
  std::string name;
  std::string range;
  long checked = 0;
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

inline std::string triple(long n, long k, long x) {
  return "(" + std::to_string(n) + "," + std::to_string(k) + "," + std::to_string(x) + ")";
}

/// N_o(2k,k,x) = N_e(2k,k,x) = binom(2k,k)/2 for odd x.
inline SweepReport check_half_identity(long k_max) {
  if (k_max < 1) throw DomainError("k_max must be at least 1");
  SweepReport rep{"half_identity", "1 <= k <= " + std::to_string(k_max) + ", odd x <= 2k", 0, {}};
  for (long k = 1; k <= k_max; ++k) {
    BigInt half = binom(2 * k, k) / 2;
    for (long x = 1; x <= 2 * k; x += 2) {
      ++rep.checked;
      BigInt o = N_odd(2 * k, k, x), e = N_even(2 * k, k, x);
      if (o != half || e != half) {
        rep.violations.push_back(triple(2 * k, k, x) + ": N_o=" + o.get_str() + " N_e=" + e.get_str() +
                                 " half=" + half.get_str());
      }
    }
  }
  return rep;
}

/// With n = 2k-1 and odd x < n, both counts are unchanged from x to x+1.
inline SweepReport check_shift_lemma(long k_max) {
  if (k_max < 2) throw DomainError("k_max must be at least 2");
  SweepReport rep{"shift_lemma", "2 <= k <= " + std::to_string(k_max) + ", n = 2k-1, odd x < n", 0, {}};
  for (long k = 2; k <= k_max; ++k) {
    const long n = 2 * k - 1;
    for (long x = 1; x < n; x += 2) {
      ++rep.checked;
      if (N_even(n, k, x) != N_even(n, k, x + 1) || N_odd(n, k, x) != N_odd(n, k, x + 1)) {
        rep.violations.push_back(triple(n, k, x));
      }
    }
  }
  return rep;
}

/// For k <= n < 2k <= bound and 1 <= x <= n: N_e <= binom(n-1,k-1) when k
/// is odd, N_o <= binom(n-1,k-1) when k is even.
inline SweepReport check_main_inequality(long bound) {
  if (bound < 2) throw DomainError("bound must be at least 2");
  SweepReport rep{"main_inequality", "k <= n < 2k <= " + std::to_string(bound) + ", 1 <= x <= n", 0, {}};
  for (long k = 1; 2 * k <= bound; ++k) {
    for (long n = k; n < 2 * k; ++n) {
      BigInt cap = binom(n - 1, k - 1);
      for (long x = 1; x <= n; ++x) {
        ++rep.checked;
        BigInt v = k % 2 == 1 ? N_even(n, k, x) : N_odd(n, k, x);
        if (v > cap) rep.violations.push_back(triple(n, k, x) + ": " + v.get_str() + " > " + cap.get_str());
      }
    }
  }
  return rep;
}

inline nlohmann::ordered_json sweep_json(const SweepReport& r) {
  nlohmann::ordered_json j;
  j["sweep"] = r.name;
  j["range"] = r.range;
  j["checked"] = r.checked;
  j["violations"] = r.violations;
  return j;
}

}  // namespace homlp
