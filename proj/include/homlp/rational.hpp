#pragma once

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <type_traits>
#include <cstdint>
#include <functional>
#include <ostream>
#include <string>
#include <string_view>

#include "homlp/error.hpp"

namespace homlp {

using BigInt = mpz_class;

/// Exact fraction backed by GMP. Always stored in lowest terms with a
/// positive denominator.
class Rational {
 public:
  Rational() = default;
  template <std::integral T>
  Rational(T v) {  // NOLINT: implicit from integers is intended
    if constexpr (std::is_signed_v<T>) {
      q_ = static_cast<long>(v);
    } else {
      q_ = static_cast<unsigned long>(v);
    }
  }
  Rational(const BigInt& v) : q_(v) {}  // NOLINT
  Rational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw DomainError("rational with zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
  }
  Rational(long num, long den) : Rational(BigInt(num), BigInt(den)) {}

  /// Parses "a", "-a" or "a/b" (no whitespace).
  static Rational parse(std::string_view text) {
    std::size_t slash = text.find('/');
    auto parse_int = [&](std::string_view part, std::size_t offset) {
      if (part.empty()) throw ParseError("empty integer", offset);
      std::size_t i = (part[0] == '-' || part[0] == '+') ? 1 : 0;
      if (i == part.size()) throw ParseError("sign without digits", offset);
      for (std::size_t j = i; j < part.size(); ++j) {
        if (part[j] < '0' || part[j] > '9') throw ParseError("expected digit", offset + j);
      }
      return BigInt(std::string(part[0] == '+' ? part.substr(1) : part), 10);
    };
    if (slash == std::string_view::npos) return Rational(parse_int(text, 0));
    BigInt num = parse_int(text.substr(0, slash), 0);
    BigInt den = parse_int(text.substr(slash + 1), slash + 1);
    if (den == 0) throw ParseError("zero denominator", slash + 1);
    return Rational(num, den);
  }

  const mpq_class& raw() const { return q_; }
  BigInt num() const { return q_.get_num(); }
  BigInt den() const { return q_.get_den(); }
  bool is_integer() const { return q_.get_den() == 1; }
  int sign() const { return sgn(q_); }

  /// "num/den", or just "num" for integers.
  std::string str() const {
    if (is_integer()) return q_.get_num().get_str();
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
  }

  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.sign() == 0) throw DomainError("division by zero");
    q_ /= o.q_;
    return *this;
  }
  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(Rational a) { a.q_ = -a.q_; return a; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

 private:
  explicit Rational(mpq_class q) : q_(std::move(q)) {}
  mpq_class q_;
};

inline Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

}  // namespace homlp

template <>
struct std::hash<homlp::Rational> {
  std::size_t operator()(const homlp::Rational& r) const {
    return std::hash<std::string>{}(r.str());
  }
};
