#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace homlp {

/// Base of every error the library throws.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed text input; `position` is a 0-based character offset.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Arguments outside an operation's mathematical domain.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// An enumeration or search would exceed its configured budget. Never
/// recovered from by approximation.
class BudgetExceeded : public Error {
 public:
  BudgetExceeded(const std::string& what, std::uint64_t limit)
      : Error(what + " exceeds budget " + std::to_string(limit)), limit_(limit) {}
  std::uint64_t limit() const { return limit_; }

 private:
  std::uint64_t limit_;
};

}  // namespace homlp
