#pragma once

#include <stdexcept>
#include <string>

namespace pisano {

// Input outside an operation's documented domain (non-prime where a prime
// is required, zero modulus, index too large, ...).
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

// A result that does not fit the 64-bit range. Never wrapped silently.
class OverflowError : public std::overflow_error {
 public:
  explicit OverflowError(const std::string& what)
      : std::overflow_error(what) {}
};

}  // namespace pisano
