#pragma once

// Fibonacci and Lucas values modulo m by fast doubling, and the brute-force
// period oracle that walks the pair recurrence.

#include <string_view>

#include "pisano/numth.hpp"

namespace pisano {

// Consecutive terms (X_n mod m, X_{n+1} mod m) of a sequence obeying
// X_{n+2} = X_{n+1} + X_n.
struct ResiduePair {
  u64 lo = 0;
  u64 hi = 0;
  u64 modulus = 1;

  [[nodiscard]] ResiduePair next() const;

  friend bool operator==(const ResiduePair&, const ResiduePair&) = default;
};

enum class Method {
  BruteForce,
  PrimeDivisorSearch,
  PrimePowerLift,
  LcmComposition,
  Theorem1Filter,
  Theorem2Filter,
  FibIndexLaw,
  LucasDivisorSearch,
};

[[nodiscard]] std::string_view to_string(Method method);

struct PeriodResult {
  u64 modulus = 1;
  u64 period = 1;
  Method method = Method::BruteForce;
  // Set when a prime-power lift had to deviate from p^(e-1) * h(p).
  bool lift_guard_triggered = false;
};

inline constexpr u64 kDefaultOracleCap = 10'000'000;

// kDefaultOracleCap unless PISANO_ORACLE_CAP holds a positive integer.
// Read once per process.
[[nodiscard]] u64 default_oracle_cap();

namespace fibmod {

// (F_n mod m, F_{n+1} mod m), F_0 = 0, F_1 = 1.
[[nodiscard]] ResiduePair fib_pair(u64 n, u64 m);

// (L_n mod m, L_{n+1} mod m), L_0 = 2, L_1 = 1.
[[nodiscard]] ResiduePair lucas_pair(u64 n, u64 m);

// Steps the recurrence from (0, 1) until the pair recurs. Refuses moduli
// above `cap`.
[[nodiscard]] PeriodResult brute_period(u64 m, u64 cap = default_oracle_cap());

// As brute_period, starting from (2, 1).
[[nodiscard]] PeriodResult lucas_brute_period(u64 m,
                                              u64 cap = default_oracle_cap());

}  // namespace fibmod
}  // namespace pisano
