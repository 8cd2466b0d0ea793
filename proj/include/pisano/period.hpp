#pragma once

// Theorem-driven computation of the Pisano period h(m): classify primes by
// their residue mod 5, search the divisors of the class bound, lift to prime
// powers and compose by lcm.

#include <string_view>
#include <vector>

#include "pisano/fibmod.hpp"
#include "pisano/numth.hpp"

namespace pisano {

// How x^2 - x - 1 factors modulo p. Split primes are p = +-1 (mod 5),
// irreducible primes are p = +-2 (mod 5).
enum class PrimeClass {
  SpecialTwo,
  SpecialFive,
  Split,
  Irreducible,
};

[[nodiscard]] std::string_view to_string(PrimeClass c);

namespace period {

[[nodiscard]] PrimeClass classify_prime(u64 p);

// The integer whose divisors contain h(p): 2p+2, p-1, 20 or 3 by class.
[[nodiscard]] u64 period_bound(u64 p);

// Least divisor d of period_bound(p) with fib_pair(d, p) == (0, 1).
[[nodiscard]] PeriodResult prime_period(u64 p, u64 seed = kDefaultSeed);

// h(p^e). Tries p^j * h(p) for j = 0, 1, ... and returns the first that
// brings the pair back to (0, 1); the textbook answer is j = e - 1 and any
// other outcome sets lift_guard_triggered.
[[nodiscard]] PeriodResult prime_power_period(u64 p, unsigned e,
                                              u64 seed = kDefaultSeed);

struct PeriodBreakdown {
  PeriodResult result;
  numth::Factorization factorization;  // empty for m == 1
  std::vector<PeriodResult> components;  // one per prime power, same order
};

[[nodiscard]] PeriodBreakdown pisano_breakdown(u64 m, u64 seed = kDefaultSeed);

[[nodiscard]] PeriodResult pisano_period(u64 m, u64 seed = kDefaultSeed);

// Least d with lucas_pair(d, m) == (2, 1) mod m, searched over the divisors
// of h(m).
[[nodiscard]] PeriodResult lucas_period(u64 m, u64 seed = kDefaultSeed);

}  // namespace period
}  // namespace pisano
