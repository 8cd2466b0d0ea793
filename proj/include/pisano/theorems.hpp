#pragma once

// The divisor filters for irreducible and split primes, Fibonacci primitive
// roots, and the period law for Fibonacci-number moduli. Each procedure is
// reported alongside the ground truth from the period module; agreement is
// data, never an assertion.

#include <optional>
#include <vector>

#include "pisano/fibmod.hpp"
#include "pisano/numth.hpp"
#include "pisano/period.hpp"

namespace pisano::theorems {

struct FilterReport {
  u64 prime = 0;
  PrimeClass prime_class = PrimeClass::Irreducible;
  u64 bound = 0;
  numth::DivisorSet all_divisors;
  std::vector<u64> surviving;
  // Least surviving d with F_{d+1} == 1 (mod p), absent if none qualifies.
  std::optional<u64> paper_answer;
  u64 true_period = 0;
  bool agrees = false;
};

struct FprResult {
  u64 prime = 0;
  std::vector<u64> roots;  // solutions of g^2 == g + 1 (mod p)
  std::vector<u64> root_orders;  // multiplicative order of each root
  std::vector<u64> primitive_roots_among_them;
  bool has_fpr = false;
};

struct FibIndexResult {
  u64 index = 0;
  u64 fibonacci = 0;  // F_index, exact
  PeriodResult computed;
  u64 predicted = 0;  // 2 * index when even, 4 * index when odd

  [[nodiscard]] bool matches() const { return computed.period == predicted; }
};

// Largest n with F_n <= 2^63 - 1.
inline constexpr u64 kMaxFibIndex = 92;

// Divisors d of 2p+2 with d not dividing p(p+1)/2, p+1 or 3(p-1).
[[nodiscard]] std::vector<u64> theorem1_candidates(u64 p,
                                                   u64 seed = kDefaultSeed);
[[nodiscard]] FilterReport theorem1_period(u64 p, u64 seed = kDefaultSeed);

// Even divisors d of p-1 with d not dividing p+1.
[[nodiscard]] std::vector<u64> theorem2_candidates(u64 p,
                                                   u64 seed = kDefaultSeed);
[[nodiscard]] FilterReport theorem2_period(u64 p, u64 seed = kDefaultSeed);

// Dispatches on the class of p. Throws DomainError for 2 and 5.
[[nodiscard]] FilterReport filter_period(u64 p, u64 seed = kDefaultSeed);

[[nodiscard]] FprResult fibonacci_primitive_root(u64 p,
                                                 u64 seed = kDefaultSeed);

// F_n computed exactly. Throws OverflowError for n > kMaxFibIndex.
[[nodiscard]] u64 fibonacci_exact(u64 n);

[[nodiscard]] FibIndexResult fib_index_period(u64 index,
                                              u64 seed = kDefaultSeed);

}  // namespace pisano::theorems
