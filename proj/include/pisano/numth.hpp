#pragma once

// Integer number theory over 64-bit unsigned values: primality,
// factorization, divisors, modular square roots and multiplicative order.

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace pisano {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

// Largest modulus accepted by the period machinery. Keeps every
// intermediate product inside 128 bits and every sum of two residues
// inside 64 bits.
inline constexpr u64 kMaxModulus = (u64{1} << 63) - 1;

// Default seed for the randomized factorizer. Any seed gives the same
// factorization; the seed only changes the path taken to find it.
inline constexpr u64 kDefaultSeed = 0x9e3779b97f4a7c15ULL;

namespace numth {

struct PrimePower {
  u64 prime = 0;
  unsigned exponent = 0;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

// Canonical factorization: primes strictly increasing, exponents >= 1.
struct Factorization {
  std::vector<PrimePower> factors;

  // Product of prime^exponent. Throws OverflowError if it exceeds 64 bits.
  [[nodiscard]] u64 value() const;
  [[nodiscard]] bool is_prime_power() const { return factors.size() == 1; }

  friend bool operator==(const Factorization&, const Factorization&) = default;
};

struct DivisorSet {
  std::vector<u64> values;  // strictly increasing
  u64 source = 1;
};

[[nodiscard]] u64 mulmod(u64 a, u64 b, u64 m);
[[nodiscard]] u64 powmod(u64 a, u64 e, u64 m);

[[nodiscard]] u64 gcd(u64 a, u64 b);
// lcm(a, 0) == 0. Throws OverflowError when the result exceeds 64 bits.
[[nodiscard]] u64 lcm(u64 a, u64 b);

// Checked arithmetic helpers; throw OverflowError on wrap.
[[nodiscard]] u64 checked_mul(u64 a, u64 b);
[[nodiscard]] u64 checked_pow(u64 base, unsigned exponent);

// Deterministic Miller-Rabin for the full 64-bit range.
[[nodiscard]] bool is_prime(u64 n);

// Trial division by small primes, then Brent's variant of Pollard rho with
// a primality test driving the recursion. The seed makes the random walk
// reproducible. Throws DomainError for n < 2.
[[nodiscard]] Factorization factorize(u64 n, u64 seed = kDefaultSeed);

[[nodiscard]] DivisorSet divisors(const Factorization& f);

// Square roots of a modulo an odd prime p, ordered (smaller, larger).
// a == 0 yields (0, 0). Absent for quadratic non-residues.
[[nodiscard]] std::optional<std::pair<u64, u64>> mod_sqrt(u64 a, u64 p);

// Modular inverse of a modulo m, gcd(a, m) must be 1.
[[nodiscard]] u64 mod_inverse(u64 a, u64 m);

// Least k >= 1 with g^k == 1 (mod p), found by stripping prime factors
// from p - 1.
[[nodiscard]] u64 multiplicative_order(u64 g, u64 p,
                                       const Factorization& fact_p_minus_1);

}  // namespace numth
}  // namespace pisano
