#include "pisano/fibmod.hpp"

#include <bit>
#include <charconv>
#include <cstdlib>
#include <cstring>
#include <string>

#include "pisano/error.hpp"

namespace pisano {
namespace {

void check_modulus(u64 m, const char* op) {
  if (m == 0) throw DomainError(std::string(op) + ": modulus must be positive");
  if (m > kMaxModulus) {
    throw DomainError(std::string(op) + ": modulus " + std::to_string(m) +
                      " exceeds 2^63 - 1");
  }
}

u64 add(u64 a, u64 b, u64 m) {
  const u64 s = a + b;  // a, b < m <= 2^63 - 1
  return s >= m ? s - m : s;
}

u64 sub(u64 a, u64 b, u64 m) { return a >= b ? a - b : a + (m - b); }

PeriodResult walk_until_return(u64 m, u64 cap, u64 first, u64 second,
                               const char* op) {
  check_modulus(m, op);
  if (m > cap) {
    throw DomainError(std::string(op) + ": modulus " + std::to_string(m) +
                      " above oracle cap " + std::to_string(cap));
  }
  const u64 start_lo = first % m;
  const u64 start_hi = second % m;
  u64 lo = start_lo;
  u64 hi = start_hi;
  u64 steps = 0;
  do {
    const u64 sum = add(lo, hi, m);
    lo = hi;
    hi = sum;
    ++steps;
  } while (lo != start_lo || hi != start_hi);
  return {m, steps, Method::BruteForce, false};
}

}  // namespace

ResiduePair ResiduePair::next() const {
  return {hi, add(lo, hi, modulus), modulus};
}

std::string_view to_string(Method method) {
  switch (method) {
    case Method::BruteForce: return "BruteForce";
    case Method::PrimeDivisorSearch: return "PrimeDivisorSearch";
    case Method::PrimePowerLift: return "PrimePowerLift";
    case Method::LcmComposition: return "LcmComposition";
    case Method::Theorem1Filter: return "Theorem1Filter";
    case Method::Theorem2Filter: return "Theorem2Filter";
    case Method::FibIndexLaw: return "FibIndexLaw";
    case Method::LucasDivisorSearch: return "LucasDivisorSearch";
  }
  return "Unknown";
}

u64 default_oracle_cap() {
  static const u64 cap = [] {
    const char* env = std::getenv("PISANO_ORACLE_CAP");
    if (env == nullptr) return kDefaultOracleCap;
    u64 value = 0;
    const char* end = env + std::strlen(env);
    auto [ptr, ec] = std::from_chars(env, end, value);
    if (ec != std::errc() || ptr != end || value == 0) return kDefaultOracleCap;
    return value;
  }();
  return cap;
}

namespace fibmod {

ResiduePair fib_pair(u64 n, u64 m) {
  check_modulus(m, "fib_pair");
  // Invariant: (a, b) = (F_k, F_{k+1}) for k = the bits of n consumed so far.
  u64 a = 0;
  u64 b = 1 % m;
  for (int bit = std::bit_width(n) - 1; bit >= 0; --bit) {
    const u64 twice_b = add(b, b, m);
    const u64 c = numth::mulmod(a, sub(twice_b, a, m), m);          // F_2k
    const u64 d = add(numth::mulmod(a, a, m), numth::mulmod(b, b, m), m);  // F_2k+1
    if ((n >> bit) & 1) {
      a = d;
      b = add(c, d, m);
    } else {
      a = c;
      b = d;
    }
  }
  return {a, b, m};
}

ResiduePair lucas_pair(u64 n, u64 m) {
  check_modulus(m, "lucas_pair");
  // L_n = 2F_{n+1} - F_n and L_{n+1} = 2F_n + F_{n+1}.
  const ResiduePair f = fib_pair(n, m);
  const u64 lo = sub(add(f.hi, f.hi, m), f.lo, m);
  const u64 hi = add(add(f.lo, f.lo, m), f.hi, m);
  return {lo, hi, m};
}

PeriodResult brute_period(u64 m, u64 cap) {
  return walk_until_return(m, cap, 0, 1, "brute_period");
}

PeriodResult lucas_brute_period(u64 m, u64 cap) {
  return walk_until_return(m, cap, 2, 1, "lucas_brute_period");
}

}  // namespace fibmod
}  // namespace pisano
