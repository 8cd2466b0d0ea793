#include "pisano/period.hpp"

#include <stdexcept>
#include <string>

#include "pisano/error.hpp"

namespace pisano {

std::string_view to_string(PrimeClass c) {
  switch (c) {
    case PrimeClass::SpecialTwo: return "special-two";
    case PrimeClass::SpecialFive: return "special-five";
    case PrimeClass::Split: return "split";
    case PrimeClass::Irreducible: return "irreducible";
  }
  return "unknown";
}

namespace period {
namespace {

void require_prime(u64 p, const char* op) {
  if (!numth::is_prime(p)) {
    throw DomainError(std::string(op) + ": " + std::to_string(p) +
                      " is not prime");
  }
}

void require_modulus(u64 m, const char* op) {
  if (m == 0) throw DomainError(std::string(op) + ": modulus must be positive");
  if (m > kMaxModulus) {
    throw DomainError(std::string(op) + ": modulus " + std::to_string(m) +
                      " exceeds 2^63 - 1");
  }
}

bool returns_to_start(u64 n, u64 m) {
  const ResiduePair pair = fibmod::fib_pair(n, m);
  return pair.lo == 0 && pair.hi == 1 % m;
}

}  // namespace

PrimeClass classify_prime(u64 p) {
  require_prime(p, "classify_prime");
  if (p == 2) return PrimeClass::SpecialTwo;
  if (p == 5) return PrimeClass::SpecialFive;
  const u64 r = p % 5;
  return (r == 1 || r == 4) ? PrimeClass::Split : PrimeClass::Irreducible;
}

u64 period_bound(u64 p) {
  switch (classify_prime(p)) {
    case PrimeClass::SpecialTwo: return 3;
    case PrimeClass::SpecialFive: return 20;
    case PrimeClass::Split: return p - 1;
    case PrimeClass::Irreducible: return numth::checked_mul(2, p + 1);
  }
  throw std::logic_error("period_bound: unreachable");
}

PeriodResult prime_period(u64 p, u64 seed) {
  const PrimeClass cls = classify_prime(p);
  if (p > kMaxModulus) {
    throw DomainError("prime_period: " + std::to_string(p) +
                      " exceeds 2^63 - 1");
  }
  if (cls == PrimeClass::SpecialTwo) return {p, 3, Method::PrimeDivisorSearch};
  if (cls == PrimeClass::SpecialFive) return {p, 20, Method::PrimeDivisorSearch};

  const numth::DivisorSet candidates =
      numth::divisors(numth::factorize(period_bound(p), seed));
  for (u64 d : candidates.values) {
    if (returns_to_start(d, p)) return {p, d, Method::PrimeDivisorSearch};
  }
  throw std::logic_error("prime_period: no divisor of the bound is a period of " +
                         std::to_string(p));
}

PeriodResult prime_power_period(u64 p, unsigned e, u64 seed) {
  if (e == 0) throw DomainError("prime_power_period: exponent must be >= 1");
  require_prime(p, "prime_power_period");
  const u64 modulus = numth::checked_pow(p, e);
  require_modulus(modulus, "prime_power_period");

  const PeriodResult base = prime_period(p, seed);
  if (e == 1) return base;

  u64 candidate = base.period;
  for (unsigned j = 0; j < e; ++j) {
    if (returns_to_start(candidate, modulus)) {
      return {modulus, candidate, Method::PrimePowerLift, j != e - 1};
    }
    if (j + 1 < e) candidate = numth::checked_mul(candidate, p);
  }
  throw std::logic_error("prime_power_period: lift failed for " +
                         std::to_string(p) + "^" + std::to_string(e));
}

PeriodBreakdown pisano_breakdown(u64 m, u64 seed) {
  require_modulus(m, "pisano_period");
  PeriodBreakdown out;
  out.result = {m, 1, Method::LcmComposition};
  if (m == 1) return out;

  out.factorization = numth::factorize(m, seed);
  u64 period = 1;
  bool guard = false;
  for (const auto& [p, e] : out.factorization.factors) {
    PeriodResult part = prime_power_period(p, e, seed);
    period = numth::lcm(period, part.period);
    guard = guard || part.lift_guard_triggered;
    out.components.push_back(part);
  }
  const Method method = out.components.size() == 1
                            ? out.components.front().method
                            : Method::LcmComposition;
  out.result = {m, period, method, guard};
  return out;
}

PeriodResult pisano_period(u64 m, u64 seed) {
  return pisano_breakdown(m, seed).result;
}

PeriodResult lucas_period(u64 m, u64 seed) {
  const PeriodResult fib = pisano_period(m, seed);
  if (m == 1) return {1, 1, Method::LucasDivisorSearch};

  const ResiduePair start{2 % m, 1 % m, m};
  const numth::DivisorSet candidates =
      numth::divisors(numth::factorize(fib.period, seed));
  for (u64 d : candidates.values) {
    if (fibmod::lucas_pair(d, m) == start) {
      return {m, d, Method::LucasDivisorSearch, fib.lift_guard_triggered};
    }
  }
  // Unreachable while h(m) is a genuine period of the pair map.
  return fibmod::lucas_brute_period(m);
}

}  // namespace period
}  // namespace pisano
