#include "pisano/theorems.hpp"

#include <string>

#include "pisano/error.hpp"

namespace pisano::theorems {
namespace {

bool divides(u64 d, u64 n) { return n % d == 0; }

void require_class(u64 p, PrimeClass expected, const char* op) {
  const PrimeClass actual = period::classify_prime(p);
  if (actual != expected) {
    throw DomainError(std::string(op) + ": " + std::to_string(p) + " is " +
                      std::string(to_string(actual)) + ", expected " +
                      std::string(to_string(expected)));
  }
}

FilterReport build_report(u64 p, PrimeClass cls, numth::DivisorSet all,
                          std::vector<u64> surviving, u64 seed) {
  FilterReport report;
  report.prime = p;
  report.prime_class = cls;
  report.bound = all.source;
  report.all_divisors = std::move(all);
  report.surviving = std::move(surviving);
  for (u64 d : report.surviving) {
    if (fibmod::fib_pair(d, p).hi == 1) {
      report.paper_answer = d;
      break;
    }
  }
  report.true_period = period::prime_period(p, seed).period;
  report.agrees = report.paper_answer == report.true_period;
  return report;
}

numth::DivisorSet bound_divisors(u64 p, u64 seed) {
  return numth::divisors(numth::factorize(period::period_bound(p), seed));
}

std::vector<u64> irreducible_survivors(u64 p, const numth::DivisorSet& all) {
  // p < 2^63, so p(p+1)/2 and 3(p-1) need 128 bits.
  const u128 half_product = static_cast<u128>(p) * (p + 1) / 2;
  const u128 triple = static_cast<u128>(3) * (p - 1);
  std::vector<u64> out;
  for (u64 d : all.values) {
    if (half_product % d == 0) continue;  // (a)
    if (divides(d, p + 1)) continue;      // (b)
    if (triple % d == 0) continue;        // (c)
    out.push_back(d);
  }
  return out;
}

std::vector<u64> split_survivors(u64 p, const numth::DivisorSet& all) {
  std::vector<u64> out;
  for (u64 d : all.values) {
    if (divides(d, p + 1)) continue;  // (a)
    if (d % 2 != 0) continue;         // (b)
    out.push_back(d);
  }
  return out;
}

}  // namespace

std::vector<u64> theorem1_candidates(u64 p, u64 seed) {
  require_class(p, PrimeClass::Irreducible, "theorem1_candidates");
  return irreducible_survivors(p, bound_divisors(p, seed));
}

FilterReport theorem1_period(u64 p, u64 seed) {
  require_class(p, PrimeClass::Irreducible, "theorem1_period");
  numth::DivisorSet all = bound_divisors(p, seed);
  std::vector<u64> surviving = irreducible_survivors(p, all);
  return build_report(p, PrimeClass::Irreducible, std::move(all),
                      std::move(surviving), seed);
}

std::vector<u64> theorem2_candidates(u64 p, u64 seed) {
  require_class(p, PrimeClass::Split, "theorem2_candidates");
  return split_survivors(p, bound_divisors(p, seed));
}

FilterReport theorem2_period(u64 p, u64 seed) {
  require_class(p, PrimeClass::Split, "theorem2_period");
  numth::DivisorSet all = bound_divisors(p, seed);
  std::vector<u64> surviving = split_survivors(p, all);
  return build_report(p, PrimeClass::Split, std::move(all),
                      std::move(surviving), seed);
}

FilterReport filter_period(u64 p, u64 seed) {
  switch (period::classify_prime(p)) {
    case PrimeClass::Irreducible: return theorem1_period(p, seed);
    case PrimeClass::Split: return theorem2_period(p, seed);
    default:
      throw DomainError("filter_period: no divisor filter for " +
                        std::to_string(p));
  }
}

FprResult fibonacci_primitive_root(u64 p, u64 seed) {
  const PrimeClass cls = period::classify_prime(p);
  if (cls != PrimeClass::Split && cls != PrimeClass::SpecialFive) {
    throw DomainError("fibonacci_primitive_root: x^2 - x - 1 has no roots modulo " +
                      std::to_string(p));
  }
  FprResult out;
  out.prime = p;

  const auto sqrt5 = numth::mod_sqrt(5 % p, p);
  if (!sqrt5) {
    throw std::logic_error("fibonacci_primitive_root: 5 is not a square modulo " +
                           std::to_string(p));
  }
  const u64 half = numth::mod_inverse(2, p);
  const auto root_from = [&](u64 s) {
    const u64 one_plus = s == p - 1 ? 0 : s + 1;
    return numth::mulmod(one_plus, half, p);
  };
  out.roots.push_back(root_from(sqrt5->first));
  if (sqrt5->first != sqrt5->second) out.roots.push_back(root_from(sqrt5->second));

  const numth::Factorization group = numth::factorize(p - 1, seed);
  for (u64 g : out.roots) {
    const u64 order = numth::multiplicative_order(g, p, group);
    out.root_orders.push_back(order);
    if (order == p - 1) out.primitive_roots_among_them.push_back(g);
  }
  out.has_fpr = !out.primitive_roots_among_them.empty();
  return out;
}

u64 fibonacci_exact(u64 n) {
  if (n > kMaxFibIndex) {
    throw OverflowError("F_" + std::to_string(n) + " exceeds 2^63 - 1");
  }
  u64 a = 0;
  u64 b = 1;
  for (u64 i = 0; i < n; ++i) {
    const u64 next = a + b;
    a = b;
    b = next;
  }
  return a;
}

FibIndexResult fib_index_period(u64 index, u64 seed) {
  if (index <= 3) {
    throw DomainError("fib_index_period: index must exceed 3, got " +
                      std::to_string(index));
  }
  FibIndexResult out;
  out.index = index;
  out.fibonacci = fibonacci_exact(index);
  out.computed = period::pisano_period(out.fibonacci, seed);
  out.computed.method = Method::FibIndexLaw;
  out.predicted = index % 2 == 0 ? 2 * index : 4 * index;
  return out;
}

}  // namespace pisano::theorems
