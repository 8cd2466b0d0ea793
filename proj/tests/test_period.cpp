#include <doctest.h>

#include <random>
#include <vector>

#include "oracles.hpp"
#include "pisano/error.hpp"
#include "pisano/fibmod.hpp"
#include "pisano/period.hpp"

using namespace pisano;
using namespace pisano::period;

TEST_CASE("classify_prime") {
  CHECK(classify_prime(7) == PrimeClass::Irreducible);
  CHECK(classify_prime(11) == PrimeClass::Split);
  CHECK(classify_prime(5) == PrimeClass::SpecialFive);
  CHECK(classify_prime(2) == PrimeClass::SpecialTwo);
  CHECK(classify_prime(3) == PrimeClass::Irreducible);
  CHECK(classify_prime(19) == PrimeClass::Split);
  CHECK_THROWS_AS((void)classify_prime(9), DomainError);
  CHECK_THROWS_AS((void)classify_prime(1), DomainError);

  CHECK(period_bound(7) == 16);
  CHECK(period_bound(11) == 10);
  CHECK(period_bound(5) == 20);
  CHECK(period_bound(2) == 3);
}

TEST_CASE("prime_period examples") {
  CHECK(prime_period(7).period == 16);
  CHECK(prime_period(11).period == 10);
  CHECK(prime_period(29).period == 14);
  CHECK(prime_period(47).period == 32);
  CHECK(prime_period(2).period == 3);
  CHECK(prime_period(5).period == 20);
  CHECK(prime_period(7).method == Method::PrimeDivisorSearch);
  CHECK_THROWS_AS((void)prime_period(15), DomainError);
}

TEST_CASE("prime_power_period examples") {
  CHECK(prime_power_period(2, 5).period == 48);
  CHECK(prime_power_period(3, 3).period == 72);
  CHECK(prime_power_period(5, 2).period == 100);
  CHECK(prime_power_period(7, 2).period == 112);
  CHECK(prime_power_period(7, 2).method == Method::PrimePowerLift);
  CHECK_FALSE(prime_power_period(7, 2).lift_guard_triggered);
  CHECK(prime_power_period(2, 62).period == 3 * (u64{1} << 61));
  CHECK_THROWS_AS((void)prime_power_period(3, 0), DomainError);
  CHECK_THROWS_AS((void)prime_power_period(4, 2), DomainError);
  CHECK_THROWS_AS((void)prime_power_period(2, 63), DomainError);
  CHECK_THROWS_AS((void)prime_power_period(3, 41), OverflowError);
}

TEST_CASE("lift consistency: exponent one is the prime period") {
  for (u64 p = 2; p <= 10000; ++p) {
    if (!numth::is_prime(p)) continue;
    REQUIRE(prime_power_period(p, 1).period == prime_period(p).period);
  }
}

TEST_CASE("pisano_period examples") {
  CHECK(pisano_period(10).period == 60);
  CHECK(pisano_period(10).method == Method::LcmComposition);
  CHECK(pisano_period(250).period == 1500);
  CHECK(pisano_period(1).period == 1);
  CHECK(pisano_period(832040).period == 60);
  CHECK(pisano_period(7).method == Method::PrimeDivisorSearch);
  CHECK(pisano_period(49).method == Method::PrimePowerLift);
  CHECK_THROWS_AS((void)pisano_period(0), DomainError);
  CHECK_THROWS_AS((void)pisano_period(u64{1} << 63), DomainError);

  const auto b = pisano_breakdown(60);
  CHECK(b.result.period == 120);
  REQUIRE(b.components.size() == 3);
  CHECK(b.components[0].period == 6);
  CHECK(b.components[1].period == 8);
  CHECK(b.components[2].period == 20);
}

TEST_CASE("oracle equivalence up to 10^4") {
  for (u64 m = 1; m <= 10000; ++m) {
    REQUIRE(pisano_period(m).period == fibmod::brute_period(m).period);
  }
}

TEST_CASE("oracle equivalence on 500 random moduli up to 10^6") {
  std::mt19937_64 rng(2024);
  for (int i = 0; i < 500; ++i) {
    const u64 m = rng() % 1000000 + 1;
    REQUIRE(pisano_period(m, rng()).period == fibmod::brute_period(m).period);
  }
}

TEST_CASE("prime period divides the class bound") {
  for (u64 p = 3; p <= 100000; ++p) {
    if (p == 5 || !numth::is_prime(p)) continue;
    const u64 h = prime_period(p).period;
    if (classify_prime(p) == PrimeClass::Irreducible) {
      REQUIRE((2 * p + 2) % h == 0);
    } else {
      REQUIRE((p - 1) % h == 0);
    }
  }
}

TEST_CASE("parity and divisor monotonicity") {
  std::vector<u64> h(5001);
  for (u64 m = 1; m <= 5000; ++m) h[m] = pisano_period(m).period;
  CHECK(h[2] == 3);
  for (u64 m = 3; m <= 5000; ++m) REQUIRE(h[m] % 2 == 0);
  for (u64 n = 1; n <= 5000; ++n) {
    for (u64 m = 2 * n; m <= 5000; m += n) REQUIRE(h[m] % h[n] == 0);
  }
}

TEST_CASE("large moduli stay on the theorem path") {
  // Each of these would take ~10^18 oracle steps.
  CHECK(pisano_period(1000000000000000003ULL).period % 2 == 0);
  const u64 big = u64{1000000000000000000ULL};  // 2^18 * 5^18
  CHECK(pisano_period(big).period == numth::lcm(3 * (u64{1} << 17), 4 * numth::checked_pow(5, 18)));
  const u64 p = 999999999999999989ULL;
  const PeriodResult r = pisano_period(p);
  CHECK(fibmod::fib_pair(r.period, p) == ResiduePair{0, 1, p});
}

TEST_CASE("lucas_period") {
  CHECK(lucas_period(5).period == 4);
  CHECK(lucas_period(6).period == 24);
  CHECK(lucas_period(1).period == 1);
  CHECK(lucas_period(5).method == Method::LucasDivisorSearch);
  for (u64 m = 1; m <= 3000; ++m) {
    const u64 l = lucas_period(m).period;
    REQUIRE(l == fibmod::lucas_brute_period(m).period);
    REQUIRE(pisano_period(m).period % l == 0);
  }
}
