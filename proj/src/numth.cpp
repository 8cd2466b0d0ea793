#include "pisano/numth.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <random>
#include <string>

#include "pisano/error.hpp"

namespace pisano::numth {
namespace {

constexpr u64 kTrialBound = 1024;

constexpr auto kSmallPrimes = [] {
  std::array<bool, kTrialBound> composite{};
  std::array<u64, 172> primes{};  // pi(1024) == 172
  std::size_t count = 0;
  for (u64 i = 2; i < kTrialBound; ++i) {
    if (composite[i]) continue;
    primes[count++] = i;
    for (u64 j = i * i; j < kTrialBound; j += i) composite[j] = true;
  }
  return primes;
}();

u64 addmod(u64 a, u64 b, u64 m) {
  // a, b < m; a + b may exceed 2^64 only when m > 2^63.
  return a >= m - b ? a - (m - b) : a + b;
}

u64 absdiff(u64 a, u64 b) { return a > b ? a - b : b - a; }

bool miller_rabin_witness(u64 n, u64 base, u64 odd_part, int twos) {
  u64 x = powmod(base % n, odd_part, n);
  if (x == 1 || x == n - 1) return false;
  for (int i = 1; i < twos; ++i) {
    x = mulmod(x, x, n);
    if (x == n - 1) return false;
  }
  return true;
}

// Brent's cycle detection with batched gcds. n must be odd and composite.
u64 pollard_brent(u64 n, std::mt19937_64& rng) {
  constexpr u64 kBatch = 128;
  while (true) {
    const u64 c = rng() % (n - 1) + 1;
    auto step = [&](u64 v) { return addmod(mulmod(v, v, n), c, n); };

    u64 y = rng() % n;
    u64 x = y;
    u64 saved = y;
    u64 q = 1;
    u64 g = 1;
    for (u64 r = 1; g == 1; r <<= 1) {
      x = y;
      for (u64 i = 0; i < r; ++i) y = step(y);
      for (u64 k = 0; k < r && g == 1; k += kBatch) {
        saved = y;
        const u64 limit = std::min(kBatch, r - k);
        for (u64 i = 0; i < limit; ++i) {
          y = step(y);
          q = mulmod(q, absdiff(x, y), n);
        }
        g = gcd(q, n);
      }
    }
    if (g == n) {
      // The batch overshot; replay it one step at a time.
      do {
        saved = step(saved);
        g = gcd(absdiff(x, saved), n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

}  // namespace

u64 Factorization::value() const {
  u64 result = 1;
  for (const auto& [p, e] : factors) result = checked_mul(result, checked_pow(p, e));
  return result;
}

u64 mulmod(u64 a, u64 b, u64 m) {
  if (m == 0) throw DomainError("mulmod: modulus must be positive");
  return static_cast<u64>(static_cast<u128>(a) * b % m);
}

u64 powmod(u64 a, u64 e, u64 m) {
  if (m == 0) throw DomainError("powmod: modulus must be positive");
  u64 result = 1 % m;
  a %= m;
  while (e != 0) {
    if (e & 1) result = mulmod(result, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return result;
}

u64 gcd(u64 a, u64 b) {
  while (b != 0) {
    a %= b;
    std::swap(a, b);
  }
  return a;
}

u64 lcm(u64 a, u64 b) {
  if (a == 0 || b == 0) return 0;
  return checked_mul(a / gcd(a, b), b);
}

u64 checked_mul(u64 a, u64 b) {
  u64 out = 0;
  if (__builtin_mul_overflow(a, b, &out)) {
    throw OverflowError("product " + std::to_string(a) + " * " +
                        std::to_string(b) + " exceeds 64 bits");
  }
  return out;
}

u64 checked_pow(u64 base, unsigned exponent) {
  u64 result = 1;
  for (unsigned i = 0; i < exponent; ++i) result = checked_mul(result, base);
  return result;
}

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 p : kSmallPrimes) {
    if (n % p == 0) return n == p;
  }
  if (n < kTrialBound * kTrialBound) return true;

  const int twos = std::countr_zero(n - 1);
  const u64 odd_part = (n - 1) >> twos;
  // Jim Sinclair's base set, deterministic below 2^64.
  for (u64 base : {2ULL, 325ULL, 9375ULL, 28178ULL, 450775ULL, 9780504ULL,
                   1795265022ULL}) {
    if (base % n == 0) continue;
    if (miller_rabin_witness(n, base, odd_part, twos)) return false;
  }
  return true;
}

Factorization factorize(u64 n, u64 seed) {
  if (n < 2) {
    throw DomainError("factorize: n must be at least 2, got " +
                      std::to_string(n));
  }
  std::vector<u64> primes;
  for (u64 p : kSmallPrimes) {
    if (p * p > n) break;
    while (n % p == 0) {
      primes.push_back(p);
      n /= p;
    }
  }

  std::mt19937_64 rng(seed);
  std::vector<u64> pending;
  if (n > 1) pending.push_back(n);
  while (!pending.empty()) {
    const u64 v = pending.back();
    pending.pop_back();
    if (v < kTrialBound * kTrialBound || is_prime(v)) {
      // Every prime below kTrialBound has already been divided out, so a
      // cofactor below its square is prime.
      primes.push_back(v);
      continue;
    }
    const u64 d = pollard_brent(v, rng);
    pending.push_back(d);
    pending.push_back(v / d);
  }

  std::sort(primes.begin(), primes.end());
  Factorization f;
  for (u64 p : primes) {
    if (!f.factors.empty() && f.factors.back().prime == p) {
      ++f.factors.back().exponent;
    } else {
      f.factors.push_back({p, 1});
    }
  }
  return f;
}

DivisorSet divisors(const Factorization& f) {
  DivisorSet out;
  out.source = f.value();
  out.values = {1};
  for (const auto& [p, e] : f.factors) {
    const std::size_t base_count = out.values.size();
    u64 power = 1;
    for (unsigned i = 0; i < e; ++i) {
      power *= p;
      for (std::size_t j = 0; j < base_count; ++j) {
        out.values.push_back(out.values[j] * power);
      }
    }
  }
  std::sort(out.values.begin(), out.values.end());
  return out;
}

u64 mod_inverse(u64 a, u64 m) {
  if (m == 0) throw DomainError("mod_inverse: modulus must be positive");
  __int128 t = 0, new_t = 1;
  __int128 r = m, new_r = a % m;
  while (new_r != 0) {
    const __int128 q = r / new_r;
    t = std::exchange(new_t, t - q * new_t);
    r = std::exchange(new_r, r - q * new_r);
  }
  if (r != 1) {
    throw DomainError("mod_inverse: " + std::to_string(a) +
                      " is not invertible modulo " + std::to_string(m));
  }
  if (t < 0) t += m;
  return static_cast<u64>(t);
}

std::optional<std::pair<u64, u64>> mod_sqrt(u64 a, u64 p) {
  if (p == 2 || !is_prime(p)) {
    throw DomainError("mod_sqrt: modulus must be an odd prime, got " +
                      std::to_string(p));
  }
  if (a >= p) {
    throw DomainError("mod_sqrt: residue " + std::to_string(a) +
                      " not reduced modulo " + std::to_string(p));
  }
  if (a == 0) return std::pair<u64, u64>{0, 0};
  if (powmod(a, (p - 1) / 2, p) != 1) return std::nullopt;

  u64 root = 0;
  if (p % 4 == 3) {
    root = powmod(a, (p + 1) / 4, p);
  } else {
    // Tonelli-Shanks: p - 1 = q * 2^s with q odd.
    const int s = std::countr_zero(p - 1);
    const u64 q = (p - 1) >> s;
    u64 z = 2;
    while (powmod(z, (p - 1) / 2, p) != p - 1) ++z;

    int m = s;
    u64 c = powmod(z, q, p);
    u64 t = powmod(a, q, p);
    root = powmod(a, (q + 1) / 2, p);
    while (t != 1) {
      int i = 0;
      for (u64 t2 = t; t2 != 1; t2 = mulmod(t2, t2, p)) ++i;
      u64 b = c;
      for (int j = 0; j < m - i - 1; ++j) b = mulmod(b, b, p);
      m = i;
      c = mulmod(b, b, p);
      t = mulmod(t, c, p);
      root = mulmod(root, b, p);
    }
  }
  const u64 other = p - root;
  return std::pair<u64, u64>{std::min(root, other), std::max(root, other)};
}

u64 multiplicative_order(u64 g, u64 p, const Factorization& fact_p_minus_1) {
  if (p < 2) throw DomainError("multiplicative_order: modulus must be prime");
  g %= p;
  if (g == 0) {
    throw DomainError("multiplicative_order: 0 has no order modulo " +
                      std::to_string(p));
  }
  if (p == 2) return 1;
  if (fact_p_minus_1.value() != p - 1) {
    throw DomainError("multiplicative_order: factorization does not match p - 1");
  }
  u64 order = p - 1;
  for (const auto& [q, e] : fact_p_minus_1.factors) {
    for (unsigned i = 0; i < e && powmod(g, order / q, p) == 1; ++i) order /= q;
  }
  return order;
}

}  // namespace pisano::numth
