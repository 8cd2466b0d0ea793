#pragma once

// Slow, obviously-correct reference implementations. None of these share
// code with the library.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <utility>
#include <vector>

namespace oracle {

using u64 = std::uint64_t;
using boost::multiprecision::cpp_int;

inline bool trial_is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

inline std::vector<std::pair<u64, unsigned>> trial_factor(u64 n) {
  std::vector<std::pair<u64, unsigned>> out;
  for (u64 d = 2; d * d <= n; ++d) {
    unsigned e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    if (e) out.emplace_back(d, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

inline std::vector<u64> scan_divisors(u64 n) {
  std::vector<u64> out;
  for (u64 d = 1; d <= n; ++d) {
    if (n % d == 0) out.push_back(d);
  }
  return out;
}

inline u64 big_mulmod(u64 a, u64 b, u64 m) {
  const cpp_int product = cpp_int(a) * cpp_int(b);
  return static_cast<u64>(product % m);
}

inline u64 big_powmod(u64 a, u64 e, u64 m) {
  return static_cast<u64>(boost::multiprecision::powm(cpp_int(a), cpp_int(e), cpp_int(m)));
}

inline std::vector<u64> scan_square_roots(u64 a, u64 p) {
  std::vector<u64> out;
  for (u64 x = 0; x < p; ++x) {
    if (x * x % p == a) out.push_back(x);
  }
  return out;
}

inline u64 iterate_order(u64 g, u64 p) {
  u64 x = g % p;
  u64 k = 1;
  while (x != 1) {
    x = x * g % p;
    ++k;
  }
  return k;
}

// (X_n, X_{n+1}) mod m by stepping the recurrence n times.
inline std::pair<u64, u64> iterate_sequence(u64 n, u64 m, u64 x0, u64 x1) {
  u64 a = x0 % m;
  u64 b = x1 % m;
  for (u64 i = 0; i < n; ++i) {
    const u64 c = (a + b) % m;
    a = b;
    b = c;
  }
  return {a, b};
}

// (F_n, F_{n+1}) mod m by powering [[1,1],[1,0]] with big integers.
inline std::pair<u64, u64> matrix_fib(u64 n, u64 m) {
  cpp_int r00 = 1, r01 = 0, r10 = 0, r11 = 1;
  cpp_int b00 = 1, b01 = 1, b10 = 1, b11 = 0;
  const cpp_int mod = m;
  while (n) {
    if (n & 1) {
      const cpp_int t00 = (r00 * b00 + r01 * b10) % mod;
      const cpp_int t01 = (r00 * b01 + r01 * b11) % mod;
      const cpp_int t10 = (r10 * b00 + r11 * b10) % mod;
      const cpp_int t11 = (r10 * b01 + r11 * b11) % mod;
      r00 = t00; r01 = t01; r10 = t10; r11 = t11;
    }
    const cpp_int s00 = (b00 * b00 + b01 * b10) % mod;
    const cpp_int s01 = (b00 * b01 + b01 * b11) % mod;
    const cpp_int s10 = (b10 * b00 + b11 * b10) % mod;
    const cpp_int s11 = (b10 * b01 + b11 * b11) % mod;
    b00 = s00; b01 = s01; b10 = s10; b11 = s11;
    n >>= 1;
  }
  // M^n = [[F_{n+1}, F_n], [F_n, F_{n-1}]]
  return {static_cast<u64>(r01 % mod), static_cast<u64>(r00 % mod)};
}

}  // namespace oracle
