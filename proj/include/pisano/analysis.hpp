#pragma once

// Range scans over h(m): the 6m bound and its equality set, the ratio bound
// for products of odd irreducible primes, the Lucas maximum, the divisor
// filter diagnostic and the parity/divisibility properties.
//
// Work is spread over threads; records reach the sink in ascending m order
// regardless of thread count.

#include <functional>
#include <string>
#include <vector>

#include "pisano/fibmod.hpp"
#include "pisano/numth.hpp"
#include "pisano/period.hpp"
#include "pisano/theorems.hpp"

namespace pisano::analysis {

enum class Flag : unsigned {
  RatioSix = 1U << 0,
  NewMaximum = 1U << 1,
  FilterDisagreement = 1U << 2,
  LiftGuardTriggered = 1U << 3,
};

[[nodiscard]] std::vector<std::string> flag_names(unsigned flags);

// Exact rational, never reduced: num = period, den = m.
struct Ratio {
  u64 num = 0;
  u64 den = 1;

  [[nodiscard]] bool operator<(const Ratio& o) const {
    return static_cast<u128>(num) * o.den < static_cast<u128>(o.num) * den;
  }
  [[nodiscard]] bool same_value(const Ratio& o) const {
    return static_cast<u128>(num) * o.den == static_cast<u128>(o.num) * den;
  }
  // "6", or "8/3 (2.666667)" when not integral.
  [[nodiscard]] std::string to_string() const;
};

struct ScanRecord {
  u64 m = 1;
  u64 period = 1;
  Method method = Method::LcmComposition;
  unsigned class_mask = 0;  // bit i set when PrimeClass(i) divides m
  unsigned flags = 0;

  [[nodiscard]] Ratio ratio() const { return {period, m}; }
  [[nodiscard]] bool has(Flag f) const {
    return (flags & static_cast<unsigned>(f)) != 0;
  }
};

[[nodiscard]] std::vector<PrimeClass> classes_in(unsigned class_mask);

using RecordSink = std::function<void(const ScanRecord&)>;
using FilterSink = std::function<void(const theorems::FilterReport&)>;

struct ScanOptions {
  unsigned threads = 0;  // 0 = hardware concurrency
  u64 seed = kDefaultSeed;
};

struct RatioScanSummary {
  u64 limit = 0;
  u64 records = 0;
  Ratio max_ratio;
  std::vector<u64> max_at;
  std::vector<u64> equality_set;           // m with h(m) == 6m
  std::vector<u64> expected_equality_set;  // 2 * 5^n <= limit
  std::vector<u64> bound_violations;       // m with h(m) > 6m
  u64 filter_disagreements = 0;
  u64 lift_guard_hits = 0;

  [[nodiscard]] bool ok() const {
    return bound_violations.empty() && equality_set == expected_equality_set &&
           records == limit;
  }
};

struct IrreducibleScanSummary {
  u64 limit = 0;
  u64 checked = 0;
  Ratio max_ratio;
  u64 max_at = 0;
  std::vector<u64> violations;  // h(m) >= 4m

  [[nodiscard]] bool ok() const { return violations.empty(); }
};

inline constexpr u64 kLucasScanCap = 1'000'000;

struct LucasScanSummary {
  u64 limit = 0;
  u64 records = 0;
  Ratio max_ratio;
  std::vector<u64> max_at;

  // Maximum 4 attained only at m = 6 once the range includes 6; below 4
  // otherwise.
  [[nodiscard]] bool ok() const;
};

struct FilterScanSummary {
  u64 prime_limit = 0;
  u64 irreducible_reports = 0;
  u64 split_reports = 0;
  u64 agreements = 0;
  std::vector<theorems::FilterReport> disagreements;
  std::vector<u64> membership_failures;  // true_period not among divisors

  [[nodiscard]] u64 reports() const {
    return irreducible_reports + split_reports;
  }
  [[nodiscard]] double agreement_rate() const;
  [[nodiscard]] bool ok() const { return membership_failures.empty(); }
};

struct WallViolation {
  enum class Kind { Parity, Divisibility };
  Kind kind = Kind::Parity;
  u64 n = 0;  // divisor (equals m for parity violations)
  u64 m = 0;
  u64 period_n = 0;
  u64 period_m = 0;
};

using WallSink = std::function<void(const WallViolation&)>;

struct WallScanSummary {
  u64 limit = 0;
  u64 parity_checked = 0;
  u64 pairs_checked = 0;
  std::vector<WallViolation> violations;

  [[nodiscard]] bool ok() const { return violations.empty(); }
};

[[nodiscard]] RatioScanSummary ratio_scan(u64 limit, const RecordSink& emit,
                                          const ScanOptions& options = {});

[[nodiscard]] IrreducibleScanSummary irreducible_product_scan(
    u64 limit, const RecordSink& emit, const ScanOptions& options = {});

[[nodiscard]] LucasScanSummary lucas_ratio_scan(u64 limit,
                                                const RecordSink& emit,
                                                const ScanOptions& options = {});

[[nodiscard]] FilterScanSummary filter_agreement_scan(
    u64 prime_limit, const FilterSink& emit, const ScanOptions& options = {});

[[nodiscard]] WallScanSummary wall_property_scan(u64 limit,
                                                 const WallSink& emit,
                                                 const ScanOptions& options = {});

}  // namespace pisano::analysis
