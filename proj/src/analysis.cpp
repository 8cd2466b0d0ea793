#include "pisano/analysis.hpp"

#include <algorithm>
#include <cstdio>
#include <optional>
#include <string>
#include <tuple>

#include "parallel.hpp"
#include "pisano/error.hpp"

namespace pisano::analysis {
namespace {

void require_limit(u64 limit, const char* op) {
  if (limit == 0) throw DomainError(std::string(op) + ": limit must be >= 1");
  if (limit > kMaxModulus) {
    throw DomainError(std::string(op) + ": limit exceeds 2^63 - 1");
  }
}

unsigned class_bit(PrimeClass c) { return 1U << static_cast<unsigned>(c); }

unsigned class_mask_of(const numth::Factorization& f) {
  unsigned mask = 0;
  for (const auto& pp : f.factors) mask |= class_bit(period::classify_prime(pp.prime));
  return mask;
}

ScanRecord record_from(const period::PeriodBreakdown& b) {
  ScanRecord r;
  r.m = b.result.modulus;
  r.period = b.result.period;
  r.method = b.result.method;
  r.class_mask = class_mask_of(b.factorization);
  if (b.result.lift_guard_triggered) {
    r.flags |= static_cast<unsigned>(Flag::LiftGuardTriggered);
  }
  return r;
}

// Marks strictly increasing running maxima and returns the overall maximum
// and every m attaining it.
std::pair<Ratio, std::vector<u64>> mark_maxima(std::vector<ScanRecord>& records) {
  Ratio best{0, 1};
  std::vector<u64> at;
  for (ScanRecord& r : records) {
    const Ratio ratio = r.ratio();
    if (best < ratio) {
      best = ratio;
      at.clear();
      r.flags |= static_cast<unsigned>(Flag::NewMaximum);
    }
    if (best.same_value(ratio)) at.push_back(r.m);
  }
  return {best, at};
}

}  // namespace

std::vector<std::string> flag_names(unsigned flags) {
  static constexpr std::pair<Flag, const char*> kNames[] = {
      {Flag::RatioSix, "RatioSix"},
      {Flag::NewMaximum, "NewMaximum"},
      {Flag::FilterDisagreement, "FilterDisagreement"},
      {Flag::LiftGuardTriggered, "LiftGuardTriggered"},
  };
  std::vector<std::string> out;
  for (const auto& [flag, name] : kNames) {
    if (flags & static_cast<unsigned>(flag)) out.emplace_back(name);
  }
  return out;
}

std::string Ratio::to_string() const {
  if (den != 0 && num % den == 0) return std::to_string(num / den);
  char buf[64];
  std::snprintf(buf, sizeof buf, " (%.6f)",
                static_cast<double>(num) / static_cast<double>(den));
  return std::to_string(num) + "/" + std::to_string(den) + buf;
}

std::vector<PrimeClass> classes_in(unsigned class_mask) {
  std::vector<PrimeClass> out;
  for (PrimeClass c : {PrimeClass::SpecialTwo, PrimeClass::SpecialFive,
                       PrimeClass::Split, PrimeClass::Irreducible}) {
    if (class_mask & class_bit(c)) out.push_back(c);
  }
  return out;
}

bool LucasScanSummary::ok() const {
  const Ratio four{4, 1};
  if (limit >= 6) {
    return max_ratio.same_value(four) && max_at == std::vector<u64>{6};
  }
  return max_ratio < four;
}

double FilterScanSummary::agreement_rate() const {
  const u64 total = reports();
  return total == 0 ? 1.0 : static_cast<double>(agreements) / total;
}

RatioScanSummary ratio_scan(u64 limit, const RecordSink& emit,
                            const ScanOptions& options) {
  require_limit(limit, "ratio_scan");
  std::vector<ScanRecord> records = detail::parallel_map<ScanRecord>(
      1, limit, options.threads, [&](u64 m) {
        ScanRecord r = record_from(period::pisano_breakdown(m, options.seed));
        if (r.period == static_cast<u128>(6) * m) {
          r.flags |= static_cast<unsigned>(Flag::RatioSix);
        }
        if (m != 2 && m != 5 && numth::is_prime(m) &&
            !theorems::filter_period(m, options.seed).agrees) {
          r.flags |= static_cast<unsigned>(Flag::FilterDisagreement);
        }
        return r;
      });

  RatioScanSummary s;
  s.limit = limit;
  std::tie(s.max_ratio, s.max_at) = mark_maxima(records);
  for (u64 m = 10; m <= limit; m *= 5) {
    s.expected_equality_set.push_back(m);
    if (m > limit / 5) break;
  }
  for (const ScanRecord& r : records) {
    if (static_cast<u128>(r.period) > static_cast<u128>(6) * r.m) {
      s.bound_violations.push_back(r.m);
    }
    if (r.has(Flag::RatioSix)) s.equality_set.push_back(r.m);
    if (r.has(Flag::FilterDisagreement)) ++s.filter_disagreements;
    if (r.has(Flag::LiftGuardTriggered)) ++s.lift_guard_hits;
    ++s.records;
    if (emit) emit(r);
  }
  return s;
}

IrreducibleScanSummary irreducible_product_scan(u64 limit,
                                                const RecordSink& emit,
                                                const ScanOptions& options) {
  require_limit(limit, "irreducible_product_scan");
  const unsigned irreducible_only = class_bit(PrimeClass::Irreducible);
  std::vector<std::optional<ScanRecord>> rows =
      detail::parallel_map<std::optional<ScanRecord>>(
          2, limit, options.threads, [&](u64 m) -> std::optional<ScanRecord> {
            if (m % 2 == 0) return std::nullopt;
            const numth::Factorization f = numth::factorize(m, options.seed);
            if (class_mask_of(f) != irreducible_only) return std::nullopt;
            return record_from(period::pisano_breakdown(m, options.seed));
          });

  IrreducibleScanSummary s;
  s.limit = limit;
  s.max_ratio = {0, 1};
  for (const auto& row : rows) {
    if (!row) continue;
    ScanRecord r = *row;
    if (s.max_ratio < r.ratio()) {
      s.max_ratio = r.ratio();
      s.max_at = r.m;
      r.flags |= static_cast<unsigned>(Flag::NewMaximum);
    }
    // ratio < 4 exactly: 4m - period > 0
    if (static_cast<u128>(4) * r.m <= r.period) s.violations.push_back(r.m);
    ++s.checked;
    if (emit) emit(r);
  }
  return s;
}

LucasScanSummary lucas_ratio_scan(u64 limit, const RecordSink& emit,
                                  const ScanOptions& options) {
  require_limit(limit, "lucas_ratio_scan");
  if (limit > kLucasScanCap) {
    throw DomainError("lucas_ratio_scan: limit above cap " +
                      std::to_string(kLucasScanCap));
  }
  std::vector<ScanRecord> records = detail::parallel_map<ScanRecord>(
      1, limit, options.threads, [&](u64 m) {
        const PeriodResult lucas = period::lucas_period(m, options.seed);
        ScanRecord r;
        r.m = m;
        r.period = lucas.period;
        r.method = lucas.method;
        if (m > 1) r.class_mask = class_mask_of(numth::factorize(m, options.seed));
        if (lucas.lift_guard_triggered) {
          r.flags |= static_cast<unsigned>(Flag::LiftGuardTriggered);
        }
        return r;
      });

  LucasScanSummary s;
  s.limit = limit;
  std::tie(s.max_ratio, s.max_at) = mark_maxima(records);
  for (const ScanRecord& r : records) {
    ++s.records;
    if (emit) emit(r);
  }
  return s;
}

FilterScanSummary filter_agreement_scan(u64 prime_limit, const FilterSink& emit,
                                        const ScanOptions& options) {
  if (prime_limit > kMaxModulus) {
    throw DomainError("filter_agreement_scan: limit exceeds 2^63 - 1");
  }
  FilterScanSummary s;
  s.prime_limit = prime_limit;
  if (prime_limit < 3) return s;

  auto reports = detail::parallel_map<std::optional<theorems::FilterReport>>(
      3, prime_limit, options.threads,
      [&](u64 p) -> std::optional<theorems::FilterReport> {
        if (p == 5 || !numth::is_prime(p)) return std::nullopt;
        return theorems::filter_period(p, options.seed);
      });

  for (const auto& report : reports) {
    if (!report) continue;
    if (report->prime_class == PrimeClass::Irreducible) {
      ++s.irreducible_reports;
    } else {
      ++s.split_reports;
    }
    if (report->agrees) {
      ++s.agreements;
    } else {
      s.disagreements.push_back(*report);
    }
    const auto& divs = report->all_divisors.values;
    if (!std::binary_search(divs.begin(), divs.end(), report->true_period)) {
      s.membership_failures.push_back(report->prime);
    }
    if (emit) emit(*report);
  }
  return s;
}

WallScanSummary wall_property_scan(u64 limit, const WallSink& emit,
                                   const ScanOptions& options) {
  require_limit(limit, "wall_property_scan");
  const std::vector<u64> h = detail::parallel_map<u64>(
      1, limit, options.threads,
      [&](u64 m) { return period::pisano_period(m, options.seed).period; });
  auto period_of = [&](u64 m) { return h[m - 1]; };

  WallScanSummary s;
  s.limit = limit;
  for (u64 m = 3; m <= limit; ++m) {
    ++s.parity_checked;
    if (period_of(m) % 2 != 0) {
      s.violations.push_back({WallViolation::Kind::Parity, m, m, period_of(m),
                              period_of(m)});
    }
  }
  for (u64 n = 1; n <= limit / 2; ++n) {
    for (u64 m = 2 * n; m <= limit; m += n) {
      ++s.pairs_checked;
      if (period_of(m) % period_of(n) != 0) {
        s.violations.push_back({WallViolation::Kind::Divisibility, n, m,
                                period_of(n), period_of(m)});
      }
    }
  }
  std::stable_sort(s.violations.begin(), s.violations.end(),
                   [](const WallViolation& a, const WallViolation& b) {
                     return std::tie(a.m, a.n) < std::tie(b.m, b.n);
                   });
  if (emit) {
    for (const WallViolation& v : s.violations) emit(v);
  }
  return s;
}

}  // namespace pisano::analysis
