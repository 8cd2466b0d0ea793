#include "pisano/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "pisano/analysis.hpp"
#include "pisano/error.hpp"
#include "pisano/fibmod.hpp"
#include "pisano/period.hpp"
#include "pisano/report.hpp"
#include "pisano/theorems.hpp"

namespace pisano::cli {
namespace {

namespace fs = std::filesystem;
using report::Json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string join(const std::vector<u64>& values) {
  std::string out = "{";
  for (std::size_t i = 0; i < values.size(); ++i) {
    out += (i ? "," : "") + std::to_string(values[i]);
  }
  return out + "}";
}

std::string_view pass_fail(bool ok) { return ok ? "PASS" : "FAIL"; }

// --- period ---------------------------------------------------------------

struct PeriodArgs {
  u64 m = 0;
  bool lucas = false;
  bool json = false;
};

int cmd_period(const PeriodArgs& args, std::ostream& out) {
  if (args.m == 0) throw UsageError("period: m must be a positive integer");
  const period::PeriodBreakdown fib = period::pisano_breakdown(args.m);
  const PeriodResult result =
      args.lucas ? period::lucas_period(args.m) : fib.result;

  analysis::ScanRecord record;
  record.m = result.modulus;
  record.period = result.period;
  record.method = result.method;
  if (result.lift_guard_triggered) {
    record.flags |= static_cast<unsigned>(analysis::Flag::LiftGuardTriggered);
  }
  if (!args.lucas && static_cast<u128>(result.period) == static_cast<u128>(6) * args.m) {
    record.flags |= static_cast<unsigned>(analysis::Flag::RatioSix);
  }

  if (args.json) {
    Json j = report::to_json(record);
    j["sequence"] = args.lucas ? "lucas" : "fibonacci";
    j["factors"] = report::to_json(fib.factorization);
    out << j.dump() << '\n';
    return kSuccess;
  }
  out << (args.lucas ? "h_L(" : "h(") << args.m << ") = " << result.period
      << '\n';
  out << "method: " << to_string(result.method) << '\n';
  out << "factorization: " << report::render(fib.factorization) << '\n';
  out << "ratio: " << record.ratio().to_string() << '\n';
  return kSuccess;
}

// --- fib / classify / fpr / fib-index -------------------------------------

int cmd_fib(u64 n, u64 m, std::ostream& out) {
  const ResiduePair pair = fibmod::fib_pair(n, m);
  out << pair.lo << ' ' << pair.hi << '\n';
  return kSuccess;
}

int cmd_classify(u64 p, std::ostream& out) {
  const PrimeClass cls = period::classify_prime(p);
  const u64 bound = period::period_bound(p);
  out << to_string(cls) << " (";
  switch (cls) {
    case PrimeClass::SpecialTwo: out << "h = " << bound; break;
    case PrimeClass::SpecialFive: out << "h | p(p-1) = " << bound; break;
    case PrimeClass::Split: out << "h | p-1 = " << bound; break;
    case PrimeClass::Irreducible: out << "h | 2p+2 = " << bound; break;
  }
  out << ")\n";
  return kSuccess;
}

int cmd_fpr(u64 p, std::ostream& out) {
  const theorems::FprResult fpr = theorems::fibonacci_primitive_root(p);
  const u64 h = period::prime_period(p).period;
  out << "p = " << p << " (" << to_string(period::classify_prime(p)) << ")\n";
  for (std::size_t i = 0; i < fpr.roots.size(); ++i) {
    out << "root " << fpr.roots[i] << ": order " << fpr.root_orders[i]
        << (fpr.root_orders[i] == p - 1 ? ", primitive root" : "") << '\n';
  }
  out << "has_fpr: " << (fpr.has_fpr ? "yes" : "no") << '\n';
  out << "h(" << p << ") = " << h << ", p-1 = " << p - 1 << '\n';
  return kSuccess;
}

int cmd_fib_index(u64 index, std::ostream& out) {
  const theorems::FibIndexResult r = theorems::fib_index_period(index);
  out << "F_" << index << " = " << r.fibonacci << ": predicted " << r.predicted
      << ", computed " << r.computed.period << ", "
      << (r.matches() ? "OK" : "MISMATCH") << '\n';
  return r.matches() ? kSuccess : kAssertionFailure;
}

// --- scan -----------------------------------------------------------------

struct ScanArgs {
  u64 limit = 0;
  std::string suite = "ratio";
  std::optional<std::string> emit;
  std::optional<std::string> out;
  u64 seed = kDefaultSeed;
  unsigned threads = 0;
};

const std::vector<std::string> kSuites = {"ratio", "irreducible", "lucas",
                                          "filters", "wall"};

// Where one suite's report goes: nowhere, a file, or the result stream.
class ReportTarget {
 public:
  ReportTarget() = default;
  ReportTarget(std::ostream& stream, report::Format format) {
    stream_ = &stream;
    format_ = format;
  }
  ReportTarget(const fs::path& path, report::Format format) {
    file_ = std::make_unique<std::ofstream>(path, std::ios::binary);
    if (!*file_) throw DomainError("cannot write report to " + path.string());
    stream_ = file_.get();
    format_ = format;
  }

  std::unique_ptr<report::ReportWriter> writer(
      const std::vector<std::string>& columns) const {
    if (stream_ == nullptr) return nullptr;
    return std::make_unique<report::ReportWriter>(*stream_, format_, columns);
  }

  void check_written() const {
    if (file_ && !*file_) throw DomainError("failed while writing report");
  }

 private:
  std::unique_ptr<std::ofstream> file_;
  std::ostream* stream_ = nullptr;
  report::Format format_ = report::Format::Csv;
};

// `clamp_lucas` caps the Lucas range instead of rejecting it; used when the
// Lucas scan runs as part of --suite all.
bool run_suite(const std::string& suite, u64 limit, bool clamp_lucas,
               const analysis::ScanOptions& options, const ReportTarget& target,
               std::ostream& summary) {
  bool ok = true;
  if (suite == "ratio" || suite == "irreducible" || suite == "lucas") {
    auto writer = target.writer(report::scan_record_columns());
    analysis::RecordSink sink;
    if (writer) sink = [&](const analysis::ScanRecord& r) { writer->write(report::to_json(r)); };

    if (suite == "ratio") {
      const auto s = analysis::ratio_scan(limit, sink, options);
      ok = s.ok();
      summary << "ratio: m <= " << limit << ", " << s.records
              << " records, max ratio " << s.max_ratio.to_string() << " at "
              << join(s.max_at) << "; h(m) = 6m at " << join(s.equality_set)
              << " (expected " << join(s.expected_equality_set)
              << "); 6m bound violations: " << s.bound_violations.size()
              << "; filter disagreements: " << s.filter_disagreements
              << "; lift guard hits: " << s.lift_guard_hits << "; "
              << pass_fail(ok) << '\n';
    } else if (suite == "irreducible") {
      const auto s = analysis::irreducible_product_scan(limit, sink, options);
      ok = s.ok();
      summary << "irreducible: m <= " << limit << ", " << s.checked
              << " products of odd irreducible primes, max ratio "
              << s.max_ratio.to_string() << " at " << s.max_at
              << "; ratio >= 4 at " << join(s.violations) << "; "
              << pass_fail(ok) << '\n';
    } else {
      const u64 capped =
          clamp_lucas ? std::min(limit, analysis::kLucasScanCap) : limit;
      const auto s = analysis::lucas_ratio_scan(capped, sink, options);
      ok = s.ok();
      summary << "lucas: m <= " << capped << ", " << s.records
              << " records, max ratio " << s.max_ratio.to_string() << " at "
              << join(s.max_at) << "; " << pass_fail(ok) << '\n';
    }
    if (writer) writer->finish();
  } else if (suite == "filters") {
    auto writer = target.writer(report::filter_report_columns());
    analysis::FilterSink sink;
    if (writer) sink = [&](const theorems::FilterReport& r) { writer->write(report::to_json(r)); };
    const auto s = analysis::filter_agreement_scan(limit, sink, options);
    if (writer) writer->finish();
    ok = s.ok();
    std::vector<u64> disagreeing;
    for (const auto& r : s.disagreements) disagreeing.push_back(r.prime);
    std::ostringstream rate;
    rate.setf(std::ios::fixed);
    rate.precision(6);
    rate << s.agreement_rate();
    summary << "filters: primes <= " << limit << ", " << s.reports()
            << " reports (" << s.irreducible_reports << " irreducible, "
            << s.split_reports << " split), agreement rate " << rate.str()
            << " (" << s.agreements << "/" << s.reports() << "), disagreements at "
            << join(disagreeing) << "; true period outside bound divisors at "
            << join(s.membership_failures) << "; " << pass_fail(ok) << '\n';
  } else if (suite == "wall") {
    auto writer = target.writer(report::wall_violation_columns());
    analysis::WallSink sink;
    if (writer) sink = [&](const analysis::WallViolation& v) { writer->write(report::to_json(v)); };
    const auto s = analysis::wall_property_scan(limit, sink, options);
    if (writer) writer->finish();
    ok = s.ok();
    summary << "wall: m <= " << limit << ", parity checked " << s.parity_checked
            << ", divisor pairs checked " << s.pairs_checked << ", violations "
            << s.violations.size() << "; " << pass_fail(ok) << '\n';
  }
  target.check_written();
  return ok;
}

report::Format infer_format(const ScanArgs& args) {
  if (args.emit) return report::parse_format(*args.emit);
  if (args.out && fs::path(*args.out).extension() == ".json") {
    return report::Format::Json;
  }
  return report::Format::Csv;
}

int cmd_scan(const ScanArgs& args, std::ostream& out, std::ostream& err) {
  if (args.limit == 0) throw UsageError("scan: --limit must be >= 1");
  const analysis::ScanOptions options{args.threads, args.seed};
  const report::Format format = infer_format(args);
  const bool to_stdout = args.emit && !args.out;
  std::ostream& summary = to_stdout ? err : out;

  std::vector<std::string> suites;
  if (args.suite == "all") {
    if (to_stdout) {
      throw UsageError("scan: --suite all writes one report per suite; pass --out DIR");
    }
    suites = kSuites;
  } else {
    suites = {args.suite};
  }

  if (args.suite == "all" && args.out) {
    std::error_code ec;
    fs::create_directories(*args.out, ec);
    if (ec) throw DomainError("cannot create report directory " + *args.out);
  }

  bool ok = true;
  for (const std::string& suite : suites) {
    ReportTarget target;
    if (to_stdout) {
      target = ReportTarget(out, format);
    } else if (args.out) {
      const fs::path path =
          args.suite == "all"
              ? fs::path(*args.out) /
                    (suite + (format == report::Format::Json ? ".json" : ".csv"))
              : fs::path(*args.out);
      target = ReportTarget(path, format);
    }
    ok = run_suite(suite, args.limit, args.suite == "all", options, target,
                   summary) &&
         ok;
  }
  return ok ? kSuccess : kAssertionFailure;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Periods of the Fibonacci and Lucas sequences modulo m", "pisano"};
  app.require_subcommand(1);

  PeriodArgs period_args;
  auto* period_cmd = app.add_subcommand("period", "Print h(m) with its method and factorization");
  period_cmd->add_option("m", period_args.m, "Modulus")->required();
  period_cmd->add_flag("--lucas", period_args.lucas, "Period of the Lucas sequence instead");
  period_cmd->add_flag("--json", period_args.json, "Emit a single JSON object");

  u64 fib_n = 0;
  u64 fib_m = 0;
  auto* fib_cmd = app.add_subcommand("fib", "Print F_n and F_{n+1} modulo m");
  fib_cmd->add_option("n", fib_n, "Index")->required();
  fib_cmd->add_option("--mod", fib_m, "Modulus")->required();

  u64 prime = 0;
  auto* classify_cmd = app.add_subcommand("classify", "Class of a prime and its period bound");
  classify_cmd->add_option("p", prime, "Prime")->required();
  auto* fpr_cmd = app.add_subcommand("fpr", "Roots of g^2 = g + 1 mod p and their orders");
  fpr_cmd->add_option("p", prime, "Prime")->required();

  u64 index = 0;
  auto* index_cmd = app.add_subcommand("fib-index", "Compare h(F_m) with 2m / 4m");
  index_cmd->add_option("m", index, "Fibonacci index (4..92)")->required();

  ScanArgs scan_args;
  auto* scan_cmd = app.add_subcommand("scan", "Range scans over h(m)");
  scan_cmd->add_option("--limit", scan_args.limit, "Upper end of the range")->required();
  scan_cmd->add_option("--suite", scan_args.suite, "Which scan to run")
      ->check(CLI::IsMember({"ratio", "irreducible", "lucas", "filters", "wall", "all"}));
  scan_cmd->add_option("--emit", scan_args.emit, "Report format")
      ->check(CLI::IsMember({"csv", "json"}));
  scan_cmd->add_option("--out", scan_args.out, "Report file (directory for --suite all)");
  scan_cmd->add_option("--seed", scan_args.seed, "Factorizer seed");
  scan_cmd->add_option("--threads", scan_args.threads, "Worker threads, 0 = all cores");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsageError;
  }

  const bool json_errors = period_cmd->parsed() && period_args.json;
  auto fail = [&](int code, const std::string& message) {
    err << "error: " << message << '\n';
    if (json_errors) {
      out << Json{{"error", message}, {"exit_code", code}}.dump() << '\n';
    }
    return code;
  };

  try {
    if (period_cmd->parsed()) return cmd_period(period_args, out);
    if (fib_cmd->parsed()) return cmd_fib(fib_n, fib_m, out);
    if (classify_cmd->parsed()) return cmd_classify(prime, out);
    if (fpr_cmd->parsed()) return cmd_fpr(prime, out);
    if (index_cmd->parsed()) return cmd_fib_index(index, out);
    if (scan_cmd->parsed()) return cmd_scan(scan_args, out, err);
  } catch (const UsageError& e) {
    return fail(kUsageError, e.what());
  } catch (const DomainError& e) {
    return fail(kDomainError, e.what());
  } catch (const OverflowError& e) {
    return fail(kDomainError, e.what());
  } catch (const std::exception& e) {
    return fail(kAssertionFailure, e.what());
  }
  return kUsageError;
}

}  // namespace pisano::cli
