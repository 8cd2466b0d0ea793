#include "pisano/report.hpp"

#include <ostream>
#include <stdexcept>

#include "pisano/error.hpp"

namespace pisano::report {
namespace {

std::string csv_cell(const Json& value) {
  if (value.is_null()) return "";
  if (value.is_string()) return value.get<std::string>();
  if (value.is_array()) {
    std::string out;
    for (const Json& item : value) {
      if (!out.empty()) out += ';';
      out += csv_cell(item);
    }
    return out;
  }
  return value.dump();
}

Json u64_array(const std::vector<u64>& values) {
  Json out = Json::array();
  for (u64 v : values) out.push_back(v);
  return out;
}

}  // namespace

Format parse_format(std::string_view name) {
  if (name == "csv") return Format::Csv;
  if (name == "json") return Format::Json;
  throw DomainError("unknown report format: " + std::string(name));
}

ReportWriter::ReportWriter(std::ostream& out, Format format,
                           std::vector<std::string> columns)
    : out_(out), format_(format), columns_(std::move(columns)) {
  if (format_ == Format::Csv) {
    for (std::size_t i = 0; i < columns_.size(); ++i) {
      out_ << (i ? "," : "") << columns_[i];
    }
    out_ << '\n';
  } else {
    out_ << '[';
  }
}

ReportWriter::~ReportWriter() {
  try {
    finish();
  } catch (...) {
  }
}

void ReportWriter::write(const Json& row) {
  if (finished_) throw std::logic_error("ReportWriter: write after finish");
  if (format_ == Format::Csv) {
    for (std::size_t i = 0; i < columns_.size(); ++i) {
      out_ << (i ? "," : "") << csv_cell(row.at(columns_[i]));
    }
    out_ << '\n';
  } else {
    Json ordered = Json::object();
    for (const std::string& c : columns_) ordered[c] = row.at(c);
    out_ << (rows_ ? ",\n  " : "\n  ") << ordered.dump();
  }
  ++rows_;
}

void ReportWriter::finish() {
  if (finished_) return;
  finished_ = true;
  if (format_ == Format::Json) out_ << (rows_ ? "\n]\n" : "]\n");
  out_.flush();
}

const std::vector<std::string>& scan_record_columns() {
  static const std::vector<std::string> kColumns = {
      "m", "period", "ratio_num", "ratio_den", "method", "flags"};
  return kColumns;
}

const std::vector<std::string>& filter_report_columns() {
  static const std::vector<std::string> kColumns = {
      "prime",     "class",        "bound",       "all_divisors",
      "surviving", "paper_answer", "true_period", "agrees"};
  return kColumns;
}

const std::vector<std::string>& wall_violation_columns() {
  static const std::vector<std::string> kColumns = {"kind", "n", "m",
                                                    "period_n", "period_m"};
  return kColumns;
}

Json to_json(const analysis::ScanRecord& r) {
  Json out = Json::object();
  out["m"] = r.m;
  out["period"] = r.period;
  out["ratio_num"] = r.ratio().num;
  out["ratio_den"] = r.ratio().den;
  out["method"] = std::string(to_string(r.method));
  out["flags"] = analysis::flag_names(r.flags);
  return out;
}

Json to_json(const theorems::FilterReport& r) {
  Json out = Json::object();
  out["prime"] = r.prime;
  out["class"] = std::string(to_string(r.prime_class));
  out["bound"] = r.bound;
  out["all_divisors"] = u64_array(r.all_divisors.values);
  out["surviving"] = u64_array(r.surviving);
  out["paper_answer"] = r.paper_answer ? Json(*r.paper_answer) : Json(nullptr);
  out["true_period"] = r.true_period;
  out["agrees"] = r.agrees;
  return out;
}

Json to_json(const analysis::WallViolation& v) {
  Json out = Json::object();
  out["kind"] = v.kind == analysis::WallViolation::Kind::Parity ? "parity"
                                                                : "divisibility";
  out["n"] = v.n;
  out["m"] = v.m;
  out["period_n"] = v.period_n;
  out["period_m"] = v.period_m;
  return out;
}

Json to_json(const numth::Factorization& f) {
  Json out = Json::array();
  for (const auto& [p, e] : f.factors) out.push_back(Json::array({p, e}));
  return out;
}

std::string render(const numth::Factorization& f) {
  if (f.factors.empty()) return "1";
  std::string out;
  for (const auto& [p, e] : f.factors) {
    if (!out.empty()) out += " * ";
    out += std::to_string(p);
    if (e > 1) out += "^" + std::to_string(e);
  }
  return out;
}

}  // namespace pisano::report
