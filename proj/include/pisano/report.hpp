#pragma once

// CSV and JSON report files for scan results. UTF-8, LF line endings, a
// header row in CSV. JSON reports are an array with one object per row
// using the same keys as the CSV columns; list values are JSON arrays in
// JSON and semicolon-joined in CSV.

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "pisano/analysis.hpp"
#include "pisano/period.hpp"
#include "pisano/theorems.hpp"

namespace pisano::report {

using Json = nlohmann::ordered_json;

enum class Format { Csv, Json };

[[nodiscard]] Format parse_format(std::string_view name);

// Streams rows as they arrive. finish() closes a JSON array; the destructor
// calls it if the caller did not.
class ReportWriter {
 public:
  ReportWriter(std::ostream& out, Format format,
               std::vector<std::string> columns);
  ReportWriter(const ReportWriter&) = delete;
  ReportWriter& operator=(const ReportWriter&) = delete;
  ~ReportWriter();

  // `row` must be an object holding every column.
  void write(const Json& row);
  void finish();

  [[nodiscard]] std::size_t rows() const { return rows_; }

 private:
  std::ostream& out_;
  Format format_;
  std::vector<std::string> columns_;
  std::size_t rows_ = 0;
  bool finished_ = false;
};

[[nodiscard]] const std::vector<std::string>& scan_record_columns();
[[nodiscard]] const std::vector<std::string>& filter_report_columns();
[[nodiscard]] const std::vector<std::string>& wall_violation_columns();

[[nodiscard]] Json to_json(const analysis::ScanRecord& r);
[[nodiscard]] Json to_json(const theorems::FilterReport& r);
[[nodiscard]] Json to_json(const analysis::WallViolation& v);
[[nodiscard]] Json to_json(const numth::Factorization& f);

// "2^3 * 5 * 11"
[[nodiscard]] std::string render(const numth::Factorization& f);

}  // namespace pisano::report
