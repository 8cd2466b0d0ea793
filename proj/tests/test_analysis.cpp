#include <doctest.h>

#include <sstream>
#include <string>
#include <vector>

#include "pisano/analysis.hpp"
#include "pisano/error.hpp"
#include "pisano/fibmod.hpp"
#include "pisano/report.hpp"

using namespace pisano;
using namespace pisano::analysis;

namespace {

using Vec = std::vector<u64>;

std::vector<ScanRecord> collect_ratio(u64 limit, unsigned threads = 0) {
  std::vector<ScanRecord> out;
  (void)ratio_scan(limit, [&](const ScanRecord& r) { out.push_back(r); },
                   {threads, kDefaultSeed});
  return out;
}

std::string ratio_csv(u64 limit, unsigned threads) {
  std::ostringstream os;
  report::ReportWriter writer(os, report::Format::Csv, report::scan_record_columns());
  (void)ratio_scan(limit, [&](const ScanRecord& r) { writer.write(report::to_json(r)); },
                   {threads, kDefaultSeed});
  writer.finish();
  return os.str();
}

}  // namespace

TEST_CASE("ratio_scan up to 1000") {
  const RatioScanSummary s = ratio_scan(1000, nullptr);
  CHECK(s.ok());
  CHECK(s.records == 1000);
  CHECK(s.equality_set == Vec{10, 50, 250});
  CHECK(s.expected_equality_set == Vec{10, 50, 250});
  CHECK(s.max_ratio.same_value({6, 1}));
  CHECK(s.max_at == Vec{10, 50, 250});
  CHECK(s.bound_violations.empty());
}

TEST_CASE("ratio_scan small limits") {
  const RatioScanSummary s9 = ratio_scan(9, nullptr);
  CHECK(s9.equality_set.empty());
  CHECK(s9.max_ratio.same_value({4, 1}));
  CHECK(s9.max_at == Vec{5, 6});
  CHECK(s9.ok());

  const RatioScanSummary s1 = ratio_scan(1, nullptr);
  CHECK(s1.equality_set.empty());
  CHECK(s1.max_ratio.same_value({1, 1}));
  CHECK(s1.records == 1);

  CHECK_THROWS_AS((void)ratio_scan(0, nullptr), DomainError);
}

TEST_CASE("ratio_scan records") {
  const auto records = collect_ratio(300);
  REQUIRE(records.size() == 300);
  const Vec expected_h = {1, 3, 8, 6, 20, 24, 16, 12, 24};
  for (u64 m = 1; m <= 9; ++m) CHECK(records[m - 1].period == expected_h[m - 1]);
  for (const ScanRecord& r : records) {
    REQUIRE(r.m == (&r - records.data()) + 1);
    REQUIRE(r.period == fibmod::brute_period(r.m).period);
    REQUIRE(r.has(Flag::RatioSix) == (r.period == 6 * r.m));
    REQUIRE(r.ratio().num == r.period);
    REQUIRE(r.ratio().den == r.m);
  }
  CHECK(records[0].has(Flag::NewMaximum));
  CHECK(records[9].has(Flag::NewMaximum));   // m = 10 first reaches 6
  CHECK_FALSE(records[49].has(Flag::NewMaximum));
  CHECK(classes_in(records[59].class_mask) ==
        std::vector<PrimeClass>{PrimeClass::SpecialTwo, PrimeClass::SpecialFive,
                                PrimeClass::Irreducible});
}

TEST_CASE("scan output is identical for any thread count") {
  const std::string one = ratio_csv(3000, 1);
  CHECK(one == ratio_csv(3000, 3));
  CHECK(one == ratio_csv(3000, 8));
  CHECK(one.rfind("m,period,ratio_num,ratio_den,method,flags\n1,1,1,1,", 0) == 0);
  CHECK(one.find("\n10,60,60,10,LcmComposition,RatioSix;NewMaximum\n") != std::string::npos);
}

TEST_CASE("irreducible_product_scan") {
  std::vector<ScanRecord> rows;
  const auto s = irreducible_product_scan(
      1000, [&](const ScanRecord& r) { rows.push_back(r); });
  CHECK(s.ok());
  CHECK(s.checked == rows.size());
  auto find = [&](u64 m) -> const ScanRecord* {
    for (const auto& r : rows) {
      if (r.m == m) return &r;
    }
    return nullptr;
  };
  REQUIRE(find(7) != nullptr);
  CHECK(find(7)->period == 16);
  REQUIRE(find(21) != nullptr);
  CHECK(find(21)->period == 16);
  REQUIRE(find(3) != nullptr);
  CHECK(find(3)->period == 8);
  CHECK(find(11) == nullptr);
  CHECK(find(6) == nullptr);
  CHECK(find(15) == nullptr);
  CHECK(s.max_ratio < Ratio{4, 1});
}

TEST_CASE("lucas_ratio_scan") {
  const auto s100 = lucas_ratio_scan(100, nullptr);
  CHECK(s100.max_ratio.same_value({4, 1}));
  CHECK(s100.max_at == Vec{6});
  CHECK(s100.ok());

  std::vector<ScanRecord> rows;
  const auto s5 = lucas_ratio_scan(5, [&](const ScanRecord& r) { rows.push_back(r); });
  CHECK(s5.max_ratio.same_value({8, 3}));
  CHECK(s5.max_at == Vec{3});
  CHECK(s5.ok());
  REQUIRE(rows.size() == 5);
  const Vec expected = {1, 3, 8, 6, 4};
  for (std::size_t i = 0; i < 5; ++i) CHECK(rows[i].period == expected[i]);

  const auto s1 = lucas_ratio_scan(1, nullptr);
  CHECK(s1.max_ratio.same_value({1, 1}));
  CHECK_THROWS_AS((void)lucas_ratio_scan(kLucasScanCap + 1, nullptr), DomainError);
}

TEST_CASE("filter_agreement_scan") {
  Vec irreducible;
  Vec split;
  const auto s = filter_agreement_scan(100, [&](const theorems::FilterReport& r) {
    (r.prime_class == PrimeClass::Irreducible ? irreducible : split).push_back(r.prime);
  });
  CHECK(irreducible == Vec{3, 7, 13, 17, 23, 37, 43, 47, 53, 67, 73, 83, 97});
  CHECK(split == Vec{11, 19, 29, 31, 41, 59, 61, 71, 79, 89});
  CHECK(s.reports() == 23);
  CHECK(s.agreements + s.disagreements.size() == 23);
  CHECK(s.ok());

  const auto empty = filter_agreement_scan(2, nullptr);
  CHECK(empty.reports() == 0);
  CHECK(empty.ok());
}

TEST_CASE("wall_property_scan") {
  CHECK(wall_property_scan(5000, nullptr).ok());
  const auto s2 = wall_property_scan(2, nullptr);
  CHECK(s2.ok());
  CHECK(s2.parity_checked == 0);
  const auto s12 = wall_property_scan(12, nullptr);
  CHECK(s12.parity_checked == 10);
  // Pairs (n, m) with n | m, n < m <= 12.
  CHECK(s12.pairs_checked == 23);
}

TEST_CASE("json report round-trips") {
  std::ostringstream os;
  {
    report::ReportWriter writer(os, report::Format::Json, report::scan_record_columns());
    (void)ratio_scan(12, [&](const ScanRecord& r) { writer.write(report::to_json(r)); });
  }
  const auto parsed = report::Json::parse(os.str());
  REQUIRE(parsed.is_array());
  REQUIRE(parsed.size() == 12);
  CHECK(parsed[9]["m"] == 10);
  CHECK(parsed[9]["period"] == 60);
  CHECK(parsed[9]["method"] == "LcmComposition");
  CHECK(parsed[9]["flags"] == report::Json::array({"RatioSix", "NewMaximum"}));
  for (const auto& row : parsed) {
    std::vector<std::string> keys;
    for (const auto& [k, v] : row.items()) keys.push_back(k);
    CHECK(keys == report::scan_record_columns());
  }

  std::ostringstream empty;
  { report::ReportWriter writer(empty, report::Format::Json, report::scan_record_columns()); }
  CHECK(empty.str() == "[]\n");
}

TEST_CASE("filter report csv") {
  std::ostringstream os;
  report::ReportWriter writer(os, report::Format::Csv, report::filter_report_columns());
  writer.write(report::to_json(theorems::theorem2_period(29)));
  writer.finish();
  CHECK(os.str() ==
        "prime,class,bound,all_divisors,surviving,paper_answer,true_period,agrees\n"
        "29,split,28,1;2;4;7;14;28,4;14;28,14,14,true\n");
}

TEST_CASE("ratio rendering") {
  CHECK(Ratio{60, 10}.to_string() == "6");
  CHECK(Ratio{8, 3}.to_string() == "8/3 (2.666667)");
  CHECK(Ratio{300, 50}.same_value({6, 1}));
  CHECK(Ratio{299, 50} < Ratio{6, 1});
}
