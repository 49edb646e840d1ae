#include <doctest.h>

#include <nlohmann/json.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "spnum/records.hpp"

using namespace spnum;
using nlohmann::json;
using nlohmann::ordered_json;

#ifndef SPNUM_SOURCE_DIR
#define SPNUM_SOURCE_DIR "."
#endif

namespace {

json load_schema() {
  std::ifstream in(std::string(SPNUM_SOURCE_DIR) + "/docs/schema.json");
  REQUIRE(in.good());
  json schema;
  in >> schema;
  return schema;
}

ordered_json sample_payload(RecordType type) {
  switch (type) {
    case RecordType::kBoundReport:
      return bound_report_payload(bound_report(Base(10), 30));
    case RecordType::kSpNumber:
      return sp_number_payload(Base(10), Natural(144));
    case RecordType::kSearchSummary: {
      const SearchResult result = enumerate_sp(SearchConfig(Base(10), 6));
      return search_summary_payload(Base(10), 1, 6, "custom", result);
    }
    case RecordType::kBruteSummary:
      return brute_summary_payload(Base(10), Natural(1000), 3);
    case RecordType::kWEvaluation:
      return w_evaluation_payload(lambert_w_minus1(PrecisionReal::of(-0.1, 30), 30), 30);
    case RecordType::kConjecture:
      return conjecture_payload(verify_conjecture_range(10, 10, 30).front());
    case RecordType::kChain:
      return chain_payload(check_chain(10, 3));
    case RecordType::kChainSummary:
      return chain_summary_payload(10, 64, 58, improved_exponent_bound(Base(10)), true);
    case RecordType::kCheck:
      return check_payload(Base(10), Natural(144));
  }
  throw std::logic_error("unknown record type");
}

}  // namespace

TEST_CASE("field lists match the shipped schema document") {
  const json schema = load_schema();
  CHECK(schema.at("schema_version").get<std::string>() == kSchemaVersion);
  CHECK(schema.at("records").size() == all_record_types().size());
  for (RecordType type : all_record_types()) {
    const auto& pinned = schema.at("records").at(std::string(record_name(type)));
    const auto fields = record_fields(type);
    REQUIRE(pinned.size() == fields.size());
    for (std::size_t i = 0; i < fields.size(); ++i) {
      CHECK(pinned[i].get<std::string>() == fields[i]);
    }
  }
}

TEST_CASE("payloads carry exactly the pinned fields, in order") {
  for (RecordType type : all_record_types()) {
    const ordered_json payload = sample_payload(type);
    const auto fields = record_fields(type);
    REQUIRE(payload.size() == fields.size());
    std::size_t i = 0;
    for (auto it = payload.begin(); it != payload.end(); ++it, ++i) {
      CHECK(it.key() == fields[i]);
    }
  }
}

TEST_CASE("values beyond 64 bits are decimal strings") {
  // Base 5000000: 2r(r-1)^2 is about 2.5e20 > 2^64.
  const BoundReport report = bound_report(Base(5000000), 30);
  const ordered_json payload = bound_report_payload(report);
  CHECK(payload.at("shah_ali_digits").is_string());
  CHECK(payload.at("shah_ali_digits").get<std::string>() == report.shah_ali_digits.get_str());
  CHECK(payload.at("base").is_number());
}

TEST_CASE("exact rationals render as terminating or rounded decimals") {
  const ordered_json r2 = bound_report_payload(bound_report(Base(2), 30));
  CHECK(r2.at("improvement_pct").get<std::string>() == "75");
  const ordered_json r10 = bound_report_payload(bound_report(Base(10), 30));
  CHECK(r10.at("improvement_pct").get<std::string>() == "11.049382716049");
}

TEST_CASE("jsonl lines are independently parseable with the envelope") {
  std::ostringstream data, diag;
  RecordWriter writer(data, diag, OutputFormat::kJsonl, "check");
  writer.write(RecordType::kCheck, check_payload(Base(10), Natural(144)));
  writer.write(RecordType::kCheck, check_payload(Base(10), Natural(135)));

  std::istringstream lines(data.str());
  std::string line;
  int parsed = 0;
  while (std::getline(lines, line)) {
    const json row = json::parse(line);
    CHECK(row.at("schema_version").get<std::string>() == "1");
    CHECK(row.at("command").get<std::string>() == "check");
    CHECK(row.at("record").get<std::string>() == "check");
    CHECK(row.at("is_sp").get<bool>());
    ++parsed;
  }
  CHECK(parsed == 2);
  CHECK(diag.str().empty());
}

TEST_CASE("csv streams stay homogeneous; summaries go to diagnostics") {
  std::ostringstream data, diag;
  RecordWriter writer(data, diag, OutputFormat::kCsv, "brute");
  writer.write(RecordType::kSpNumber, sp_number_payload(Base(10), Natural(144)));
  writer.write_summary(RecordType::kBruteSummary,
                       brute_summary_payload(Base(10), Natural(1000), 1));

  std::istringstream lines(data.str());
  std::string header, row, extra;
  CHECK(std::getline(lines, header));
  CHECK(header == "base,value,digit_count,digit_sum,digit_product");
  CHECK(std::getline(lines, row));
  CHECK(row == "10,144,3,9,16");
  CHECK_FALSE(std::getline(lines, extra));
  CHECK(diag.str().find("count=1") != std::string::npos);
}

TEST_CASE("text rendering: bare values for sp rows, key=value elsewhere") {
  std::ostringstream data, diag;
  RecordWriter writer(data, diag, OutputFormat::kText, "enumerate");
  writer.write(RecordType::kSpNumber, sp_number_payload(Base(10), Natural(135)));
  writer.write(RecordType::kCheck, check_payload(Base(4), Natural(6)));
  CHECK(data.str().find("135\n") == 0);
  CHECK(data.str().find("base=4") != std::string::npos);
  CHECK(data.str().find("is_sp=true") != std::string::npos);
}

TEST_CASE("the catalog is append-only jsonl regardless of console format") {
  const std::string path = "test_catalog_tmp.jsonl";
  std::remove(path.c_str());
  {
    std::ostringstream data, diag;
    RecordWriter writer(data, diag, OutputFormat::kText, "check", path);
    writer.write(RecordType::kCheck, check_payload(Base(10), Natural(144)));
  }
  {
    std::ostringstream data, diag;
    RecordWriter writer(data, diag, OutputFormat::kCsv, "brute", path);
    writer.write_summary(RecordType::kBruteSummary,
                         brute_summary_payload(Base(10), Natural(9), 1));
  }
  std::ifstream in(path);
  std::string line;
  int count = 0;
  while (std::getline(in, line)) {
    const json row = json::parse(line);
    CHECK(row.at("schema_version").get<std::string>() == "1");
    ++count;
  }
  CHECK(count == 2);
  std::remove(path.c_str());
}

TEST_CASE("format parsing") {
  CHECK(parse_format("text") == OutputFormat::kText);
  CHECK(parse_format("csv") == OutputFormat::kCsv);
  CHECK(parse_format("jsonl") == OutputFormat::kJsonl);
  CHECK_THROWS_AS(parse_format("yaml"), std::invalid_argument);
}
