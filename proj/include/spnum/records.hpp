#pragma once

#include <nlohmann/json_fwd.hpp>

#include <iosfwd>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "spnum/bounds.hpp"
#include "spnum/lambertw.hpp"
#include "spnum/search.hpp"
#include "spnum/verify.hpp"

namespace spnum {

// Machine-readable output records. Field names and their order are frozen
// in docs/schema.json; a schema test pins the two against each other.
// Naturals and reals are emitted as decimal strings so values beyond 64
// bits never degrade to floats.

enum class RecordType {
  kBoundReport,
  kSpNumber,
  kSearchSummary,
  kBruteSummary,
  kWEvaluation,
  kConjecture,
  kChain,
  kChainSummary,
  kCheck,
};

inline constexpr std::string_view kSchemaVersion = "1";

std::string_view record_name(RecordType type);
std::span<const std::string_view> record_fields(RecordType type);
std::span<const RecordType> all_record_types();

nlohmann::ordered_json bound_report_payload(const BoundReport& report);
nlohmann::ordered_json sp_number_payload(Base base, const Natural& n);
nlohmann::ordered_json search_summary_payload(Base base, std::int64_t k_min,
                                              std::int64_t k_max,
                                              std::string_view bound_kind,
                                              const SearchResult& result);
nlohmann::ordered_json brute_summary_payload(Base base, const Natural& limit,
                                             std::size_t count);
nlohmann::ordered_json w_evaluation_payload(const WEvaluation& eval, int precision);
nlohmann::ordered_json conjecture_payload(const ConjectureRecord& record);
nlohmann::ordered_json chain_payload(const ChainReport& report);
nlohmann::ordered_json chain_summary_payload(std::int64_t base, std::int64_t n_scanned_to,
                                             std::int64_t max_n_eq1,
                                             const Natural& exponent_bound,
                                             bool within_bound);
nlohmann::ordered_json check_payload(Base base, const Natural& n);

enum class OutputFormat { kText, kCsv, kJsonl };

OutputFormat parse_format(std::string_view name);

// Renders records to the data stream in one format and appends every
// record to an optional line-delimited catalog file. CSV streams must stay
// homogeneous, so in CSV mode summary records are rendered as text onto
// the diagnostic stream instead.
class RecordWriter {
 public:
  RecordWriter(std::ostream& data, std::ostream& diagnostics, OutputFormat format,
               std::string command, const std::string& catalog_path = "");
  ~RecordWriter();

  RecordWriter(const RecordWriter&) = delete;
  RecordWriter& operator=(const RecordWriter&) = delete;

  void write(RecordType type, const nlohmann::ordered_json& payload);
  void write_summary(RecordType type, const nlohmann::ordered_json& payload);

 private:
  void append_to_catalog(RecordType type, const nlohmann::ordered_json& payload);
  void write_csv(RecordType type, const nlohmann::ordered_json& payload);
  std::string render_text(RecordType type, const nlohmann::ordered_json& payload) const;

  std::ostream& data_;
  std::ostream& diagnostics_;
  OutputFormat format_;
  std::string command_;
  std::unique_ptr<std::ofstream> catalog_;
  bool csv_header_written_ = false;
};

}  // namespace spnum
