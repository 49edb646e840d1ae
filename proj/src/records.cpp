#include "spnum/records.hpp"

#include <nlohmann/json.hpp>

#include <array>
#include <fstream>
#include <memory>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace spnum {

namespace {

constexpr std::array<std::string_view, 8> kBoundReportFields = {
    "base",  "shah_ali_digits",   "improved_digits", "improved_exponent",
    "conjectured_bound", "conjectured_digits", "ambiguous_floor", "improvement_pct"};

constexpr std::array<std::string_view, 5> kSpNumberFields = {
    "base", "value", "digit_count", "digit_sum", "digit_product"};

constexpr std::array<std::string_view, 10> kSearchSummaryFields = {
    "base", "k_min", "k_max", "bound_kind", "count", "complete",
    "nodes_visited", "nodes_pruned_upper", "nodes_pruned_lower", "leaves_tested"};

constexpr std::array<std::string_view, 3> kBruteSummaryFields = {"base", "limit", "count"};

constexpr std::array<std::string_view, 5> kWEvaluationFields = {
    "x", "w", "residual", "iterations", "precision"};

constexpr std::array<std::string_view, 8> kConjectureFields = {
    "base", "bound_real", "bound_floor", "m0",
    "crossover_holds", "monotone_guard", "ambiguous_floor", "verified"};

constexpr std::array<std::string_view, 6> kChainFields = {
    "base", "n", "eq1", "eq2", "eq3", "consistent"};

constexpr std::array<std::string_view, 5> kChainSummaryFields = {
    "base", "n_scanned_to", "max_n_eq1", "exponent_bound", "within_bound"};

constexpr std::array<std::string_view, 6> kCheckFields = {
    "base", "value", "digit_count", "digit_sum", "digit_product", "is_sp"};

constexpr std::array<RecordType, 9> kAllRecordTypes = {
    RecordType::kBoundReport, RecordType::kSpNumber,    RecordType::kSearchSummary,
    RecordType::kBruteSummary, RecordType::kWEvaluation, RecordType::kConjecture,
    RecordType::kChain,        RecordType::kChainSummary, RecordType::kCheck};

std::string decimal(const Natural& n) { return n.get_str(); }

// Nonnegative exact rationals render as fixed decimals: exactly when
// terminating, otherwise rounded to 12 places.
std::string decimal(const Rational& q) {
  Natural integer_part = q.get_num() / q.get_den();
  Rational frac = q - Rational(integer_part);
  if (frac == 0) return integer_part.get_str();
  Natural scaled_num = frac.get_num() * Natural("1000000000000");
  Natural scaled = scaled_num / frac.get_den();
  if (2 * (scaled_num % frac.get_den()) >= frac.get_den()) scaled += 1;
  std::string digits = scaled.get_str();
  if (digits.size() < 12) digits.insert(0, 12 - digits.size(), '0');
  while (digits.size() > 1 && digits.back() == '0') digits.pop_back();
  return integer_part.get_str() + "." + digits;
}

}  // namespace

std::string_view record_name(RecordType type) {
  switch (type) {
    case RecordType::kBoundReport: return "bound_report";
    case RecordType::kSpNumber: return "sp_number";
    case RecordType::kSearchSummary: return "search_summary";
    case RecordType::kBruteSummary: return "brute_summary";
    case RecordType::kWEvaluation: return "w_evaluation";
    case RecordType::kConjecture: return "conjecture";
    case RecordType::kChain: return "chain";
    case RecordType::kChainSummary: return "chain_summary";
    case RecordType::kCheck: return "check";
  }
  throw std::logic_error("unknown record type");
}

std::span<const std::string_view> record_fields(RecordType type) {
  switch (type) {
    case RecordType::kBoundReport: return kBoundReportFields;
    case RecordType::kSpNumber: return kSpNumberFields;
    case RecordType::kSearchSummary: return kSearchSummaryFields;
    case RecordType::kBruteSummary: return kBruteSummaryFields;
    case RecordType::kWEvaluation: return kWEvaluationFields;
    case RecordType::kConjecture: return kConjectureFields;
    case RecordType::kChain: return kChainFields;
    case RecordType::kChainSummary: return kChainSummaryFields;
    case RecordType::kCheck: return kCheckFields;
  }
  throw std::logic_error("unknown record type");
}

std::span<const RecordType> all_record_types() { return kAllRecordTypes; }

nlohmann::ordered_json bound_report_payload(const BoundReport& report) {
  return nlohmann::ordered_json{
      {"base", report.base},
      {"shah_ali_digits", decimal(report.shah_ali_digits)},
      {"improved_digits", decimal(report.improved_digits)},
      {"improved_exponent", decimal(report.improved_exponent)},
      {"conjectured_bound", report.conjectured_bound.str()},
      {"conjectured_digits", decimal(report.conjectured_digits)},
      {"ambiguous_floor", report.ambiguous_floor},
      {"improvement_pct", decimal(report.improvement_pct)},
  };
}

nlohmann::ordered_json sp_number_payload(Base base, const Natural& n) {
  const DigitVector d = to_digits(n, base);
  return nlohmann::ordered_json{
      {"base", base.value()},
      {"value", decimal(n)},
      {"digit_count", d.size()},
      {"digit_sum", decimal(digit_sum(d))},
      {"digit_product", decimal(digit_product(d))},
  };
}

nlohmann::ordered_json search_summary_payload(Base base, std::int64_t k_min,
                                              std::int64_t k_max,
                                              std::string_view bound_kind,
                                              const SearchResult& result) {
  return nlohmann::ordered_json{
      {"base", base.value()},
      {"k_min", k_min},
      {"k_max", k_max},
      {"bound_kind", bound_kind},
      {"count", result.sp_numbers.size()},
      {"complete", !result.capped_below_proven_bound},
      {"nodes_visited", result.stats.nodes_visited},
      {"nodes_pruned_upper", result.stats.nodes_pruned_upper},
      {"nodes_pruned_lower", result.stats.nodes_pruned_lower},
      {"leaves_tested", result.stats.leaves_tested},
  };
}

nlohmann::ordered_json brute_summary_payload(Base base, const Natural& limit,
                                             std::size_t count) {
  return nlohmann::ordered_json{
      {"base", base.value()},
      {"limit", decimal(limit)},
      {"count", count},
  };
}

nlohmann::ordered_json w_evaluation_payload(const WEvaluation& eval, int precision) {
  return nlohmann::ordered_json{
      {"x", eval.argument.str()},
      {"w", eval.result.str()},
      {"residual", eval.residual.str(6)},
      {"iterations", eval.iterations},
      {"precision", precision},
  };
}

nlohmann::ordered_json conjecture_payload(const ConjectureRecord& record) {
  return nlohmann::ordered_json{
      {"base", record.base},
      {"bound_real", record.bound_real.str()},
      {"bound_floor", decimal(record.bound_floor)},
      {"m0", decimal(record.m0)},
      {"crossover_holds", record.crossover_holds},
      {"monotone_guard", record.monotone_guard},
      {"ambiguous_floor", record.ambiguous_floor},
      {"verified", record.verified()},
  };
}

nlohmann::ordered_json chain_payload(const ChainReport& report) {
  return nlohmann::ordered_json{
      {"base", report.base}, {"n", report.n},   {"eq1", report.eq1},
      {"eq2", report.eq2},   {"eq3", report.eq3}, {"consistent", report.consistent()},
  };
}

nlohmann::ordered_json chain_summary_payload(std::int64_t base, std::int64_t n_scanned_to,
                                             std::int64_t max_n_eq1,
                                             const Natural& exponent_bound,
                                             bool within_bound) {
  return nlohmann::ordered_json{
      {"base", base},
      {"n_scanned_to", n_scanned_to},
      {"max_n_eq1", max_n_eq1},
      {"exponent_bound", decimal(exponent_bound)},
      {"within_bound", within_bound},
  };
}

nlohmann::ordered_json check_payload(Base base, const Natural& n) {
  const DigitVector d = to_digits(n, base);
  return nlohmann::ordered_json{
      {"base", base.value()},
      {"value", decimal(n)},
      {"digit_count", d.size()},
      {"digit_sum", decimal(digit_sum(d))},
      {"digit_product", decimal(digit_product(d))},
      {"is_sp", is_sp(n, base)},
  };
}

OutputFormat parse_format(std::string_view name) {
  if (name == "text") return OutputFormat::kText;
  if (name == "csv") return OutputFormat::kCsv;
  if (name == "jsonl") return OutputFormat::kJsonl;
  throw std::invalid_argument("unknown format '" + std::string(name) +
                              "' (expected text, csv, or jsonl)");
}

RecordWriter::RecordWriter(std::ostream& data, std::ostream& diagnostics,
                           OutputFormat format, std::string command,
                           const std::string& catalog_path)
    : data_(data), diagnostics_(diagnostics), format_(format), command_(std::move(command)) {
  if (!catalog_path.empty()) {
    catalog_ = std::make_unique<std::ofstream>(catalog_path, std::ios::app);
    if (!*catalog_) {
      throw std::runtime_error("cannot open catalog file '" + catalog_path + "' for append");
    }
  }
}

RecordWriter::~RecordWriter() = default;

void RecordWriter::append_to_catalog(RecordType type, const nlohmann::ordered_json& payload) {
  if (!catalog_) return;
  nlohmann::ordered_json line{{"schema_version", kSchemaVersion},
                              {"command", command_},
                              {"record", record_name(type)}};
  line.update(payload);
  *catalog_ << line.dump() << '\n';
}

void RecordWriter::write_csv(RecordType type, const nlohmann::ordered_json& payload) {
  const auto fields = record_fields(type);
  if (!csv_header_written_) {
    for (std::size_t i = 0; i < fields.size(); ++i) {
      data_ << (i ? "," : "") << fields[i];
    }
    data_ << '\n';
    csv_header_written_ = true;
  }
  for (std::size_t i = 0; i < fields.size(); ++i) {
    const auto& v = payload.at(std::string(fields[i]));
    data_ << (i ? "," : "");
    if (v.is_string()) {
      data_ << v.get<std::string>();
    } else {
      data_ << v.dump();
    }
  }
  data_ << '\n';
}

std::string RecordWriter::render_text(RecordType type,
                                      const nlohmann::ordered_json& payload) const {
  // Enumeration data rows print as bare values; everything else as
  // key=value pairs.
  if (type == RecordType::kSpNumber) {
    return payload.at("value").get<std::string>();
  }
  std::ostringstream line;
  bool first = true;
  for (const auto& field : record_fields(type)) {
    const auto& v = payload.at(std::string(field));
    line << (first ? "" : " ") << field << '=';
    if (v.is_string()) {
      line << v.get<std::string>();
    } else {
      line << v.dump();
    }
    first = false;
  }
  return line.str();
}

void RecordWriter::write(RecordType type, const nlohmann::ordered_json& payload) {
  append_to_catalog(type, payload);
  switch (format_) {
    case OutputFormat::kText:
      data_ << render_text(type, payload) << '\n';
      break;
    case OutputFormat::kCsv:
      write_csv(type, payload);
      break;
    case OutputFormat::kJsonl: {
      nlohmann::ordered_json line{{"schema_version", kSchemaVersion},
                                  {"command", command_},
                                  {"record", record_name(type)}};
      line.update(payload);
      data_ << line.dump() << '\n';
      break;
    }
  }
}

void RecordWriter::write_summary(RecordType type, const nlohmann::ordered_json& payload) {
  if (format_ == OutputFormat::kCsv) {
    // Keep the CSV data stream homogeneous.
    append_to_catalog(type, payload);
    diagnostics_ << render_text(type, payload) << '\n';
    return;
  }
  write(type, payload);
}

}  // namespace spnum
