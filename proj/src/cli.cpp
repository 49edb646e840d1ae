#include "spnum/cli.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <ostream>
#include <string>

#include "spnum/bounds.hpp"
#include "spnum/digits.hpp"
#include "spnum/errors.hpp"
#include "spnum/lambertw.hpp"
#include "spnum/records.hpp"
#include "spnum/search.hpp"
#include "spnum/verify.hpp"

namespace spnum::cli {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailingRecord = 1;
constexpr int kExitUsage = 2;

struct CommonOptions {
  std::string format = "text";
  std::string catalog_path;

  void attach(CLI::App& cmd) {
    cmd.add_option("--format", format, "Output format: text, csv, or jsonl")
        ->check(CLI::IsMember({"text", "csv", "jsonl"}));
    cmd.add_option("--out", catalog_path, "Append records to this JSONL catalog file");
  }

  RecordWriter writer(std::ostream& data, std::ostream& diagnostics,
                      const std::string& command) const {
    return RecordWriter(data, diagnostics, parse_format(format), command, catalog_path);
  }
};

Natural parse_natural(const std::string& text) {
  try {
    Natural n(text);
    return n;
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("'" + text + "' is not a decimal integer");
  }
}

int run_bounds(std::int64_t base_flag, std::int64_t from, std::int64_t to, int precision,
               const CommonOptions& common, std::ostream& data, std::ostream& diagnostics) {
  std::int64_t lo = from, hi = to;
  if (base_flag != 0) {
    lo = hi = base_flag;
  }
  if (lo < 2 || hi < lo) {
    throw std::invalid_argument("need --base >= 2, or 2 <= --from <= --to");
  }
  RecordWriter writer = common.writer(data, diagnostics, "bounds");
  for (std::int64_t r = lo; r <= hi; ++r) {
    writer.write(RecordType::kBoundReport, bound_report_payload(bound_report(Base(r), precision)));
  }
  return kExitOk;
}

int run_check(const std::string& value, std::int64_t base, const CommonOptions& common,
              std::ostream& data, std::ostream& diagnostics) {
  const Natural n = parse_natural(value);
  if (n < 1) throw std::invalid_argument("SP candidates are positive integers");
  RecordWriter writer = common.writer(data, diagnostics, "check");
  writer.write(RecordType::kCheck, check_payload(Base(base), n));
  return kExitOk;
}

int run_enumerate(std::int64_t base, std::int64_t max_digits, bool trust_conjecture,
                  bool stats, int threads, int precision, std::uint64_t budget_mib,
                  const CommonOptions& common, std::ostream& data,
                  std::ostream& diagnostics) {
  const Base b(base);
  std::string bound_kind = "proven";
  SearchConfig config = SearchConfig::with_proven_bound(b);
  if (trust_conjecture && max_digits > 0) {
    throw std::invalid_argument("--max-digits and --trust-conjecture are exclusive");
  }
  if (trust_conjecture) {
    const FlooredBound floored = conjectured_digit_floor(b, precision);
    if (!floored.floor_value.fits_slong_p()) {
      throw ResourceError("conjectured bound too large for base " + std::to_string(base));
    }
    config.k_max = floored.floor_value.get_si();
    bound_kind = "conjectured";
  } else if (max_digits > 0) {
    config.k_max = max_digits;
    bound_kind = "custom";
  }
  config.worker_count = threads;
  config.memory_budget_bytes = budget_mib << 20;

  if (Natural(config.k_max) < improved_digit_bound(b)) {
    diagnostics << "note: k_max " << config.k_max << " is below the proven bound "
                << improved_digit_bound(b).get_str()
                << "; completeness is conditional on this cap\n";
  }

  const SearchResult result = enumerate_sp(config);
  RecordWriter writer = common.writer(data, diagnostics, "enumerate");
  for (const Natural& n : result.sp_numbers) {
    writer.write(RecordType::kSpNumber, sp_number_payload(b, n));
  }
  writer.write_summary(RecordType::kSearchSummary,
                       search_summary_payload(b, config.k_min, config.k_max, bound_kind, result));
  if (stats) {
    diagnostics << "wall_time_seconds=" << result.stats.wall_time_seconds
                << " nodes_per_second="
                << (result.stats.wall_time_seconds > 0
                        ? static_cast<double>(result.stats.nodes_visited) /
                              result.stats.wall_time_seconds
                        : 0.0)
                << '\n';
  }
  return kExitOk;
}

int run_brute(std::int64_t base, const std::string& limit_text, const CommonOptions& common,
              std::ostream& data, std::ostream& diagnostics) {
  const Base b(base);
  const Natural limit = parse_natural(limit_text);
  const std::vector<Natural> found = brute_force_sp(b, limit);
  RecordWriter writer = common.writer(data, diagnostics, "brute");
  for (const Natural& n : found) {
    writer.write(RecordType::kSpNumber, sp_number_payload(b, n));
  }
  writer.write_summary(RecordType::kBruteSummary, brute_summary_payload(b, limit, found.size()));
  return kExitOk;
}

int run_wm1(const std::string& x_text, int precision, const CommonOptions& common,
            std::ostream& data, std::ostream& diagnostics) {
  const PrecisionReal x = PrecisionReal::from_string(x_text, precision + 10);
  const WEvaluation eval = lambert_w_minus1(x, precision);
  RecordWriter writer = common.writer(data, diagnostics, "wm1");
  writer.write(RecordType::kWEvaluation, w_evaluation_payload(eval, precision));
  return kExitOk;
}

int run_verify_conjecture(std::int64_t from, std::int64_t to, int precision, int threads,
                          bool cross_check, const CommonOptions& common, std::ostream& data,
                          std::ostream& diagnostics) {
  const auto records = verify_conjecture_range(from, to, precision, threads);
  RecordWriter writer = common.writer(data, diagnostics, "verify-conjecture");
  bool all_ok = true;
  for (const auto& record : records) {
    writer.write(RecordType::kConjecture, conjecture_payload(record));
    if (!record.verified()) {
      all_ok = false;
      diagnostics << "verification failed for base " << record.base << '\n';
    }
  }
  if (cross_check) {
    for (const auto& record : records) {
      if (record.base > 12) {
        diagnostics << "cross-check skipped for base " << record.base
                    << " (tractable for r <= 12 only)\n";
        continue;
      }
      const bool consistent = conjecture_enumeration_cross_check(Base(record.base), precision);
      diagnostics << "enumeration cross-check base " << record.base << ": "
                  << (consistent ? "consistent" : "INCONSISTENT") << '\n';
      if (!consistent) all_ok = false;
    }
  }
  return all_ok ? kExitOk : kExitFailingRecord;
}

int run_check_chain(std::int64_t base, std::int64_t n_max, const CommonOptions& common,
                    std::ostream& data, std::ostream& diagnostics) {
  if (n_max < 0) throw std::invalid_argument("--n-max must be >= 0");
  Base b(base);
  RecordWriter writer = common.writer(data, diagnostics, "check-chain");
  bool all_ok = true;
  for (std::int64_t n = 0; n <= n_max; ++n) {
    const ChainReport report = check_chain(base, n);
    writer.write(RecordType::kChain, chain_payload(report));
    if (!report.consistent()) all_ok = false;
  }
  const std::int64_t max_n = max_n_satisfying_eq1(base);
  const Natural exponent_bound = improved_exponent_bound(b);
  const bool within = Natural(max_n) <= exponent_bound;
  writer.write_summary(RecordType::kChainSummary,
                       chain_summary_payload(base, n_max, max_n, exponent_bound, within));
  if (!within) all_ok = false;
  return all_ok ? kExitOk : kExitFailingRecord;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& data, std::ostream& diagnostics) {
  CLI::App app{"Digit-count bounds, enumeration, and conjecture checks for "
               "sum-times-product numbers"};
  app.require_subcommand(1);

  // bounds
  auto* bounds_cmd = app.add_subcommand("bounds", "Digit-count bounds for one base or a range");
  std::int64_t bounds_base = 0, bounds_from = 0, bounds_to = 0;
  int bounds_prec = kDefaultPrecision;
  CommonOptions bounds_common;
  bounds_cmd->add_option("--base", bounds_base, "Single base r >= 2");
  bounds_cmd->add_option("--from", bounds_from, "First base of a range");
  bounds_cmd->add_option("--to", bounds_to, "Last base of a range");
  bounds_cmd->add_option("--prec", bounds_prec, "Decimal precision for the conjectured bound")
      ->check(CLI::Range(15, 10000));
  bounds_common.attach(*bounds_cmd);

  // check
  auto* check_cmd = app.add_subcommand("check", "Test one number for the SP property");
  std::string check_value;
  std::int64_t check_base = 10;
  CommonOptions check_common;
  check_cmd->add_option("value", check_value, "Number to test, decimal")->required();
  check_cmd->add_option("--base", check_base, "Base r >= 2")->required();
  check_common.attach(*check_cmd);

  // enumerate
  auto* enum_cmd = app.add_subcommand("enumerate", "Enumerate all SP numbers of a base");
  std::int64_t enum_base = 0, enum_max_digits = 0;
  bool enum_trust = false, enum_stats = false;
  int enum_threads = 1, enum_prec = kDefaultPrecision;
  std::uint64_t enum_budget_mib = 1024;
  CommonOptions enum_common;
  enum_cmd->add_option("--base", enum_base, "Base r >= 2")->required();
  enum_cmd->add_option("--max-digits", enum_max_digits,
                       "Digit-count cap (default: the proven cubic bound)")
      ->check(CLI::PositiveNumber);
  enum_cmd->add_flag("--trust-conjecture", enum_trust,
                     "Cap the search at the conjectured Lambert-W bound");
  enum_cmd->add_flag("--stats", enum_stats, "Print wall time to the diagnostic stream");
  enum_cmd->add_option("--threads", enum_threads, "Worker threads")->check(CLI::Range(1, 256));
  enum_cmd->add_option("--prec", enum_prec, "Precision for the conjectured cap")
      ->check(CLI::Range(15, 10000));
  enum_cmd->add_option("--memory-budget-mib", enum_budget_mib,
                       "Budget for the search power tables");
  enum_common.attach(*enum_cmd);

  // brute
  auto* brute_cmd = app.add_subcommand("brute", "Brute-force SP oracle up to a limit");
  std::int64_t brute_base = 0;
  std::string brute_limit;
  CommonOptions brute_common;
  brute_cmd->add_option("--base", brute_base, "Base r >= 2")->required();
  brute_cmd->add_option("--limit", brute_limit, "Inclusive search limit, decimal")->required();
  brute_common.attach(*brute_cmd);

  // wm1
  auto* wm1_cmd = app.add_subcommand("wm1", "Evaluate Lambert W, branch -1");
  std::string wm1_x;
  int wm1_prec = kDefaultPrecision;
  CommonOptions wm1_common;
  wm1_cmd->add_option("x", wm1_x, "Argument in [-1/e, 0), decimal")->required();
  wm1_cmd->add_option("--prec", wm1_prec, "Decimal precision")->check(CLI::Range(15, 10000));
  wm1_common.attach(*wm1_cmd);

  // verify-conjecture
  auto* verify_cmd =
      app.add_subcommand("verify-conjecture", "Check the Lambert-W bound over a base range");
  std::int64_t verify_from = 2, verify_to = 999;
  int verify_prec = kDefaultPrecision, verify_threads = 1;
  bool verify_cross = false;
  CommonOptions verify_common;
  verify_cmd->add_option("--from", verify_from, "First base")->required();
  verify_cmd->add_option("--to", verify_to, "Last base")->required();
  verify_cmd->add_option("--prec", verify_prec, "Decimal precision")->check(CLI::Range(15, 10000));
  verify_cmd->add_option("--threads", verify_threads, "Worker threads")->check(CLI::Range(1, 256));
  verify_cmd->add_flag("--cross-check", verify_cross,
                       "Also cross-check against enumeration (bases <= 12)");
  verify_common.attach(*verify_cmd);

  // check-chain
  auto* chain_cmd =
      app.add_subcommand("check-chain", "Evaluate the proof-chain inequalities for a base");
  std::int64_t chain_base = 0, chain_n_max = 64;
  CommonOptions chain_common;
  chain_cmd->add_option("--base", chain_base, "Base r >= 2")->required();
  chain_cmd->add_option("--n-max", chain_n_max, "Scan n = 0..n_max (default 64)");
  chain_common.attach(*chain_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, diagnostics, diagnostics) == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (bounds_cmd->parsed()) {
      return run_bounds(bounds_base, bounds_from, bounds_to, bounds_prec, bounds_common, data,
                        diagnostics);
    }
    if (check_cmd->parsed()) {
      return run_check(check_value, check_base, check_common, data, diagnostics);
    }
    if (enum_cmd->parsed()) {
      return run_enumerate(enum_base, enum_max_digits, enum_trust, enum_stats, enum_threads,
                           enum_prec, enum_budget_mib, enum_common, data, diagnostics);
    }
    if (brute_cmd->parsed()) {
      return run_brute(brute_base, brute_limit, brute_common, data, diagnostics);
    }
    if (wm1_cmd->parsed()) {
      return run_wm1(wm1_x, wm1_prec, wm1_common, data, diagnostics);
    }
    if (verify_cmd->parsed()) {
      return run_verify_conjecture(verify_from, verify_to, verify_prec, verify_threads,
                                   verify_cross, verify_common, data, diagnostics);
    }
    if (chain_cmd->parsed()) {
      return run_check_chain(chain_base, chain_n_max, chain_common, data, diagnostics);
    }
  } catch (const std::invalid_argument& e) {
    diagnostics << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::domain_error& e) {
    diagnostics << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ResourceError& e) {
    diagnostics << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    // Convergence and internal-consistency faults: a failing record, not
    // a usage problem.
    diagnostics << "internal error: " << e.what() << '\n';
    return kExitFailingRecord;
  }
  return kExitUsage;
}

}  // namespace spnum::cli
