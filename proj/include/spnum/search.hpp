#pragma once

#include <cstdint>
#include <vector>

#include "spnum/digits.hpp"

namespace spnum {

struct SearchConfig {
  Base base;
  // Largest digit count searched. The proven cubic bound makes the run a
  // completeness certificate; smaller caps trade that for speed.
  std::int64_t k_max;
  // First digit count searched; > 1 only for band searches.
  std::int64_t k_min = 1;
  int worker_count = 1;
  // Disabled only by the reference tests that validate the prunes.
  bool enable_pruning = true;
  // Cap on the precomputed power tables.
  std::uint64_t memory_budget_bytes = 1ull << 30;

  SearchConfig(Base base, std::int64_t k_max) : base(base), k_max(k_max) {}

  // k_max defaulted to improved_digit_bound(base).
  static SearchConfig with_proven_bound(Base base);
};

struct SearchStats {
  std::int64_t nodes_visited = 0;
  std::int64_t nodes_pruned_upper = 0;
  std::int64_t nodes_pruned_lower = 0;
  std::int64_t leaves_tested = 0;
  double wall_time_seconds = 0.0;
};

struct SearchResult {
  std::vector<Natural> sp_numbers;  // strictly ascending, duplicate-free
  SearchStats stats;
  // True when k_max was below the proven bound, making completeness
  // conditional on the smaller cap.
  bool capped_below_proven_bound = false;
};

// Every SP number of the base with digit count in [k_min, k_max], found by
// depth-first search over nondecreasing digit sequences d1 <= ... <= dk,
// d in [1, r-1]. At a partial node with product P, sum S, rem open slots
// and minimum allowed next digit d:
//   - upper prune: P*(r-1)^rem*(S + rem*(r-1)) < r^(k-1), no completion
//     reaches k digits;
//   - lower prune: P*d^rem*(S + rem*d) > r^k - 1, every completion
//     overshoots k digits (P*S grows in every digit, so the all-d
//     completion is minimal);
//   - leaf: N = P*S is accepted iff r^(k-1) <= N <= r^k - 1 and the digit
//     multiset of N equals the chosen multiset.
// Output is deterministic and independent of worker_count.
SearchResult enumerate_sp(const SearchConfig& config);

// Independent oracle: tests every n <= limit directly against the SP
// predicate. No pruning, no multiset logic shared with enumerate_sp.
std::vector<Natural> brute_force_sp(Base base, const Natural& limit);

}  // namespace spnum
