#include "spnum/search.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <stdexcept>
#include <string>
#include <thread>

#include "spnum/bounds.hpp"
#include "spnum/errors.hpp"

namespace spnum {

namespace {

// Sub-search of one (digit count, first digit) subtree; the unit of work
// distributed to workers. Jobs are merged in creation order, which fixes
// the output independently of scheduling.
struct Job {
  std::int64_t k = 0;
  Digit first_digit = 0;
};

struct JobOutcome {
  std::vector<Natural> found;
  SearchStats stats;
};

double table_bytes_estimate(std::int64_t r, std::int64_t k_max) {
  constexpr double kPerValueOverhead = 24.0;
  const double k = static_cast<double>(k_max);
  double total = (k + 1) * kPerValueOverhead + k * k / 16.0 * std::log2(static_cast<double>(r));
  for (std::int64_t d = 1; d < r; ++d) {
    total += (k + 1) * kPerValueOverhead;
    if (d > 1) total += k * k / 16.0 * std::log2(static_cast<double>(d));
  }
  return total;
}

// Read-only power tables shared by all workers.
struct PowerTables {
  std::vector<Natural> r_pow;                 // r^j, j in [0, k_max]
  std::vector<std::vector<Natural>> d_pow;    // d_pow[d][j] = d^j, d in [1, r-1]

  PowerTables(std::int64_t r, std::int64_t k_max) {
    r_pow.resize(static_cast<std::size_t>(k_max) + 1);
    r_pow[0] = 1;
    for (std::int64_t j = 1; j <= k_max; ++j) {
      r_pow[static_cast<std::size_t>(j)] = r_pow[static_cast<std::size_t>(j - 1)] * r;
    }
    d_pow.resize(static_cast<std::size_t>(r));
    for (std::int64_t d = 1; d < r; ++d) {
      auto& row = d_pow[static_cast<std::size_t>(d)];
      row.resize(static_cast<std::size_t>(k_max) + 1);
      row[0] = 1;
      for (std::int64_t j = 1; j <= k_max; ++j) {
        row[static_cast<std::size_t>(j)] = row[static_cast<std::size_t>(j - 1)] * d;
      }
    }
  }
};

class Worker {
 public:
  Worker(std::int64_t r, std::int64_t k_max, const PowerTables& tables, bool pruning)
      : r_(r),
        rm1_(r - 1),
        tables_(tables),
        pruning_(pruning),
        product_stack_(static_cast<std::size_t>(k_max) + 1),
        chosen_counts_(static_cast<std::size_t>(r), 0),
        leaf_counts_(static_cast<std::size_t>(r), 0) {
    product_stack_[0] = 1;
  }

  // Expands the root node of the k-digit tree: visits it, applies the
  // prunes, and reports whether any first-digit subtree remains.
  bool open_digit_count(std::int64_t k, SearchStats& stats) {
    k_ = k;
    lo_ = &tables_.r_pow[static_cast<std::size_t>(k - 1)];
    hi_ = tables_.r_pow[static_cast<std::size_t>(k)] - 1;
    ++stats.nodes_visited;
    if (!pruning_) return true;
    return !prune(k, 1, 1, 0, stats);
  }

  // Runs the subtree rooted at first_digit within the current k.
  void run(const Job& job, JobOutcome& out) {
    chosen_counts_.assign(chosen_counts_.size(), 0);
    ++chosen_counts_[static_cast<std::size_t>(job.first_digit)];
    product_stack_[1] = job.first_digit;
    descend(k_ - 1, job.first_digit, static_cast<unsigned long>(job.first_digit), out);
    --chosen_counts_[static_cast<std::size_t>(job.first_digit)];
  }

 private:
  // True when the subtree below (rem open slots, product P, sum S, minimum
  // next digit min_d) can be discarded.
  bool prune(std::int64_t rem, Digit min_d, const Natural& product, unsigned long sum,
             SearchStats& stats) {
    const auto urem = static_cast<std::size_t>(rem);
    scratch_ = product * tables_.d_pow[static_cast<std::size_t>(rm1_)][urem];
    scratch_ *= sum + static_cast<unsigned long>(rem) * static_cast<unsigned long>(rm1_);
    if (scratch_ < *lo_) {
      ++stats.nodes_pruned_upper;
      return true;
    }
    scratch_ = product * tables_.d_pow[static_cast<std::size_t>(min_d)][urem];
    scratch_ *= sum + static_cast<unsigned long>(rem) * static_cast<unsigned long>(min_d);
    if (scratch_ > hi_) {
      ++stats.nodes_pruned_lower;
      return true;
    }
    return false;
  }

  void descend(std::int64_t rem, Digit min_d, unsigned long sum, JobOutcome& out) {
    ++out.stats.nodes_visited;
    const std::size_t depth = static_cast<std::size_t>(k_ - rem);
    const Natural& product = product_stack_[depth];
    if (rem == 0) {
      ++out.stats.leaves_tested;
      test_leaf(product, sum, out);
      return;
    }
    if (pruning_ && prune(rem, min_d, product, sum, out.stats)) return;
    for (Digit d = min_d; d <= rm1_; ++d) {
      product_stack_[depth + 1] = product;
      product_stack_[depth + 1] *= static_cast<unsigned long>(d);
      ++chosen_counts_[static_cast<std::size_t>(d)];
      descend(rem - 1, d, sum + static_cast<unsigned long>(d), out);
      --chosen_counts_[static_cast<std::size_t>(d)];
    }
  }

  void test_leaf(const Natural& product, unsigned long sum, JobOutcome& out) {
    scratch_ = product * sum;
    if (scratch_ < *lo_ || scratch_ > hi_) return;
    // N = P*S has exactly k digits; accept iff its digit multiset is the
    // multiset that produced it (then sum/product of N's own digits are S
    // and P, so N is SP by construction).
    leaf_counts_.assign(leaf_counts_.size(), 0);
    digits_scratch_ = scratch_;
    const auto r = static_cast<unsigned long>(r_);
    bool mismatch = false;
    while (digits_scratch_ != 0) {
      const auto digit = mpz_fdiv_q_ui(digits_scratch_.get_mpz_t(), digits_scratch_.get_mpz_t(), r);
      if (digit == 0) {
        mismatch = true;
        break;
      }
      ++leaf_counts_[static_cast<std::size_t>(digit)];
    }
    if (!mismatch && leaf_counts_ == chosen_counts_) {
      out.found.push_back(scratch_);
    }
  }

  const std::int64_t r_;
  const Digit rm1_;
  const PowerTables& tables_;
  const bool pruning_;

  std::int64_t k_ = 0;
  const Natural* lo_ = nullptr;
  Natural hi_;

  std::vector<Natural> product_stack_;
  std::vector<std::int64_t> chosen_counts_;
  std::vector<std::int64_t> leaf_counts_;
  Natural scratch_;
  Natural digits_scratch_;
};

}  // namespace

SearchConfig SearchConfig::with_proven_bound(Base base) {
  const Natural bound = improved_digit_bound(base);
  if (!bound.fits_slong_p()) {
    throw ResourceError("proven digit bound for base " + std::to_string(base.value()) +
                        " does not fit a machine integer; pass an explicit k_max");
  }
  return SearchConfig(base, bound.get_si());
}

SearchResult enumerate_sp(const SearchConfig& config) {
  const std::int64_t r = config.base.value();
  if (config.k_max < 1) {
    throw std::invalid_argument("k_max must be >= 1");
  }
  if (config.k_min < 1) {
    throw std::invalid_argument("k_min must be >= 1");
  }
  if (config.worker_count < 1) {
    throw std::invalid_argument("worker_count must be >= 1");
  }

  const double estimate = table_bytes_estimate(r, config.k_max);
  if (estimate > static_cast<double>(config.memory_budget_bytes)) {
    throw ResourceError("power tables for base " + std::to_string(r) + " with k_max " +
                        std::to_string(config.k_max) + " need roughly " +
                        std::to_string(static_cast<std::uint64_t>(estimate / (1 << 20))) +
                        " MiB, over the " +
                        std::to_string(config.memory_budget_bytes / (1 << 20)) +
                        " MiB budget");
  }

  const auto start = std::chrono::steady_clock::now();

  SearchResult result;
  result.capped_below_proven_bound = Natural(config.k_max) < improved_digit_bound(config.base);

  const PowerTables tables(r, config.k_max);

  // Per-k root expansion is sequential; the surviving (k, first digit)
  // subtrees become jobs.
  std::vector<Job> jobs;
  {
    Worker root_worker(r, config.k_max, tables, config.enable_pruning);
    for (std::int64_t k = config.k_min; k <= config.k_max; ++k) {
      if (!root_worker.open_digit_count(k, result.stats)) continue;
      for (Digit d = 1; d <= r - 1; ++d) {
        jobs.push_back(Job{k, d});
      }
    }
  }

  std::vector<JobOutcome> outcomes(jobs.size());
  const int workers = static_cast<int>(
      std::min<std::size_t>(static_cast<std::size_t>(config.worker_count), jobs.size()));

  auto run_jobs = [&](auto next_index) {
    Worker worker(r, config.k_max, tables, config.enable_pruning);
    std::int64_t open_k = -1;
    SearchStats ignored;
    for (std::size_t i = next_index(); i < jobs.size(); i = next_index()) {
      if (jobs[i].k != open_k) {
        // Re-derive the per-k bounds; the root bookkeeping already happened.
        worker.open_digit_count(jobs[i].k, ignored);
        open_k = jobs[i].k;
      }
      worker.run(jobs[i], outcomes[i]);
    }
  };

  if (workers <= 1) {
    std::size_t next = 0;
    run_jobs([&next] { return next++; });
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(static_cast<std::size_t>(workers));
    pool.reserve(static_cast<std::size_t>(workers));
    for (int t = 0; t < workers; ++t) {
      pool.emplace_back([&, t] {
        try {
          run_jobs([&next] { return next.fetch_add(1); });
        } catch (...) {
          errors[static_cast<std::size_t>(t)] = std::current_exception();
          next.store(jobs.size());  // stop the other workers
        }
      });
    }
    for (auto& thread : pool) thread.join();
    for (const auto& error : errors) {
      if (error) std::rethrow_exception(error);
    }
  }

  for (auto& outcome : outcomes) {
    result.stats.nodes_visited += outcome.stats.nodes_visited;
    result.stats.nodes_pruned_upper += outcome.stats.nodes_pruned_upper;
    result.stats.nodes_pruned_lower += outcome.stats.nodes_pruned_lower;
    result.stats.leaves_tested += outcome.stats.leaves_tested;
    for (auto& n : outcome.found) {
      result.sp_numbers.push_back(std::move(n));
    }
  }
  std::sort(result.sp_numbers.begin(), result.sp_numbers.end());
  // Each number has one digit count and one multiset, so one leaf at most
  // can emit it; duplicates would mean a search bug.
  if (std::adjacent_find(result.sp_numbers.begin(), result.sp_numbers.end()) !=
      result.sp_numbers.end()) {
    throw std::logic_error("duplicate value emitted by the multiset search");
  }

  result.stats.wall_time_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return result;
}

namespace {

std::vector<Natural> brute_force_small(std::int64_t r, unsigned long long limit) {
  std::vector<Natural> out;
  const auto base = static_cast<unsigned long long>(r);
  for (unsigned long long n = 1; n <= limit; ++n) {
    unsigned long long rest = n;
    unsigned __int128 product = 1;
    unsigned long long sum = 0;
    bool rejected = false;
    while (rest != 0) {
      const unsigned long long digit = rest % base;
      if (digit == 0) {
        rejected = true;
        break;
      }
      product *= digit;
      if (product > n) {
        // The sum can only grow, so product * sum already overshoots n.
        rejected = true;
        break;
      }
      sum += digit;
      rest /= base;
    }
    if (!rejected && product * sum == n) {
      out.emplace_back(static_cast<unsigned long>(n));
    }
  }
  return out;
}

}  // namespace

std::vector<Natural> brute_force_sp(Base base, const Natural& limit) {
  if (limit < 1) {
    throw std::invalid_argument("brute-force limit must be >= 1");
  }
  if (limit.fits_ulong_p()) {
    return brute_force_small(base.value(), limit.get_ui());
  }
  std::vector<Natural> out;
  for (Natural n = 1; n <= limit; ++n) {
    if (is_sp(n, base)) out.push_back(n);
  }
  return out;
}

}  // namespace spnum
