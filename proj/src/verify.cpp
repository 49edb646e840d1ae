#include "spnum/verify.hpp"

#include <atomic>
#include <stdexcept>
#include <string>
#include <thread>

#include "spnum/errors.hpp"
#include "spnum/lambertw.hpp"
#include "spnum/search.hpp"

namespace spnum {

namespace {

void require_nonzero_digits(const DigitVector& d) {
  if (d.has_zero_digit()) {
    throw std::invalid_argument("vector contains a zero digit");
  }
}

void require_chain_args(std::int64_t r, std::int64_t n) {
  if (r < 2) throw std::invalid_argument("base must be >= 2");
  if (n < 0) throw std::invalid_argument("n must be >= 0");
}

Natural pow_int(std::int64_t b, std::int64_t e) {
  Natural out(b);
  mpz_pow_ui(out.get_mpz_t(), out.get_mpz_t(), static_cast<unsigned long>(e));
  return out;
}

Rational make_rational(Natural num, Natural den) {
  Rational q(std::move(num), std::move(den));
  q.canonicalize();
  return q;
}

}  // namespace

bool check_min_repunit(const DigitVector& d) {
  require_nonzero_digits(d);
  const Natural lhs = Natural(d.min_digit()) *
                      repunit(d.base(), static_cast<std::int64_t>(d.size()));
  return lhs <= value(d);
}

bool check_hip_upper(const DigitVector& d) {
  require_nonzero_digits(d);
  // product / min is exact: the minimum is one of the factors.
  Natural reduced = digit_product(d);
  mpz_divexact_ui(reduced.get_mpz_t(), reduced.get_mpz_t(),
                  static_cast<unsigned long>(d.min_digit()));
  const Natural lhs = reduced * digit_sum(d);
  const auto digit_count = static_cast<std::int64_t>(d.size());
  const Natural rhs = pow_int(d.base().value() - 1, digit_count) * digit_count;
  return lhs <= rhs;
}

bool eq1_holds(std::int64_t r, std::int64_t n) {
  require_chain_args(r, n);
  // Both sides multiplied by (r-1)^(n+1) > 0.
  const Natural lhs = pow_int(r, n + 1);
  const Natural rhs = (n + 1) * pow_int(r - 1, n + 2) + 1;
  return lhs <= rhs;
}

bool eq2_holds(std::int64_t r, std::int64_t n) {
  require_chain_args(r, n);
  const Natural rm1(r - 1);
  Rational lhs = make_rational(Natural(n + 1), rm1) +
                 make_rational(Natural(n + 1) * n, 2 * rm1 * rm1) + 1;
  Rational rhs = make_rational(Natural(1), pow_int(r - 1, n + 1)) + Natural(n + 1) * rm1;
  return lhs <= rhs;
}

bool eq3_holds(std::int64_t r, std::int64_t n) {
  require_chain_args(r, n);
  const Natural rm1(r - 1);
  // (r-1)^(1-n) as an exact rational; the exponent is negative for n >= 2.
  const Rational power_term = n <= 1 ? Rational(pow_int(r - 1, 1 - n))
                                     : make_rational(Natural(1), pow_int(r - 1, n - 1));
  Rational rhs = Rational(2 * rm1 * rm1 * rm1 - 2 * rm1) +
                 make_rational(Natural(2), Natural(n + 1)) * (power_term - rm1 * rm1);
  return Rational(n) <= rhs;
}

ChainReport check_chain(std::int64_t r, std::int64_t n) {
  return ChainReport{r, n, eq1_holds(r, n), eq2_holds(r, n), eq3_holds(r, n)};
}

std::int64_t max_n_satisfying_eq1(std::int64_t r) {
  if (r < 2) throw std::invalid_argument("base must be >= 2");
  const Natural exponent_bound = improved_exponent_bound(Base(r));
  const Natural scan_cap = exponent_bound + 64;

  // Walk n upward keeping lhs = r^(n+1) and rhs_pow = (r-1)^(n+2)
  // incrementally. Once eq1 fails at some n >= r-2 it fails for every
  // larger n: from r^(n+1) >= (n+1)(r-1)^(n+2) + 2, multiplying by r and
  // using r(n+1) >= (r-1)(n+2) (that is, n+2 >= r) gives
  // r^(n+2) >= (n+2)(r-1)^(n+3) + 2. The scan therefore stops at the
  // first such failure.
  std::int64_t last_hold = -1;
  Natural lhs(r);
  Natural rhs_pow = Natural(r - 1) * (r - 1);
  for (Natural n = 0; n <= scan_cap; ++n) {
    const bool holds = lhs <= (n + 1) * rhs_pow + 1;
    if (holds) {
      if (!n.fits_slong_p()) {
        throw std::logic_error("eq1 crossover exceeds machine range");
      }
      last_hold = n.get_si();
    } else if (n >= r - 2) {
      break;
    }
    lhs *= r;
    rhs_pow *= r - 1;
  }

  if (last_hold >= 0 && Natural(last_hold) > exponent_bound) {
    throw std::logic_error("eq1 holds beyond the proven exponent bound for base " +
                           std::to_string(r) + "; this would falsify the cubic bound");
  }
  return last_hold;
}

namespace {

ConjectureRecord make_conjecture_record(std::int64_t r, int precision) {
  ConjectureRecord record(precision);
  record.base = r;
  FlooredBound floored = conjectured_digit_floor(Base(r), precision);
  record.bound_real = std::move(floored.bound);
  record.bound_floor = std::move(floored.floor_value);
  record.ambiguous_floor = floored.ambiguous;
  record.m0 = record.bound_floor + 1;

  if (!record.m0.fits_ulong_p() || record.m0.get_ui() > 100000000ul) {
    throw ResourceError("crossover exponent too large for base " + std::to_string(r));
  }
  const auto m0 = record.m0.get_ui();

  // Exact crossover exclusion at m0: r^(m0-1) > m0 (r-1)^m0 means no
  // m0-digit SP number is feasible.
  Natural lhs(r);
  mpz_pow_ui(lhs.get_mpz_t(), lhs.get_mpz_t(), m0 - 1);
  Natural rhs(r - 1);
  mpz_pow_ui(rhs.get_mpz_t(), rhs.get_mpz_t(), m0);
  rhs *= record.m0;
  record.crossover_holds = lhs > rhs;

  // m0 > r makes the gap (m-1)ln r - ln m - m ln(r-1) increasing for all
  // m >= m0 (its derivative ln(r/(r-1)) - 1/m is positive once m > r,
  // since ln(r/(r-1)) > 1/r), so the single check covers every larger m.
  record.monotone_guard = record.m0 > r;
  return record;
}

}  // namespace

std::vector<ConjectureRecord> verify_conjecture_range(std::int64_t r_lo, std::int64_t r_hi,
                                                      int precision, int worker_count) {
  if (r_lo < 2 || r_hi < r_lo) {
    throw std::invalid_argument("need 2 <= r_lo <= r_hi");
  }
  if (worker_count < 1) {
    throw std::invalid_argument("worker_count must be >= 1");
  }

  const auto count = static_cast<std::size_t>(r_hi - r_lo + 1);
  std::vector<ConjectureRecord> records(count, ConjectureRecord(precision));

  if (worker_count == 1 || count == 1) {
    for (std::size_t i = 0; i < count; ++i) {
      records[i] = make_conjecture_record(r_lo + static_cast<std::int64_t>(i), precision);
    }
    return records;
  }

  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  const auto workers = std::min<std::size_t>(static_cast<std::size_t>(worker_count), count);
  std::vector<std::exception_ptr> errors(workers);
  pool.reserve(workers);
  for (std::size_t t = 0; t < workers; ++t) {
    pool.emplace_back([&, t] {
      try {
        for (std::size_t i = next.fetch_add(1); i < count; i = next.fetch_add(1)) {
          records[i] = make_conjecture_record(r_lo + static_cast<std::int64_t>(i), precision);
        }
      } catch (...) {
        errors[t] = std::current_exception();
        next.store(count);  // stop the other workers
      }
    });
  }
  for (auto& thread : pool) thread.join();
  for (const auto& error : errors) {
    if (error) std::rethrow_exception(error);
  }
  return records;
}

bool conjecture_enumeration_cross_check(Base base, int precision) {
  const FlooredBound floored = conjectured_digit_floor(base, precision);
  const Natural proven = improved_digit_bound(base);
  if (floored.floor_value >= proven) {
    return true;  // the band above the conjectured floor is empty
  }
  if (!proven.fits_slong_p() || !floored.floor_value.fits_slong_p()) {
    throw ResourceError("enumeration cross-check is not tractable for base " +
                        std::to_string(base.value()));
  }
  SearchConfig config(base, proven.get_si());
  config.k_min = floored.floor_value.get_si() + 1;
  return enumerate_sp(config).sp_numbers.empty();
}

}  // namespace spnum
