#pragma once

#include <cstdint>
#include <vector>

#include "spnum/bounds.hpp"
#include "spnum/digits.hpp"
#include "spnum/precision_real.hpp"

namespace spnum {

// Outcome of checking one base against the conjectured Lambert-W bound.
// The bound is real-valued; m0 = floor(B(r)) + 1 is the first integer
// digit count the conjecture rules out. The record is verified when the
// crossover inequality excludes m0 in exact integers, the monotone guard
// m0 > r extends that exclusion to every larger digit count, and the
// floor itself was unambiguous.
struct ConjectureRecord {
  std::int64_t base = 0;
  PrecisionReal bound_real;
  Natural bound_floor;
  Natural m0;
  bool crossover_holds = false;
  bool monotone_guard = false;
  bool ambiguous_floor = false;

  explicit ConjectureRecord(int precision = kDefaultPrecision)
      : bound_real(precision) {}

  bool verified() const {
    return crossover_holds && monotone_guard && !ambiguous_floor;
  }
};

// Truth values of the inequality chain at one (base, n).
struct ChainReport {
  std::int64_t base = 0;
  std::int64_t n = 0;
  bool eq1 = false;
  bool eq2 = false;
  bool eq3 = false;

  // eq1 implies eq2, and eq2 holds exactly when eq3 does.
  bool consistent() const { return (!eq1 || eq2) && (eq2 == eq3); }
};

// min(a_i) * repunit(r, n+1) <= value(d). Holds for every all-nonzero
// vector; when value(d) is SP the right side equals product * sum.
// Rejects vectors containing a zero digit.
bool check_min_repunit(const DigitVector& d);

// (product / min) * sum <= (r-1)^(n+1) * (n+1), in exact integers (min
// divides the product, being one of its factors). Holds for every
// all-nonzero vector. Rejects vectors containing a zero digit.
bool check_hip_upper(const DigitVector& d);

// (r/(r-1))^(n+1) <= (n+1)(r-1) + 1/(r-1)^(n+1), cleared of denominators:
// compares r^(n+1) <= (n+1)(r-1)^(n+2) + 1 in integers.
bool eq1_holds(std::int64_t r, std::int64_t n);

// 1 + (n+1)/(r-1) + (n+1)n/(2(r-1)^2) <= (n+1)(r-1) + 1/(r-1)^(n+1),
// in exact rationals.
bool eq2_holds(std::int64_t r, std::int64_t n);

// n <= 2(r-1)^3 - 2(r-1) + (2/(n+1)) * ((r-1)^(1-n) - (r-1)^2),
// in exact rationals.
bool eq3_holds(std::int64_t r, std::int64_t n);

ChainReport check_chain(std::int64_t r, std::int64_t n);

// Largest n satisfying eq1, certified exhaustive: the scan walks n upward
// and stops at the first failure with n >= r-2, beyond which failure is
// inductive (r(n+1) >= (r-1)(n+2) once n+2 >= r, so a failing eq1 stays
// failing). Throws std::logic_error if the result exceeds the proven
// exponent bound, which would falsify the cubic bound itself.
std::int64_t max_n_satisfying_eq1(std::int64_t r);

// One conjecture record per base in [r_lo, r_hi], ascending. Records are
// independent and may be computed on worker_count threads; emission order
// is by base regardless of completion order.
std::vector<ConjectureRecord> verify_conjecture_range(std::int64_t r_lo,
                                                      std::int64_t r_hi,
                                                      int precision = kDefaultPrecision,
                                                      int worker_count = 1);

// Cross-checks the conjecture against enumerated data: searches the digit
// counts between floor(B(r)) + 1 and the proven cubic bound and reports
// whether that band is empty. Tractable for small bases only (r <= 12).
bool conjecture_enumeration_cross_check(Base base, int precision = kDefaultPrecision);

}  // namespace spnum
