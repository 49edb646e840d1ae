#pragma once

#include "spnum/digits.hpp"
#include "spnum/precision_real.hpp"

namespace spnum {

inline constexpr int kDefaultPrecision = 30;

// floor(B(r)) with the near-integer guard. Digit counts are integers, so
// the real-valued bound is floored; when the value sits within
// 10^(-precision/2) of an integer the floor is unreliable and the record
// is flagged instead of silently truncated. Exact-integer bounds known in
// closed form (r = 2) are resolved symbolically and never flagged.
struct FlooredBound {
  PrecisionReal bound;
  Natural floor_value;
  bool ambiguous = false;
};

// Per-base digit-count bounds and their comparison.
struct BoundReport {
  std::int64_t base = 0;
  Natural shah_ali_digits;
  Natural improved_digits;
  Natural improved_exponent;
  PrecisionReal conjectured_bound;
  Natural conjectured_digits;
  bool ambiguous_floor = false;
  Rational improvement_pct;

  explicit BoundReport(int precision = kDefaultPrecision)
      : conjectured_bound(precision) {}
};

// 2r(r-1)^2, exactly.
Natural shah_ali_digit_bound(Base base);

// 2(r-1)^3 - 2(r-1) + 1, exactly.
Natural improved_digit_bound(Base base);

// 2(r-1)^3 - 2(r-1), the cap on the highest exponent n.
Natural improved_exponent_bound(Base base);

// B(r) = W_-1((ln(r-1) - ln r)/r) / (ln(r-1) - ln r), the real-valued
// bound on the digit count n+1. The W argument is negative and >= -1/e
// for every integer r >= 2; this is asserted, not assumed.
PrecisionReal conjectured_digit_bound(Base base, int precision = kDefaultPrecision);

FlooredBound conjectured_digit_floor(Base base, int precision = kDefaultPrecision);

// 100 * (shah_ali - improved) / shah_ali as an exact rational.
Rational improvement_pct(Base base);

BoundReport bound_report(Base base, int precision = kDefaultPrecision);

}  // namespace spnum
