#include "spnum/bounds.hpp"

#include <stdexcept>

#include "spnum/lambertw.hpp"

namespace spnum {

Natural shah_ali_digit_bound(Base base) {
  const Natural rm1(base.value() - 1);
  return 2 * Natural(base.value()) * rm1 * rm1;
}

Natural improved_digit_bound(Base base) {
  return improved_exponent_bound(base) + 1;
}

Natural improved_exponent_bound(Base base) {
  const Natural rm1(base.value() - 1);
  return 2 * rm1 * rm1 * rm1 - 2 * rm1;
}

PrecisionReal conjectured_digit_bound(Base base, int precision) {
  const int wp = precision + 10;
  const std::int64_t r = base.value();

  // log_ratio = ln(r-1) - ln(r) < 0; the W argument is log_ratio / r.
  const PrecisionReal log_ratio =
      log(PrecisionReal::of(static_cast<long>(r - 1), wp)) -
      log(PrecisionReal::of(static_cast<long>(r), wp));
  const PrecisionReal arg = log_ratio / PrecisionReal::of(static_cast<long>(r), wp);

  const PrecisionReal minus_inv_e = -(PrecisionReal::of(1L, wp) / exp(PrecisionReal::of(1L, wp)));
  if (!(arg < PrecisionReal::of(0L, wp)) || arg < minus_inv_e) {
    throw std::logic_error("W argument out of [-1/e, 0) for base " + std::to_string(r));
  }

  const WEvaluation w = lambert_w_minus1(arg, precision);
  return (w.result / log_ratio).with_digits(precision);
}

FlooredBound conjectured_digit_floor(Base base, int precision) {
  PrecisionReal bound = conjectured_digit_bound(base, precision);
  if (base.value() == 2) {
    // W_-1(-(ln 2)/2) = -2 ln 2, since (-2 ln 2) e^(-2 ln 2) = -(ln 2)/2;
    // hence B(2) = (-2 ln 2)/(-ln 2) = 2 exactly, resolved symbolically.
    return FlooredBound{std::move(bound), Natural(2), false};
  }
  const PrecisionReal distance = abs(bound - PrecisionReal::of(bound.round(), bound.digits10()));
  const bool ambiguous = distance < PrecisionReal::pow10(-(precision / 2), bound.digits10());
  Natural floor_value = bound.floor();
  return FlooredBound{std::move(bound), std::move(floor_value), ambiguous};
}

Rational improvement_pct(Base base) {
  const Natural shah_ali = shah_ali_digit_bound(base);
  const Natural improved = improved_digit_bound(base);
  Rational pct(100 * (shah_ali - improved), shah_ali);
  pct.canonicalize();
  return pct;
}

BoundReport bound_report(Base base, int precision) {
  BoundReport report(precision);
  report.base = base.value();
  report.shah_ali_digits = shah_ali_digit_bound(base);
  report.improved_digits = improved_digit_bound(base);
  report.improved_exponent = improved_exponent_bound(base);
  FlooredBound floored = conjectured_digit_floor(base, precision);
  report.conjectured_bound = std::move(floored.bound);
  report.conjectured_digits = std::move(floored.floor_value);
  report.ambiguous_floor = floored.ambiguous;
  report.improvement_pct = improvement_pct(base);
  return report;
}

}  // namespace spnum
