#include "spnum/lambertw.hpp"

#include <algorithm>
#include <stdexcept>

#include "spnum/errors.hpp"

namespace spnum {

namespace {

constexpr int kGuardDigits = 10;
constexpr int kIterationCap = 200;

// One Halley step for f(w) = w*e^w - x:
//   w' = w - f / (f' - f*f'' / (2 f'))
// with f' = e^w (1 + w) and f'' = e^w (2 + w).
PrecisionReal halley_step(const PrecisionReal& w, const PrecisionReal& x, int wp) {
  const PrecisionReal one = PrecisionReal::of(1L, wp);
  const PrecisionReal two = PrecisionReal::of(2L, wp);
  const PrecisionReal ew = exp(w);
  const PrecisionReal f = w * ew - x;
  const PrecisionReal fp = ew * (one + w);
  const PrecisionReal fpp = ew * (two + w);
  return w - f / (fp - f * fpp / (two * fp));
}

}  // namespace

PrecisionReal w_defining_residual(const PrecisionReal& w, const PrecisionReal& x) {
  return w * exp(w) - x;
}

WEvaluation lambert_w_minus1(const PrecisionReal& x, int precision) {
  if (precision < PrecisionReal::kMinDigits) {
    throw std::invalid_argument("precision must be >= 15 decimal digits");
  }
  // Guard digits absorb cancellation near the branch point; never narrow
  // an argument that arrives wider than the working precision.
  const int wp = std::max(precision + kGuardDigits, x.digits10());

  if (x.is_nan() || !x.is_negative()) {
    throw std::domain_error("W_-1 requires -1/e <= x < 0, got " + x.str());
  }

  const PrecisionReal one = PrecisionReal::of(1L, wp);
  const PrecisionReal two = PrecisionReal::of(2L, wp);
  const PrecisionReal xw = x.with_digits(wp);
  const PrecisionReal e_const = exp(one);

  // Domain check against -1/e with a rounding-width band: arguments within
  // one working-precision ulp below the branch point are treated as the
  // branch point itself, anything further below is rejected.
  const PrecisionReal minus_inv_e = -(one / e_const);
  const PrecisionReal band = abs(minus_inv_e) * PrecisionReal::pow10(-(wp - 2), wp);
  if (xw < minus_inv_e - band) {
    throw std::domain_error("W_-1 requires x >= -1/e, got " + x.str());
  }

  // s^2 = 2 (1 + e x) is nonpositive only within rounding of the branch
  // point, where W_-1 = -1 exactly.
  const PrecisionReal s_sq = two * (one + e_const * xw);

  PrecisionReal w(wp);
  int iterations = 0;
  if (!(s_sq > PrecisionReal::of(0L, wp))) {
    w = PrecisionReal::of(-1L, wp);
  } else {
    if (xw < PrecisionReal::of(-0.25, wp)) {
      // Branch-point series: w = -1 - s - s^2/3 + O(s^3).
      const PrecisionReal s = sqrt(s_sq);
      w = -one - s - s_sq / PrecisionReal::of(3L, wp);
    } else {
      // Asymptotic toward x -> 0^-: w = ln(-x) - ln(-ln(-x)).
      const PrecisionReal l1 = log(-xw);
      w = l1 - log(-l1);
    }

    // Iterate until the step stalls at working precision.
    const PrecisionReal step_tol = abs(w) * PrecisionReal::pow10(-(wp - 2), wp);
    const PrecisionReal minus_one = PrecisionReal::of(-1L, wp);
    for (; iterations < kIterationCap; ++iterations) {
      PrecisionReal next = halley_step(w, xw, wp);
      if (!(next < minus_one)) {
        // A step escaped the branch; pull back toward w = -1 and retry.
        next = (w + minus_one) / two;
      }
      const PrecisionReal delta = abs(next - w);
      w = next;
      if (delta <= step_tol) break;
    }
  }

  // Certify by re-measuring the residual at twice the requested precision.
  const int cp = std::max(2 * precision, wp + kGuardDigits);
  const PrecisionReal residual = w_defining_residual(w.with_digits(cp), xw.with_digits(cp));
  const PrecisionReal tolerance = PrecisionReal::pow10(2 - precision, cp) * abs(xw);
  if (!(abs(residual) <= tolerance)) {
    throw ConvergenceError("W_-1 residual certificate failed at x = " + x.str() +
                           " after " + std::to_string(iterations) + " iterations");
  }
  return WEvaluation{x, w, residual, iterations};
}

}  // namespace spnum
