#pragma once

#include "spnum/precision_real.hpp"

namespace spnum {

// One certified evaluation of W on branch -1: w solves w*e^w = x with
// w <= -1, and |residual| = |w*e^w - x| was re-measured at twice the
// requested precision after the iteration finished.
struct WEvaluation {
  PrecisionReal argument;
  PrecisionReal result;
  PrecisionReal residual;
  int iterations = 0;
};

// Evaluates the Lambert W function, branch -1, on its real domain
// [-1/e, 0). Seeds with the branch-point series near -1/e and with the
// log asymptotic elsewhere, then runs Halley's iteration on
// f(w) = w*e^w - x at `precision` + 10 guard digits until the residual
// certificate |w*e^w - x| <= 10^(2 - precision) * |x| holds.
//
// Throws std::domain_error for x outside [-1/e, 0), std::invalid_argument
// for precision < 15, and ConvergenceError if the certificate cannot be
// met within the iteration cap (an internal fault, not a user condition).
WEvaluation lambert_w_minus1(const PrecisionReal& x, int precision);

// w*e^w - x at the working precision of the inputs; the certification
// primitive used both inside lambert_w_minus1 and by external checks.
PrecisionReal w_defining_residual(const PrecisionReal& w, const PrecisionReal& x);

}  // namespace spnum
