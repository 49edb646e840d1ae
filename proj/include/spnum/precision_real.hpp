#pragma once

#include <mpfr.h>

#include <string>
#include <string_view>

#include "spnum/digits.hpp"

namespace spnum {

// Real number with an explicit decimal precision, backed by MPFR.
// Precision is a property of each value, never ambient state; binary
// operations produce a result at the wider of the two precisions.
// Values are immutable apart from whole-value assignment.
class PrecisionReal {
 public:
  static constexpr int kMinDigits = 15;

  // A NaN placeholder at the given precision.
  explicit PrecisionReal(int digits10);
  PrecisionReal(const PrecisionReal& other);
  PrecisionReal(PrecisionReal&& other) noexcept;
  PrecisionReal& operator=(const PrecisionReal& other);
  PrecisionReal& operator=(PrecisionReal&& other) noexcept;
  ~PrecisionReal();

  static PrecisionReal of(double v, int digits10);
  static PrecisionReal of(long v, int digits10);
  static PrecisionReal of(const Natural& v, int digits10);
  static PrecisionReal from_string(std::string_view text, int digits10);
  // 10^e, used for tolerances.
  static PrecisionReal pow10(long e, int digits10);

  int digits10() const { return digits10_; }
  // Exact when widening; rounds when narrowing.
  PrecisionReal with_digits(int digits10) const;

  bool is_nan() const;
  bool is_negative() const;
  double to_double() const;
  // Decimal rendering with the value's full precision (or fewer digits).
  std::string str(int significant_digits = 0) const;

  Natural floor() const;
  Natural round() const;

  PrecisionReal operator-() const;
  PrecisionReal& negate();

  friend PrecisionReal operator+(const PrecisionReal& a, const PrecisionReal& b);
  friend PrecisionReal operator-(const PrecisionReal& a, const PrecisionReal& b);
  friend PrecisionReal operator*(const PrecisionReal& a, const PrecisionReal& b);
  friend PrecisionReal operator/(const PrecisionReal& a, const PrecisionReal& b);

  friend PrecisionReal exp(const PrecisionReal& a);
  friend PrecisionReal log(const PrecisionReal& a);
  friend PrecisionReal sqrt(const PrecisionReal& a);
  friend PrecisionReal abs(const PrecisionReal& a);

  // Three-way comparison of values (NaN compares unequal to everything).
  friend int cmp(const PrecisionReal& a, const PrecisionReal& b);
  friend bool operator<(const PrecisionReal& a, const PrecisionReal& b) { return cmp(a, b) < 0; }
  friend bool operator>(const PrecisionReal& a, const PrecisionReal& b) { return cmp(a, b) > 0; }
  friend bool operator<=(const PrecisionReal& a, const PrecisionReal& b) { return cmp(a, b) <= 0; }
  friend bool operator>=(const PrecisionReal& a, const PrecisionReal& b) { return cmp(a, b) >= 0; }
  friend bool operator==(const PrecisionReal& a, const PrecisionReal& b);
  friend bool operator!=(const PrecisionReal& a, const PrecisionReal& b) { return !(a == b); }

  const mpfr_t& raw() const { return v_; }

 private:
  static mpfr_prec_t bits_for(int digits10);

  mpfr_t v_;
  int digits10_;
};

}  // namespace spnum
