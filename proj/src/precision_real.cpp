#include "spnum/precision_real.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>
#include <vector>

namespace spnum {

mpfr_prec_t PrecisionReal::bits_for(int digits10) {
  if (digits10 < kMinDigits) {
    throw std::invalid_argument("precision must be >= 15 decimal digits, got " +
                                std::to_string(digits10));
  }
  // log2(10) = 3.3219...; a few extra bits so the decimal precision is met.
  return static_cast<mpfr_prec_t>(digits10 * 3.3219280948873623 + 8);
}

PrecisionReal::PrecisionReal(int digits10) : digits10_(digits10) {
  mpfr_init2(v_, bits_for(digits10));
  mpfr_set_nan(v_);
}

PrecisionReal::PrecisionReal(const PrecisionReal& other) : digits10_(other.digits10_) {
  mpfr_init2(v_, mpfr_get_prec(other.v_));
  mpfr_set(v_, other.v_, MPFR_RNDN);
}

PrecisionReal::PrecisionReal(PrecisionReal&& other) noexcept : digits10_(other.digits10_) {
  mpfr_init2(v_, mpfr_get_prec(other.v_));
  mpfr_swap(v_, other.v_);
}

PrecisionReal& PrecisionReal::operator=(const PrecisionReal& other) {
  if (this != &other) {
    mpfr_set_prec(v_, mpfr_get_prec(other.v_));
    mpfr_set(v_, other.v_, MPFR_RNDN);
    digits10_ = other.digits10_;
  }
  return *this;
}

PrecisionReal& PrecisionReal::operator=(PrecisionReal&& other) noexcept {
  if (this != &other) {
    mpfr_swap(v_, other.v_);
    digits10_ = other.digits10_;
  }
  return *this;
}

PrecisionReal::~PrecisionReal() { mpfr_clear(v_); }

PrecisionReal PrecisionReal::of(double v, int digits10) {
  PrecisionReal out(digits10);
  mpfr_set_d(out.v_, v, MPFR_RNDN);
  return out;
}

PrecisionReal PrecisionReal::of(long v, int digits10) {
  PrecisionReal out(digits10);
  mpfr_set_si(out.v_, v, MPFR_RNDN);
  return out;
}

PrecisionReal PrecisionReal::of(const Natural& v, int digits10) {
  PrecisionReal out(digits10);
  mpfr_set_z(out.v_, v.get_mpz_t(), MPFR_RNDN);
  return out;
}

PrecisionReal PrecisionReal::from_string(std::string_view text, int digits10) {
  PrecisionReal out(digits10);
  const std::string owned(text);
  if (mpfr_set_str(out.v_, owned.c_str(), 10, MPFR_RNDN) != 0) {
    throw std::invalid_argument("cannot parse real number: '" + owned + "'");
  }
  return out;
}

PrecisionReal PrecisionReal::pow10(long e, int digits10) {
  PrecisionReal out(digits10);
  if (e >= 0) {
    mpfr_ui_pow_ui(out.v_, 10, static_cast<unsigned long>(e), MPFR_RNDN);
  } else {
    mpfr_ui_pow_ui(out.v_, 10, static_cast<unsigned long>(-e), MPFR_RNDN);
    mpfr_ui_div(out.v_, 1, out.v_, MPFR_RNDN);
  }
  return out;
}

PrecisionReal PrecisionReal::with_digits(int digits10) const {
  PrecisionReal out(digits10);
  mpfr_set(out.v_, v_, MPFR_RNDN);
  return out;
}

bool PrecisionReal::is_nan() const { return mpfr_nan_p(v_) != 0; }

bool PrecisionReal::is_negative() const { return mpfr_sgn(v_) < 0; }

double PrecisionReal::to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

std::string PrecisionReal::str(int significant_digits) const {
  const int digits = significant_digits > 0 ? significant_digits : digits10_;
  std::vector<char> buf(static_cast<std::size_t>(digits) + 32);
  mpfr_snprintf(buf.data(), buf.size(), "%.*Rg", digits, v_);
  return std::string(buf.data());
}

Natural PrecisionReal::floor() const {
  if (is_nan()) throw std::domain_error("floor of NaN");
  Natural out;
  mpfr_get_z(out.get_mpz_t(), v_, MPFR_RNDD);
  return out;
}

Natural PrecisionReal::round() const {
  if (is_nan()) throw std::domain_error("round of NaN");
  Natural out;
  mpfr_get_z(out.get_mpz_t(), v_, MPFR_RNDN);
  return out;
}

PrecisionReal PrecisionReal::operator-() const {
  PrecisionReal out(*this);
  mpfr_neg(out.v_, out.v_, MPFR_RNDN);
  return out;
}

PrecisionReal& PrecisionReal::negate() {
  mpfr_neg(v_, v_, MPFR_RNDN);
  return *this;
}

namespace {
int wider(const PrecisionReal& a, const PrecisionReal& b) {
  return a.digits10() > b.digits10() ? a.digits10() : b.digits10();
}
}  // namespace

PrecisionReal operator+(const PrecisionReal& a, const PrecisionReal& b) {
  PrecisionReal out(wider(a, b));
  mpfr_add(out.v_, a.v_, b.v_, MPFR_RNDN);
  return out;
}

PrecisionReal operator-(const PrecisionReal& a, const PrecisionReal& b) {
  PrecisionReal out(wider(a, b));
  mpfr_sub(out.v_, a.v_, b.v_, MPFR_RNDN);
  return out;
}

PrecisionReal operator*(const PrecisionReal& a, const PrecisionReal& b) {
  PrecisionReal out(wider(a, b));
  mpfr_mul(out.v_, a.v_, b.v_, MPFR_RNDN);
  return out;
}

PrecisionReal operator/(const PrecisionReal& a, const PrecisionReal& b) {
  PrecisionReal out(wider(a, b));
  mpfr_div(out.v_, a.v_, b.v_, MPFR_RNDN);
  return out;
}

PrecisionReal exp(const PrecisionReal& a) {
  PrecisionReal out(a.digits10());
  mpfr_exp(out.v_, a.v_, MPFR_RNDN);
  return out;
}

PrecisionReal log(const PrecisionReal& a) {
  PrecisionReal out(a.digits10());
  mpfr_log(out.v_, a.v_, MPFR_RNDN);
  return out;
}

PrecisionReal sqrt(const PrecisionReal& a) {
  PrecisionReal out(a.digits10());
  mpfr_sqrt(out.v_, a.v_, MPFR_RNDN);
  return out;
}

PrecisionReal abs(const PrecisionReal& a) {
  PrecisionReal out(a.digits10());
  mpfr_abs(out.v_, a.v_, MPFR_RNDN);
  return out;
}

int cmp(const PrecisionReal& a, const PrecisionReal& b) {
  return mpfr_cmp(a.v_, b.v_);
}

bool operator==(const PrecisionReal& a, const PrecisionReal& b) {
  return mpfr_equal_p(a.v_, b.v_) != 0;
}

}  // namespace spnum
