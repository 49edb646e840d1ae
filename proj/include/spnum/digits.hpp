#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <vector>

namespace spnum {

// Arbitrary-precision nonnegative integer. All arithmetic is exact.
using Natural = mpz_class;

// Exact rational, used wherever a ratio must not round.
using Rational = mpq_class;

using Digit = std::int64_t;

// A positional radix r >= 2. r = 0 and r = 1 are rejected at construction.
class Base {
 public:
  explicit Base(std::int64_t r);

  std::int64_t value() const { return r_; }

  friend bool operator==(Base a, Base b) { return a.r_ == b.r_; }
  friend bool operator!=(Base a, Base b) { return a.r_ != b.r_; }

 private:
  std::int64_t r_;
};

// The base-r expansion a0..an of a nonnegative integer, least significant
// digit first (index i holds the coefficient of r^i). The leading
// coefficient is nonzero except for the single-digit number 0.
class DigitVector {
 public:
  DigitVector(Base base, std::vector<Digit> coefficients);

  Base base() const { return base_; }
  const std::vector<Digit>& coefficients() const { return coefficients_; }

  // Number of digits, n + 1.
  std::size_t size() const { return coefficients_.size(); }
  // Highest exponent n.
  std::size_t max_exponent() const { return coefficients_.size() - 1; }

  Digit min_digit() const;
  Digit max_digit() const;
  bool has_zero_digit() const;

  friend bool operator==(const DigitVector& a, const DigitVector& b) {
    return a.base_ == b.base_ && a.coefficients_ == b.coefficients_;
  }

 private:
  Base base_;
  std::vector<Digit> coefficients_;
};

// Counts of each nonzero digit value. Digit 0 never appears: a number with
// a zero digit has digit product 0 and cannot be SP, so the enumerator only
// ever searches over nonzero digit content.
class DigitMultiset {
 public:
  DigitMultiset(Base base, std::map<Digit, std::uint64_t> counts);

  // Rejects vectors containing a zero digit.
  static DigitMultiset from_digits(const DigitVector& d);

  Base base() const { return base_; }
  const std::map<Digit, std::uint64_t>& counts() const { return counts_; }

  // k = total number of digits.
  std::uint64_t length() const;

  friend bool operator==(const DigitMultiset& a, const DigitMultiset& b) {
    return a.base_ == b.base_ && a.counts_ == b.counts_;
  }

 private:
  Base base_;
  std::map<Digit, std::uint64_t> counts_;
};

// Positional expansion of n >= 0 in the given base (0 becomes [0]).
DigitVector to_digits(const Natural& n, Base base);

// Exact Horner evaluation; inverse of to_digits for canonical vectors.
Natural value(const DigitVector& d);

Natural digit_sum(const DigitVector& d);
Natural digit_sum(const DigitMultiset& m);

Natural digit_product(const DigitVector& d);
Natural digit_product(const DigitMultiset& m);

// True iff n equals the product of its base-r digits times their sum.
// n must be >= 1; SP numbers are positive integers.
bool is_sp(const Natural& n, Base base);

// (r^k - 1)/(r - 1) = 1 + r + ... + r^(k-1), exactly. Requires k >= 1.
Natural repunit(Base base, std::int64_t k);

}  // namespace spnum
