#include "spnum/digits.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace spnum {

Base::Base(std::int64_t r) : r_(r) {
  if (r < 2) {
    throw std::invalid_argument("base must be >= 2, got " + std::to_string(r));
  }
}

DigitVector::DigitVector(Base base, std::vector<Digit> coefficients)
    : base_(base), coefficients_(std::move(coefficients)) {
  if (coefficients_.empty()) {
    throw std::invalid_argument("digit vector must hold at least one digit");
  }
  const std::int64_t r = base_.value();
  for (Digit d : coefficients_) {
    if (d < 0 || d >= r) {
      throw std::invalid_argument("digit " + std::to_string(d) +
                                  " out of range for base " + std::to_string(r));
    }
  }
  if (coefficients_.size() > 1 && coefficients_.back() == 0) {
    throw std::invalid_argument("leading digit must be nonzero");
  }
}

Digit DigitVector::min_digit() const {
  return *std::min_element(coefficients_.begin(), coefficients_.end());
}

Digit DigitVector::max_digit() const {
  return *std::max_element(coefficients_.begin(), coefficients_.end());
}

bool DigitVector::has_zero_digit() const {
  return std::find(coefficients_.begin(), coefficients_.end(), 0) !=
         coefficients_.end();
}

DigitMultiset::DigitMultiset(Base base, std::map<Digit, std::uint64_t> counts)
    : base_(base), counts_(std::move(counts)) {
  const std::int64_t r = base_.value();
  for (auto it = counts_.begin(); it != counts_.end();) {
    if (it->second == 0) {
      it = counts_.erase(it);
      continue;
    }
    if (it->first < 1 || it->first >= r) {
      throw std::invalid_argument("multiset digit " + std::to_string(it->first) +
                                  " out of [1, r-1] for base " + std::to_string(r));
    }
    ++it;
  }
  if (counts_.empty()) {
    throw std::invalid_argument("digit multiset must be nonempty");
  }
}

DigitMultiset DigitMultiset::from_digits(const DigitVector& d) {
  std::map<Digit, std::uint64_t> counts;
  for (Digit a : d.coefficients()) {
    if (a == 0) {
      throw std::invalid_argument("digit multiset cannot contain the digit 0");
    }
    ++counts[a];
  }
  return DigitMultiset(d.base(), std::move(counts));
}

std::uint64_t DigitMultiset::length() const {
  std::uint64_t k = 0;
  for (const auto& [digit, count] : counts_) k += count;
  return k;
}

DigitVector to_digits(const Natural& n, Base base) {
  if (n < 0) {
    throw std::invalid_argument("cannot expand a negative number");
  }
  std::vector<Digit> coeffs;
  if (n == 0) {
    coeffs.push_back(0);
    return DigitVector(base, std::move(coeffs));
  }
  const auto r = static_cast<unsigned long>(base.value());
  Natural rest = n;
  while (rest != 0) {
    coeffs.push_back(static_cast<Digit>(mpz_fdiv_q_ui(rest.get_mpz_t(), rest.get_mpz_t(), r)));
  }
  return DigitVector(base, std::move(coeffs));
}

Natural value(const DigitVector& d) {
  Natural acc = 0;
  const auto& c = d.coefficients();
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    acc *= d.base().value();
    acc += *it;
  }
  return acc;
}

Natural digit_sum(const DigitVector& d) {
  Natural s = 0;
  for (Digit a : d.coefficients()) s += a;
  return s;
}

Natural digit_sum(const DigitMultiset& m) {
  Natural s = 0;
  for (const auto& [digit, count] : m.counts()) {
    s += Natural(digit) * static_cast<unsigned long>(count);
  }
  return s;
}

Natural digit_product(const DigitVector& d) {
  Natural p = 1;
  for (Digit a : d.coefficients()) {
    if (a == 0) return Natural(0);
    p *= a;
  }
  return p;
}

Natural digit_product(const DigitMultiset& m) {
  Natural p = 1;
  Natural base;
  for (const auto& [digit, count] : m.counts()) {
    base = digit;
    mpz_pow_ui(base.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(count));
    p *= base;
  }
  return p;
}

bool is_sp(const Natural& n, Base base) {
  if (n < 1) {
    throw std::invalid_argument("SP numbers are positive integers");
  }
  const DigitVector d = to_digits(n, base);
  if (d.has_zero_digit()) return false;
  return n == digit_product(d) * digit_sum(d);
}

Natural repunit(Base base, std::int64_t k) {
  if (k < 1) {
    throw std::invalid_argument("repunit length must be >= 1");
  }
  Natural p(base.value());
  mpz_pow_ui(p.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(k));
  p -= 1;
  mpz_divexact_ui(p.get_mpz_t(), p.get_mpz_t(),
                  static_cast<unsigned long>(base.value() - 1));
  return p;
}

}  // namespace spnum
