#include <doctest.h>

#include <random>

#include "spnum/digits.hpp"

using namespace spnum;

TEST_CASE("base construction rejects r < 2") {
  CHECK_THROWS_AS(Base(0), std::invalid_argument);
  CHECK_THROWS_AS(Base(1), std::invalid_argument);
  CHECK_THROWS_AS(Base(-3), std::invalid_argument);
  CHECK(Base(2).value() == 2);
}

TEST_CASE("to_digits matches the worked expansions") {
  const DigitVector d144 = to_digits(144, Base(10));
  CHECK(d144.coefficients() == std::vector<Digit>{4, 4, 1});

  const DigitVector d6 = to_digits(6, Base(4));
  CHECK(d6.coefficients() == std::vector<Digit>{2, 1});

  for (std::int64_t r : {2, 3, 10, 999}) {
    CHECK(to_digits(r, Base(r)).coefficients() == std::vector<Digit>{0, 1});
  }

  CHECK(to_digits(0, Base(7)).coefficients() == std::vector<Digit>{0});
  CHECK_THROWS_AS(to_digits(Natural(-5), Base(7)), std::invalid_argument);
}

TEST_CASE("value is the exact Horner evaluation") {
  CHECK(value(DigitVector(Base(10), {4, 4, 1})) == 144);
  CHECK(value(DigitVector(Base(5), {1})) == 1);
  CHECK(value(DigitVector(Base(2), {1, 1, 1, 1})) == 15);
}

TEST_CASE("digit vector validation") {
  CHECK_THROWS_AS(DigitVector(Base(10), {}), std::invalid_argument);
  CHECK_THROWS_AS(DigitVector(Base(10), {3, 11}), std::invalid_argument);
  CHECK_THROWS_AS(DigitVector(Base(10), {-1}), std::invalid_argument);
  CHECK_THROWS_AS(DigitVector(Base(10), {4, 0}), std::invalid_argument);  // leading zero
  CHECK(DigitVector(Base(10), {0}).size() == 1);
}

TEST_CASE("digit_sum and digit_product on the worked examples") {
  const DigitVector d144 = to_digits(144, Base(10));
  CHECK(digit_sum(d144) == 9);
  CHECK(digit_product(d144) == 16);

  const DigitVector d6 = to_digits(6, Base(4));
  CHECK(digit_sum(d6) == 3);
  CHECK(digit_product(d6) == 2);

  CHECK(digit_sum(DigitVector(Base(3), {1})) == 1);
  CHECK(digit_product(to_digits(135, Base(10))) == 15);
  CHECK(digit_product(to_digits(105, Base(10))) == 0);
}

TEST_CASE("multiset sum and product agree with the vector forms") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const std::int64_t r = 2 + static_cast<std::int64_t>(rng() % 14);
    const std::size_t len = 1 + rng() % 12;
    std::vector<Digit> coeffs(len);
    for (auto& c : coeffs) c = 1 + static_cast<Digit>(rng() % (r - 1));
    const DigitVector d(Base(r), coeffs);
    const DigitMultiset m = DigitMultiset::from_digits(d);
    CHECK(m.length() == len);
    CHECK(digit_sum(m) == digit_sum(d));
    CHECK(digit_product(m) == digit_product(d));
  }
}

TEST_CASE("multiset rejects zero digits") {
  CHECK_THROWS_AS(DigitMultiset::from_digits(to_digits(105, Base(10))),
                  std::invalid_argument);
  CHECK_THROWS_AS(DigitMultiset(Base(10), {{0, 2}}), std::invalid_argument);
  CHECK_THROWS_AS(DigitMultiset(Base(4), {{5, 1}}), std::invalid_argument);
}

TEST_CASE("is_sp on the worked examples") {
  CHECK(is_sp(144, Base(10)));
  CHECK(is_sp(6, Base(4)));
  CHECK(is_sp(135, Base(10)));
  CHECK_FALSE(is_sp(10, Base(10)));
  for (std::int64_t r : {2, 3, 7, 100, 999}) {
    CHECK(is_sp(1, Base(r)));
  }
  CHECK_THROWS_AS(is_sp(0, Base(10)), std::invalid_argument);
  CHECK_THROWS_AS(is_sp(Natural(-4), Base(10)), std::invalid_argument);
}

TEST_CASE("single-digit SP numbers are exactly 1") {
  // A single digit a is SP iff a = a * a.
  for (Digit a = 1; a <= 8; ++a) {
    CHECK(is_sp(a, Base(9)) == (a == 1));
  }
}

TEST_CASE("numbers with a zero digit are never SP") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 500; ++trial) {
    const std::int64_t r = 2 + static_cast<std::int64_t>(rng() % 14);
    const Natural n = Natural(static_cast<unsigned long>(1 + rng() % 1000000));
    if (to_digits(n, Base(r)).has_zero_digit()) {
      CHECK_FALSE(is_sp(n, Base(r)));
    }
  }
}

TEST_CASE("round trip value(to_digits(n)) == n") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 500; ++trial) {
    const std::int64_t r = 2 + static_cast<std::int64_t>(rng() % 62);
    Natural n = Natural(static_cast<unsigned long>(rng()));
    n = n * Natural(static_cast<unsigned long>(rng() | 1)) + 1;  // widen past 64 bits
    const DigitVector d = to_digits(n, Base(r));
    CHECK(value(d) == n);
    CHECK(d.coefficients().back() != 0);
  }
}

TEST_CASE("repunit identities") {
  CHECK(repunit(Base(10), 3) == 111);
  CHECK(repunit(Base(2), 4) == 15);
  for (std::int64_t r : {2, 3, 10, 999}) {
    CHECK(repunit(Base(r), 1) == 1);
  }
  CHECK_THROWS_AS(repunit(Base(10), 0), std::invalid_argument);

  // repunit(r, k)*(r-1) + 1 = r^k exactly.
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 200; ++trial) {
    const std::int64_t r = 2 + static_cast<std::int64_t>(rng() % 500);
    const std::int64_t k = 1 + static_cast<std::int64_t>(rng() % 200);
    Natural rk(r);
    mpz_pow_ui(rk.get_mpz_t(), rk.get_mpz_t(), static_cast<unsigned long>(k));
    CHECK(repunit(Base(r), k) * (r - 1) + 1 == rk);
  }
}

TEST_CASE("is_sp depends only on the multiset and the value") {
  // Permuting digits leaves digit_sum * digit_product unchanged.
  std::mt19937_64 rng(19);
  for (int trial = 0; trial < 200; ++trial) {
    const std::int64_t r = 3 + static_cast<std::int64_t>(rng() % 13);
    const std::size_t len = 2 + rng() % 8;
    std::vector<Digit> coeffs(len);
    for (auto& c : coeffs) c = 1 + static_cast<Digit>(rng() % (r - 1));
    const DigitVector d(Base(r), coeffs);
    const Natural before = digit_sum(d) * digit_product(d);
    std::shuffle(coeffs.begin(), coeffs.end(), rng);
    if (coeffs.back() == 0) continue;
    const DigitVector shuffled(Base(r), coeffs);
    CHECK(digit_sum(shuffled) * digit_product(shuffled) == before);
  }
}
