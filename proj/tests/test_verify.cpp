#include <doctest.h>

#include <random>

#include "spnum/search.hpp"
#include "spnum/verify.hpp"

using namespace spnum;

namespace {

DigitVector random_nonzero_vector(std::mt19937_64& rng, std::int64_t r) {
  const std::size_t len = 1 + rng() % 12;
  std::vector<Digit> coeffs(len);
  for (auto& c : coeffs) c = 1 + static_cast<Digit>(rng() % (r - 1));
  return DigitVector(Base(r), coeffs);
}

// Test-only reference: plain scan of eq1 over the whole range, no
// induction shortcut.
std::int64_t max_n_eq1_full_scan(std::int64_t r) {
  const Natural cap = improved_exponent_bound(Base(r)) + 64;
  std::int64_t last = -1;
  for (Natural n = 0; n <= cap; ++n) {
    if (eq1_holds(r, n.get_si())) last = n.get_si();
  }
  return last;
}

}  // namespace

TEST_CASE("min-repunit link on the worked examples") {
  CHECK(check_min_repunit(to_digits(144, Base(10))));  // 1*111 <= 144
  CHECK(check_min_repunit(DigitVector(Base(7), {1})));  // 1*1 <= 1, equality
  CHECK(check_min_repunit(to_digits(6, Base(4))));      // 1*5 <= 6
  CHECK_THROWS_AS(check_min_repunit(to_digits(105, Base(10))), std::invalid_argument);
}

TEST_CASE("hip upper link on the worked examples") {
  CHECK(check_hip_upper(to_digits(144, Base(10))));  // 144 <= 9^3 * 3
  for (std::int64_t r : {2, 5, 12}) {
    CHECK(check_hip_upper(DigitVector(Base(r), {r - 1})));  // equality at n=0
  }
  CHECK_THROWS_AS(check_hip_upper(to_digits(105, Base(10))), std::invalid_argument);
}

TEST_CASE("both links hold on random all-nonzero vectors, bases 2..12") {
  std::mt19937_64 rng(37);
  for (std::int64_t r = 2; r <= 12; ++r) {
    for (int trial = 0; trial < 10000; ++trial) {
      const DigitVector d = random_nonzero_vector(rng, r);
      CHECK(check_min_repunit(d));
      CHECK(check_hip_upper(d));
    }
  }
}

TEST_CASE("eq1 exact values") {
  CHECK(eq1_holds(2, 0));        // 2 <= 1*1 + 1, equality
  CHECK_FALSE(eq1_holds(2, 1));  // 4 <= 2*1 + 1 fails
  // r=10: the crossover sits at n=58, far below the cubic cap of 1440.
  CHECK(eq1_holds(10, 58));
  CHECK_FALSE(eq1_holds(10, 59));
  CHECK_FALSE(eq1_holds(10, 1440));
  CHECK_FALSE(eq1_holds(10, 1441));
}

TEST_CASE("eq2 and eq3 exact values") {
  CHECK(eq2_holds(2, 0));  // 1 + 1 + 0 <= 1 + 1, equality
  CHECK(eq3_holds(2, 0));  // 0 <= 0, equality
  CHECK(eq2_holds(10, 58));
  CHECK(eq3_holds(10, 58));
}

TEST_CASE("chain implications on random pairs in exact rationals") {
  // eq1 => eq2 (dropping positive binomial terms), and eq2 <=> eq3 (they
  // differ by the positive factor 2(r-1)^2/(n+1)).
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 10000; ++trial) {
    const std::int64_t r = 2 + static_cast<std::int64_t>(rng() % 49);
    const std::int64_t n = static_cast<std::int64_t>(rng() % 300);
    const ChainReport report = check_chain(r, n);
    CHECK(report.consistent());
    if (report.eq1) CHECK(report.eq2);
    CHECK(report.eq2 == report.eq3);
  }
}

TEST_CASE("max_n_satisfying_eq1 spot values") {
  CHECK(max_n_satisfying_eq1(2) == 0);
  CHECK(max_n_satisfying_eq1(3) <= 12);
  CHECK(max_n_satisfying_eq1(10) <= 1440);
  CHECK(max_n_satisfying_eq1(10) == 58);
}

TEST_CASE("max_n_satisfying_eq1 agrees with a full scan for r in 2..8") {
  for (std::int64_t r = 2; r <= 8; ++r) {
    CHECK(max_n_satisfying_eq1(r) == max_n_eq1_full_scan(r));
  }
}

TEST_CASE("eq1 crossover stays below the proven exponent bound, r in 2..50") {
  for (std::int64_t r = 2; r <= 50; ++r) {
    const std::int64_t max_n = max_n_satisfying_eq1(r);
    CHECK(Natural(max_n) <= improved_exponent_bound(Base(r)));
  }
}

TEST_CASE("every enumerated SP number satisfies the full chain") {
  for (std::int64_t r = 2; r <= 12; ++r) {
    SearchConfig config(Base(r), 8);
    const SearchResult result = enumerate_sp(config);
    for (const Natural& n : result.sp_numbers) {
      const DigitVector d = to_digits(n, Base(r));
      CHECK(check_min_repunit(d));
      CHECK(check_hip_upper(d));
      CHECK(n == digit_product(d) * digit_sum(d));
    }
  }
}

TEST_CASE("conjecture records for the quoted spot bases") {
  const auto records = verify_conjecture_range(2, 10, 30);
  REQUIRE(records.size() == 9);

  const ConjectureRecord& r2 = records[0];
  CHECK(r2.base == 2);
  CHECK(r2.bound_floor == 2);
  CHECK(r2.m0 == 3);  // 2^2 = 4 > 3*1^3 = 3
  CHECK(r2.crossover_holds);
  CHECK(r2.monotone_guard);  // 3 > 2
  CHECK_FALSE(r2.ambiguous_floor);
  CHECK(r2.verified());

  const ConjectureRecord& r10 = records[8];
  CHECK(r10.base == 10);
  CHECK(r10.bound_floor == 60);
  CHECK(r10.m0 == 61);  // 10^60 > 61*9^61, ratio ~ 1.014
  CHECK(r10.crossover_holds);
  CHECK(r10.verified());
}

TEST_CASE("the r=10 crossover margin is thin, so exact integers matter") {
  Natural lhs(10);
  mpz_pow_ui(lhs.get_mpz_t(), lhs.get_mpz_t(), 60);
  Natural rhs(9);
  mpz_pow_ui(rhs.get_mpz_t(), rhs.get_mpz_t(), 61);
  rhs *= 61;
  CHECK(lhs > rhs);
  // ratio below 1.014: lhs < rhs * 1.014 = rhs * 1014/1000
  CHECK(lhs * 1000 < rhs * 1014);
  CHECK(lhs * 1000 > rhs * 1013);
}

TEST_CASE("verify_conjecture_range over 2..50") {
  const auto records = verify_conjecture_range(2, 50, 30);
  CHECK(records.size() == 49);
  for (const auto& record : records) {
    CHECK(record.verified());
    CHECK(record.m0 == record.bound_floor + 1);
  }
}

TEST_CASE("threaded range verification emits ascending identical records") {
  const auto serial = verify_conjecture_range(2, 80, 30, 1);
  const auto threaded = verify_conjecture_range(2, 80, 30, 4);
  REQUIRE(serial.size() == threaded.size());
  for (std::size_t i = 0; i < serial.size(); ++i) {
    CHECK(serial[i].base == threaded[i].base);
    CHECK(serial[i].base == 2 + static_cast<std::int64_t>(i));
    CHECK(serial[i].bound_floor == threaded[i].bound_floor);
    CHECK(serial[i].verified() == threaded[i].verified());
    CHECK(cmp(serial[i].bound_real, threaded[i].bound_real) == 0);
  }
}

TEST_CASE("enumeration cross-check for small bases") {
  // No SP number has more digits than the conjectured floor; checked by
  // searching the band between the floor and the proven cubic bound.
  for (std::int64_t r = 2; r <= 5; ++r) {
    CHECK(conjecture_enumeration_cross_check(Base(r), 30));
  }
}

TEST_CASE("argument validation") {
  CHECK_THROWS_AS(eq1_holds(1, 0), std::invalid_argument);
  CHECK_THROWS_AS(eq2_holds(2, -1), std::invalid_argument);
  CHECK_THROWS_AS(max_n_satisfying_eq1(1), std::invalid_argument);
  CHECK_THROWS_AS(verify_conjecture_range(5, 3, 30), std::invalid_argument);
  CHECK_THROWS_AS(verify_conjecture_range(1, 3, 30), std::invalid_argument);
}
