#include <doctest.h>

#include <random>

#include "padyn/hensel.hpp"
#include "support/reference_padic.hpp"

using namespace padyn;

TEST_CASE("quadratic residues") {
  CHECK(is_quadratic_residue(4, Prime(5)));
  CHECK(is_quadratic_residue(2, Prime(7)));
  CHECK_FALSE(is_quadratic_residue(2, Prime(5)));
}

TEST_CASE("square root existence reasons") {
  auto e = sqrt_exists(PAdicNumber::from_integer(4, Prime(5)));
  CHECK(e.exists);
  CHECK(e.reason == SqrtReason::Ok);
  e = sqrt_exists(PAdicNumber::from_integer(5, Prime(5)));
  CHECK_FALSE(e.exists);
  CHECK(e.reason == SqrtReason::OddValuation);
  e = sqrt_exists(PAdicNumber::from_integer(2, Prime(5)));
  CHECK(e.reason == SqrtReason::NonresidueUnit);
  e = sqrt_exists(PAdicNumber::from_integer(3, Prime(2)));
  CHECK_FALSE(e.exists);
  CHECK(e.reason == SqrtReason::P2DigitCondition);
  CHECK_THROWS_AS(sqrt_exists(PAdicNumber::zero(Prime(5))), Error);
}

TEST_CASE("canonical square roots") {
  const Prime p5(5), p7(7);
  CHECK(sqrt(PAdicNumber::from_integer(4, p5)) == PAdicNumber::from_integer(2, p5));
  const auto r2 = sqrt(PAdicNumber::from_integer(2, p7, 4));
  CHECK(r2.digits()[0] == 3);
  // 2166 = 3 + 1·7 + 2·49 + 6·343 solves y^2 = 2 mod 7^4.
  CHECK(std::vector<std::uint32_t>(r2.digits().begin(), r2.digits().end()) ==
        std::vector<std::uint32_t>{3, 1, 2, 6});
  const auto r25 = sqrt(PAdicNumber::from_integer(25, p5));
  CHECK(r25.valuation() == 1);
  CHECK(r25.digits()[0] == 1);
  CHECK_THROWS_AS(sqrt(PAdicNumber::from_integer(2, p5)), Error);
}

TEST_CASE("square roots square back") {
  std::mt19937_64 rng(3);
  for (std::uint32_t pv : {2u, 3u, 5u, 7u, 13u}) {
    const Prime p(pv);
    std::uniform_int_distribution<std::int64_t> d(1, 100000);
    for (int i = 0; i < 50; ++i) {
      const auto y = PAdicNumber::from_integer(d(rng), p, 24);
      const auto x = y * y;
      const auto r = sqrt(x);
      CHECK(r * r == x);
    }
  }
}

TEST_CASE("sqrt(a^2 + 4) criterion") {
  CHECK(sqrt_a2_plus_4_exists(PAdicNumber::from_integer(5, Prime(5))));
  CHECK_FALSE(sqrt_a2_plus_4_exists(PAdicNumber::from_integer(2, Prime(2))));
  CHECK(sqrt_a2_plus_4_exists(PAdicNumber::from_rational(1, 2, Prime(2))));
  CHECK(sqrt_a2_plus_4_exists(PAdicNumber::from_integer(8, Prime(2))));
  CHECK_THROWS_AS(sqrt_a2_plus_4_exists(PAdicNumber::from_integer(2, Prime(5))), Error);
}

TEST_CASE("sqrt(-3) agrees with residue search") {
  CHECK(sqrt_minus_3_exists(Prime(7)));
  CHECK_FALSE(sqrt_minus_3_exists(Prime(5)));
  CHECK(sqrt_minus_3_exists(Prime(13)));
  for (std::uint32_t pv : {2u, 5u, 7u, 11u, 13u, 17u, 19u}) {
    CHECK(sqrt_minus_3_exists(Prime(pv)) ==
          reference::square_mod(-3, pv, pv == 2 ? 5 : 3));
  }
  CHECK_THROWS_AS(sqrt_minus_3_exists(Prime(3)), Error);
}
