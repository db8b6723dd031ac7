#include <doctest.h>

#include <random>
#include <vector>

#include "padyn/padic.hpp"
#include "support/reference_padic.hpp"

using namespace padyn;

namespace {

std::vector<std::uint32_t> digits_of(const PAdicNumber& x) {
  return {x.digits().begin(), x.digits().end()};
}

void check_error(ErrorCode code, auto&& fn) {
  try {
    fn();
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == code);
  }
}

}  // namespace

TEST_CASE("norm exponents order by norm") {
  CHECK(NormExponent::Finite(2) < NormExponent::Finite(1));
  CHECK(NormExponent::Zero() < NormExponent::Finite(1000));
  CHECK(NormExponent::Finite(-1) > NormExponent::Finite(0));
  CHECK(NormExponent::Finite(2) * NormExponent::Finite(-3) == NormExponent::Finite(-1));
  CHECK(NormExponent::Zero() * NormExponent::Finite(-3) == NormExponent::Zero());
}

TEST_CASE("from_rational expands canonically") {
  const Prime p5(5);
  auto x = PAdicNumber::from_rational(75, 1, p5, 4);
  CHECK(x.valuation() == 2);
  CHECK(digits_of(x) == std::vector<std::uint32_t>{3, 0, 0, 0});
  CHECK(x.norm() == NormExponent::Finite(2));

  auto y = PAdicNumber::from_rational(1, 5, p5, 4);
  CHECK(y.valuation() == -1);
  CHECK(digits_of(y) == std::vector<std::uint32_t>{1, 0, 0, 0});
  CHECK(y.norm() == NormExponent::Finite(-1));

  auto z = PAdicNumber::from_rational(0, 7, p5, 4);
  CHECK(z.is_zero());
  CHECK(z.norm() == NormExponent::Zero());
}

TEST_CASE("from_rational agrees with the big-integer oracle") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::int64_t> num(-1000000, 1000000);
  std::uniform_int_distribution<std::int64_t> den(1, 1000000);
  for (std::uint32_t pv : {2u, 3u, 5u, 7u, 13u}) {
    const Prime p(pv);
    for (int i = 0; i < 200; ++i) {
      const std::int64_t n = num(rng), d = den(rng);
      const auto x = PAdicNumber::from_rational(n, d, p, 20);
      const auto ref = reference::expand(n, d, pv, 20);
      REQUIRE(x.is_zero() == ref.zero);
      if (ref.zero) continue;
      CHECK(x.valuation() == ref.valuation);
      CHECK(digits_of(x) == ref.digits);
    }
  }
}

TEST_CASE("invalid construction") {
  check_error(ErrorCode::NotPrime, [] { Prime(9); });
  check_error(ErrorCode::NotPrime, [] { Prime(1); });
  check_error(ErrorCode::ZeroDenominator,
              [] { PAdicNumber::from_rational(1, 0, Prime(5), 4); });
  check_error(ErrorCode::InvalidArgument,
              [] { PAdicNumber::from_rational(1, 1, Prime(5), 0); });
}

TEST_CASE("addition follows the norm rules") {
  const Prime p5(5);
  auto five = PAdicNumber::from_integer(5, p5);
  auto twenty_five = PAdicNumber::from_integer(25, p5);
  CHECK((five + twenty_five).norm() == NormExponent::Finite(1));
  CHECK(five + twenty_five == PAdicNumber::from_integer(30, p5));
  CHECK((five - five).is_zero());
  CHECK((five + (-five)).is_zero());
}

TEST_CASE("full cancellation at mismatched precision is exhausted") {
  const Prime p5(5);
  auto a = PAdicNumber::from_integer(7, p5, 8);
  auto b = PAdicNumber::from_integer(-7, p5, 6);
  check_error(ErrorCode::PrecisionExhausted, [&] { (void)(a + b); });
  CHECK_FALSE(try_add(a, b).has_value());
  const Distance d = distance(a, -b);
  CHECK_FALSE(d.exact);
  CHECK(d.norm == NormExponent::Finite(6));
}

TEST_CASE("partial cancellation shrinks precision") {
  const Prime p5(5);
  auto a = PAdicNumber::from_integer(1, p5, 10);
  auto b = PAdicNumber::from_integer(-1 + 125, p5, 10);
  const auto s = a + b;
  CHECK(s.valuation() == 3);
  CHECK(s.precision() == 7);
  const Distance d = distance(a, -b);
  CHECK(d.exact);
  CHECK(d.norm == NormExponent::Finite(3));
}

TEST_CASE("multiplication and division") {
  const Prime p5(5);
  auto x = PAdicNumber::from_rational(1, 5, p5, 4) * PAdicNumber::from_rational(75, 1, p5, 4);
  CHECK(x.valuation() == 1);
  CHECK(x.digits()[0] == 3);
  auto q = PAdicNumber::from_integer(2, p5) / PAdicNumber::from_integer(3, p5);
  CHECK(q == PAdicNumber::from_rational(2, 3, p5));
  check_error(ErrorCode::DivisionByZero,
              [&] { (void)(q / PAdicNumber::zero(p5)); });
  check_error(ErrorCode::PrimeMismatch, [&] {
    (void)(q * PAdicNumber::from_integer(2, Prime(7)));
  });
  CHECK(pow(PAdicNumber::from_integer(5, p5), 3) == PAdicNumber::from_integer(125, p5));
}

TEST_CASE("arithmetic matches exact rationals") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<std::int64_t> num(-30000, 30000);
  std::uniform_int_distribution<std::int64_t> den(1, 30000);
  const Prime p(7);
  for (int i = 0; i < 300; ++i) {
    const std::int64_t a = num(rng), b = den(rng), c = num(rng), d = den(rng);
    if (a == 0 || c == 0) continue;
    const auto x = PAdicNumber::from_rational(a, b, p, 16);
    const auto y = PAdicNumber::from_rational(c, d, p, 16);
    CHECK(x * y == PAdicNumber::from_rational(a * c, b * d, p, 16));
    CHECK(x / y == PAdicNumber::from_rational(a * d, b * c, p, 16));
    if (a * d + c * b != 0) {
      const auto s = try_add(x, y);
      if (s) CHECK(*s == PAdicNumber::from_rational(a * d + c * b, b * d, p, 16));
    }
  }
}

TEST_CASE("string forms") {
  const Prime p5(5);
  CHECK(PAdicNumber::zero(p5).to_string() == "0");
  CHECK(PAdicNumber::from_rational(75, 1, p5, 3).to_string() == "5^2*[3.0.0]");
  CHECK(PAdicNumber::from_rational(75, 1, p5, 3).digit_string() == "3.0.0");
}

TEST_CASE("valuation overflow is rejected") {
  const Prime p2(2);
  const auto big = PAdicNumber::from_digits(p2, INT64_MAX - 1, {1});
  check_error(ErrorCode::InvalidArgument, [&] { (void)(big * big); });
}
