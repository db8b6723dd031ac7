#include <doctest.h>

#include <string>
#include <vector>

#include "padyn/padyn.h"

namespace {

padyn_number* number(uint32_t p, int64_t n, int64_t d, int precision = 32) {
  padyn_number* x = nullptr;
  REQUIRE(padyn_number_from_rational(p, n, d, precision, &x) == PADYN_OK);
  return x;
}

std::string take(char* s) {
  std::string out(s);
  padyn_string_free(s);
  return out;
}

}  // namespace

TEST_CASE("number round trip") {
  padyn_number* x = number(5, 75, 1, 4);
  CHECK(padyn_number_valuation(x) == 2);
  CHECK(padyn_number_precision(x) == 4);
  std::vector<uint32_t> digits(4);
  CHECK(padyn_number_digits(x, digits.data(), digits.size()) == 4);
  CHECK(digits == std::vector<uint32_t>{3, 0, 0, 0});
  char* text = nullptr;
  REQUIRE(padyn_number_to_string(x, &text) == PADYN_OK);
  CHECK(take(text) == "5^2*[3.0.0.0]");
  padyn_number_free(x);
}

TEST_CASE("arithmetic and errors") {
  padyn_number* a = number(5, 1, 5);
  padyn_number* b = number(5, 75, 1);
  padyn_number* c = nullptr;
  REQUIRE(padyn_number_mul(a, b, &c) == PADYN_OK);
  CHECK(padyn_number_valuation(c) == 1);
  padyn_number* zero = number(5, 0, 1);
  CHECK(padyn_number_is_zero(zero));
  padyn_number* q = nullptr;
  CHECK(padyn_number_div(a, zero, &q) == PADYN_DIVISION_BY_ZERO);
  CHECK(std::string(padyn_last_error()).size() > 0);
  padyn_number* other = number(7, 2, 1);
  CHECK(padyn_number_add(a, other, &q) == PADYN_PRIME_MISMATCH);
  CHECK(padyn_number_from_rational(4, 1, 1, 8, &q) == PADYN_NOT_PRIME);
  CHECK(padyn_number_from_rational(5, 1, 0, 8, &q) == PADYN_ZERO_DENOMINATOR);
  CHECK(padyn_number_add(nullptr, a, &q) == PADYN_INVALID_ARGUMENT);
  for (auto* x : {a, b, c, zero, other}) padyn_number_free(x);
}

TEST_CASE("square roots") {
  padyn_number* two = number(7, 2, 1, 4);
  int exists = 0;
  REQUIRE(padyn_number_sqrt_exists(two, &exists) == PADYN_OK);
  CHECK(exists == 1);
  padyn_number* r = nullptr;
  REQUIRE(padyn_number_sqrt(two, &r) == PADYN_OK);
  uint32_t d0 = 0;
  padyn_number_digits(r, &d0, 1);
  CHECK(d0 == 3);
  padyn_number* five = number(5, 2, 1);
  padyn_number* bad = nullptr;
  CHECK(padyn_number_sqrt(five, &bad) == PADYN_NO_SQUARE_ROOT);
  for (auto* x : {two, r, five}) padyn_number_free(x);
}

TEST_CASE("maps and reports") {
  padyn_map* m = nullptr;
  CHECK(padyn_map_create(5, 2, 1, 32, &m) == PADYN_UNIT_NORM_PARAMETER);
  REQUIRE(padyn_map_create(5, 1, 5, 32, &m) == PADYN_OK);
  CHECK(padyn_map_regime(m) == PADYN_REGIME_A_BIG);

  padyn_number* x = number(5, 2, 1);
  padyn_number* y = nullptr;
  REQUIRE(padyn_map_eval(m, x, &y) == PADYN_OK);
  CHECK(padyn_number_valuation(y) == -1);

  char* text = nullptr;
  REQUIRE(padyn_report_fixed_points(m, PADYN_FORMAT_JSON, &text) == PADYN_OK);
  CHECK(take(text).find("\"schema_version\": 1") != std::string::npos);

  padyn_run_options o;
  padyn_run_options_default(&o);
  CHECK(o.max_iter == 500);
  CHECK(o.depth == 3);
  REQUIRE(padyn_report_orbit(m, 25, 1, &o, &text) == PADYN_OK);
  CHECK(take(text).find("TO_X1") != std::string::npos);

  o.depth = 2;
  o.max_iter = 100;
  REQUIRE(padyn_report_basin(m, &o, &text) == PADYN_OK);
  CHECK(take(text).find("\"total_mismatches\": 0") != std::string::npos);

  int fails = -1, undecided = -1;
  REQUIRE(padyn_report_verify(m, &o, &text, &fails, &undecided) == PADYN_OK);
  padyn_string_free(text);
  CHECK(fails == 0);
  CHECK(undecided == 0);

  padyn_map* small = nullptr;
  REQUIRE(padyn_map_create(7, 7, 1, 32, &small) == PADYN_OK);
  CHECK(padyn_map_regime(small) == PADYN_REGIME_A_SMALL);
  CHECK(padyn_report_basin(small, &o, &text) == PADYN_REGIME_MISMATCH);

  padyn_number_free(x);
  padyn_number_free(y);
  padyn_map_free(m);
  padyn_map_free(small);
}

TEST_CASE("status strings") {
  CHECK(std::string(padyn_status_string(PADYN_OK)) == "OK");
  CHECK(std::string(padyn_status_string(PADYN_PRECISION_EXHAUSTED)) == "PrecisionExhausted");
  CHECK(std::string(padyn_version()) == "0.1.0");
}
