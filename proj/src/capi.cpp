#include "padyn/padyn.h"

#include <algorithm>
#include <cstring>
#include <new>
#include <string>

#include "padyn/hensel.hpp"
#include "padyn/serialize.hpp"

struct padyn_number {
  padyn::PAdicNumber value;
};

struct padyn_map {
  padyn::CubicMap map;
};

namespace {

thread_local std::string last_error;

padyn_status status_of(padyn::ErrorCode code) {
  using padyn::ErrorCode;
  switch (code) {
    case ErrorCode::InvalidArgument: return PADYN_INVALID_ARGUMENT;
    case ErrorCode::NotPrime: return PADYN_NOT_PRIME;
    case ErrorCode::ZeroDenominator: return PADYN_ZERO_DENOMINATOR;
    case ErrorCode::PrimeMismatch: return PADYN_PRIME_MISMATCH;
    case ErrorCode::DivisionByZero: return PADYN_DIVISION_BY_ZERO;
    case ErrorCode::PrecisionExhausted: return PADYN_PRECISION_EXHAUSTED;
    case ErrorCode::ZeroInput: return PADYN_ZERO_INPUT;
    case ErrorCode::NoSquareRoot: return PADYN_NO_SQUARE_ROOT;
    case ErrorCode::UnitNormParameter: return PADYN_UNIT_NORM_PARAMETER;
    case ErrorCode::RegimeMismatch: return PADYN_REGIME_MISMATCH;
    case ErrorCode::BudgetExceeded: return PADYN_BUDGET_EXCEEDED;
    case ErrorCode::PredicateMismatch: return PADYN_PREDICATE_MISMATCH;
  }
  return PADYN_INTERNAL_ERROR;
}

padyn_status fail(padyn_status status, const char* message) {
  last_error = message;
  return status;
}

// Runs body, translating exceptions into status codes.
template <class Body>
padyn_status guard(Body&& body) {
  try {
    last_error.clear();
    body();
    return PADYN_OK;
  } catch (const padyn::Error& e) {
    return fail(status_of(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(PADYN_INTERNAL_ERROR, "out of memory");
  } catch (const std::exception& e) {
    return fail(PADYN_INTERNAL_ERROR, e.what());
  }
}

char* copy_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

padyn_status require(bool ok, const char* what) {
  return ok ? PADYN_OK : fail(PADYN_INVALID_ARGUMENT, what);
}

template <class Op>
padyn_status binary(const padyn_number* x, const padyn_number* y, padyn_number** out, Op op) {
  if (!x || !y || !out) return require(false, "null argument");
  return guard([&] { *out = new padyn_number{op(x->value, y->value)}; });
}

padyn::SampleSpec spec_of(const padyn_run_options& o) {
  padyn::SampleSpec s;
  s.depth = o.depth;
  s.mode = o.exhaustive ? padyn::SampleMode::Exhaustive : padyn::SampleMode::Random;
  s.seed = o.seed;
  s.budget = o.budget;
  s.random_points = o.random_points;
  s.threads = o.threads;
  return s;
}

padyn_run_options options_or_default(const padyn_run_options* options) {
  padyn_run_options o;
  padyn_run_options_default(&o);
  return options ? *options : o;
}

}  // namespace

extern "C" {

const char* padyn_status_string(padyn_status status) {
  switch (status) {
    case PADYN_OK: return "OK";
    case PADYN_INVALID_ARGUMENT: return "InvalidArgument";
    case PADYN_NOT_PRIME: return "NotPrime";
    case PADYN_ZERO_DENOMINATOR: return "ZeroDenominator";
    case PADYN_PRIME_MISMATCH: return "PrimeMismatch";
    case PADYN_DIVISION_BY_ZERO: return "DivisionByZero";
    case PADYN_PRECISION_EXHAUSTED: return "PrecisionExhausted";
    case PADYN_ZERO_INPUT: return "ZeroInput";
    case PADYN_NO_SQUARE_ROOT: return "NoSquareRoot";
    case PADYN_UNIT_NORM_PARAMETER: return "UnitNormParameter";
    case PADYN_REGIME_MISMATCH: return "RegimeMismatch";
    case PADYN_BUDGET_EXCEEDED: return "BudgetExceeded";
    case PADYN_PREDICATE_MISMATCH: return "PredicateMismatch";
    case PADYN_INTERNAL_ERROR: return "InternalError";
  }
  return "Unknown";
}

const char* padyn_last_error(void) { return last_error.c_str(); }

const char* padyn_version(void) { return "0.1.0"; }

padyn_status padyn_number_from_rational(uint32_t p, int64_t numerator, int64_t denominator,
                                        int precision, padyn_number** out) {
  if (!out) return require(false, "null output");
  return guard([&] {
    *out = new padyn_number{
        padyn::PAdicNumber::from_rational(numerator, denominator, padyn::Prime(p), precision)};
  });
}

padyn_status padyn_number_from_digits(uint32_t p, int64_t valuation, const uint32_t* digits,
                                      size_t count, padyn_number** out) {
  if (!out || (count > 0 && !digits)) return require(false, "null argument");
  return guard([&] {
    const padyn::Prime prime(p);
    if (count == 0) {
      *out = new padyn_number{padyn::PAdicNumber::zero(prime)};
      return;
    }
    *out = new padyn_number{padyn::PAdicNumber::from_digits(
        prime, valuation, std::vector<std::uint32_t>(digits, digits + count))};
  });
}

void padyn_number_free(padyn_number* x) { delete x; }

padyn_status padyn_number_add(const padyn_number* x, const padyn_number* y, padyn_number** out) {
  return binary(x, y, out, [](const auto& a, const auto& b) { return a + b; });
}

padyn_status padyn_number_sub(const padyn_number* x, const padyn_number* y, padyn_number** out) {
  return binary(x, y, out, [](const auto& a, const auto& b) { return a - b; });
}

padyn_status padyn_number_mul(const padyn_number* x, const padyn_number* y, padyn_number** out) {
  return binary(x, y, out, [](const auto& a, const auto& b) { return a * b; });
}

padyn_status padyn_number_div(const padyn_number* x, const padyn_number* y, padyn_number** out) {
  return binary(x, y, out, [](const auto& a, const auto& b) { return a / b; });
}

padyn_status padyn_number_sqrt(const padyn_number* x, padyn_number** out) {
  if (!x || !out) return require(false, "null argument");
  return guard([&] { *out = new padyn_number{padyn::sqrt(x->value)}; });
}

padyn_status padyn_number_sqrt_exists(const padyn_number* x, int* exists) {
  if (!x || !exists) return require(false, "null argument");
  return guard([&] { *exists = padyn::sqrt_exists(x->value).exists ? 1 : 0; });
}

int padyn_number_is_zero(const padyn_number* x) { return x && x->value.is_zero() ? 1 : 0; }

int64_t padyn_number_valuation(const padyn_number* x) {
  return x && !x->value.is_zero() ? x->value.valuation() : 0;
}

int padyn_number_precision(const padyn_number* x) { return x ? x->value.precision() : 0; }

size_t padyn_number_digits(const padyn_number* x, uint32_t* out, size_t capacity) {
  if (!x) return 0;
  const auto d = x->value.digits();
  if (out) std::copy_n(d.begin(), std::min(capacity, d.size()), out);
  return d.size();
}

padyn_status padyn_number_to_string(const padyn_number* x, char** out) {
  if (!x || !out) return require(false, "null argument");
  return guard([&] { *out = copy_string(x->value.to_string()); });
}

padyn_status padyn_map_create(uint32_t p, int64_t numerator, int64_t denominator, int precision,
                              padyn_map** out) {
  if (!out) return require(false, "null output");
  return guard([&] {
    *out = new padyn_map{
        padyn::CubicMap::from_rational(numerator, denominator, padyn::Prime(p), precision)};
  });
}

void padyn_map_free(padyn_map* map) { delete map; }

padyn_regime padyn_map_regime(const padyn_map* map) {
  return map && map->map.regime() == padyn::Regime::ASmall ? PADYN_REGIME_A_SMALL
                                                            : PADYN_REGIME_A_BIG;
}

padyn_status padyn_map_eval(const padyn_map* map, const padyn_number* x, padyn_number** out) {
  if (!map || !x || !out) return require(false, "null argument");
  return guard([&] { *out = new padyn_number{map->map(x->value)}; });
}

void padyn_run_options_default(padyn_run_options* options) {
  if (!options) return;
  options->max_iter = 500;
  options->depth = 3;
  options->exhaustive = 1;
  options->seed = 0;
  options->budget = 100000;
  options->random_points = 100;
  options->threads = 0;
  options->siegel_points = 100;
  options->siegel_iter = 200;
  options->format = PADYN_FORMAT_JSON;
}

padyn_status padyn_report_fixed_points(const padyn_map* map, padyn_format format, char** out) {
  if (!map || !out) return require(false, "null argument");
  return guard([&] {
    const auto fps = padyn::fixed_points(map->map);
    *out = copy_string(format == PADYN_FORMAT_CSV ? padyn::fixed_points_csv(fps)
                                                  : padyn::fixed_points_json(map->map, fps));
  });
}

padyn_status padyn_report_orbit(const padyn_map* map, int64_t x_numerator, int64_t x_denominator,
                                const padyn_run_options* options, char** out) {
  if (!map || !out) return require(false, "null argument");
  const padyn_run_options o = options_or_default(options);
  return guard([&] {
    const padyn::CubicMap& m = map->map;
    const auto x = m.from_rational_point(x_numerator, x_denominator);
    const auto fate = padyn::classify_point(m, x, o.max_iter);
    // Trace up to the deciding step plus a few more images.
    const int n = std::min(o.max_iter, fate.steps_used + 5);
    const auto orbit = padyn::iterate(m, x, n);
    *out = copy_string(o.format == PADYN_FORMAT_CSV ? padyn::orbit_csv(orbit)
                                                    : padyn::orbit_json(m, orbit, fate));
  });
}

padyn_status padyn_report_basin(const padyn_map* map, const padyn_run_options* options,
                                char** out) {
  if (!map || !out) return require(false, "null argument");
  const padyn_run_options o = options_or_default(options);
  return guard([&] {
    const auto report = padyn::basin_report(map->map, spec_of(o), o.max_iter);
    *out = copy_string(o.format == PADYN_FORMAT_CSV ? padyn::basin_csv(report)
                                                    : padyn::basin_json(map->map, report));
  });
}

padyn_status padyn_report_verify(const padyn_map* map, const padyn_run_options* options,
                                 char** out, int* fail_count, int* undecided_count) {
  if (!map || !out) return require(false, "null argument");
  const padyn_run_options o = options_or_default(options);
  return guard([&] {
    padyn::VerifyOptions vo;
    vo.sampling = spec_of(o);
    vo.max_iter = o.max_iter;
    vo.siegel_points = o.siegel_points;
    vo.siegel_iter = o.siegel_iter;
    const auto report = padyn::verify_theorem(map->map, vo);
    *out = copy_string(o.format == PADYN_FORMAT_CSV ? padyn::verify_csv(report)
                                                    : padyn::verify_json(map->map, report));
    if (fail_count) *fail_count = report.count(padyn::ItemStatus::Fail);
    if (undecided_count) *undecided_count = report.count(padyn::ItemStatus::Undecided);
  });
}

void padyn_string_free(char* s) { delete[] s; }

}  // extern "C"
