#include "padyn/cubic_map.hpp"

#include <algorithm>
#include <numeric>
#include <utility>

#include "padyn/hensel.hpp"

namespace padyn {

const char* to_string(Regime regime) noexcept {
  return regime == Regime::ABig ? "A_BIG" : "A_SMALL";
}

const char* to_string(FixedPointLabel label) noexcept {
  switch (label) {
    case FixedPointLabel::X1: return "X1";
    case FixedPointLabel::X2: return "X2";
    case FixedPointLabel::X3: return "X3";
  }
  return "?";
}

const char* to_string(Stability kind) noexcept {
  switch (kind) {
    case Stability::Attractive: return "ATTRACTIVE";
    case Stability::Indifferent: return "INDIFFERENT";
    case Stability::Repelling: return "REPELLING";
  }
  return "?";
}

std::string Rational::to_string() const {
  if (denominator == 1) return std::to_string(numerator);
  return std::to_string(numerator) + "/" + std::to_string(denominator);
}

namespace {

Regime regime_for(const PAdicNumber& a) {
  if (a.is_zero()) throw Error(ErrorCode::InvalidArgument, "parameter a must be nonzero");
  if (a.valuation() == 0) {
    throw Error(ErrorCode::UnitNormParameter,
                "|a|_p = 1 is excluded: only |a|_p > 1 and |a|_p < 1 are analysed");
  }
  return a.valuation() < 0 ? Regime::ABig : Regime::ASmall;
}

PAdicNumber constant(std::int64_t c, const CubicMap& map) {
  return PAdicNumber::from_integer(c, map.prime(), map.a().precision());
}

}  // namespace

CubicMap::CubicMap(PAdicNumber a) : CubicMap(a, a.precision(), std::nullopt) {}

CubicMap::CubicMap(PAdicNumber a, int precision, std::optional<Rational> rational)
    : a_(std::move(a)), regime_(regime_for(a_)), precision_(precision), rational_(rational) {}

CubicMap CubicMap::from_rational(std::int64_t numerator, std::int64_t denominator, Prime p,
                                 int precision) {
  if (numerator == 0) throw Error(ErrorCode::InvalidArgument, "parameter a must be nonzero");
  const auto probe = PAdicNumber::from_rational(numerator, denominator, p, 1);
  const std::int64_t guard = 3 * std::max<std::int64_t>(0, -probe.valuation()) + 4;
  auto a = PAdicNumber::from_rational(numerator, denominator, p,
                                      precision + static_cast<int>(guard));
  std::int64_t n = numerator, d = denominator;
  if (d < 0) {
    n = -n;
    d = -d;
  }
  const std::int64_t g = std::gcd(n, d);
  return CubicMap(std::move(a), precision, Rational{n / g, d / g});
}

std::string CubicMap::parameter_string() const {
  return rational_ ? rational_->to_string() : a_.to_string();
}

PAdicNumber CubicMap::operator()(const PAdicNumber& x) const {
  if (x.is_zero()) return x;
  return x * x * (x + a_);
}

PAdicNumber CubicMap::derivative(const PAdicNumber& x) const {
  if (x.is_zero()) return x;
  return x * (constant(3, *this) * x + constant(2, *this) * a_);
}

FixedPoint classify(const CubicMap& map, FixedPoint fp) {
  fp.lambda_norm = map.derivative(fp.value).norm();
  fp.kind = stability_of(fp.lambda_norm);
  return fp;
}

std::vector<FixedPoint> fixed_points(const CubicMap& map) {
  const Prime p = map.prime();
  std::vector<FixedPoint> out;
  out.push_back(classify(map, {FixedPointLabel::X1, PAdicNumber::zero(p),
                               NormExponent::Zero(), Stability::Attractive}));
  if (!sqrt_a2_plus_4_exists(map.a())) return out;

  const PAdicNumber& a = map.a();
  const PAdicNumber root = sqrt(a * a + constant(4, map));
  const PAdicNumber two = constant(2, map);
  PAdicNumber plus = (-a + root) / two;
  PAdicNumber minus = (-a - root) / two;
  if (map.regime() == Regime::ABig && plus.norm() != a.norm()) std::swap(plus, minus);

  out.push_back(classify(map, {FixedPointLabel::X2, std::move(plus), NormExponent::Zero(),
                               Stability::Attractive}));
  out.push_back(classify(map, {FixedPointLabel::X3, std::move(minus), NormExponent::Zero(),
                               Stability::Attractive}));
  return out;
}

OrbitRecord iterate(const CubicMap& map, const PAdicNumber& x0, int n) {
  if (n < 0) throw Error(ErrorCode::InvalidArgument, "iteration count must be nonnegative");
  OrbitRecord rec{x0, {x0}, {x0.norm()}, false};
  rec.states.reserve(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k < n; ++k) {
    try {
      rec.states.push_back(map(rec.states.back()));
    } catch (const Error& e) {
      if (e.code() != ErrorCode::PrecisionExhausted) throw;
      rec.precision_exhausted = true;
      break;
    }
    rec.norm_trace.push_back(rec.states.back().norm());
  }
  return rec;
}

bool check_linearization(const CubicMap& map, const FixedPoint& fp, const PAdicNumber& x) {
  const NormExponent lambda = map.derivative(fp.value).norm();
  if (lambda.is_zero()) return false;
  const Distance gamma = distance(x, fp.value);
  if (!gamma.exact) return false;
  if (gamma.norm.is_zero()) return true;

  const NormExponent slope = (constant(3, map) * fp.value + map.a()).norm();
  const NormExponent bound = std::max(slope * gamma.norm, gamma.norm * gamma.norm);
  if (!(bound < lambda)) return false;

  const NormExponent expected = lambda * gamma.norm;
  const Distance image = distance(map(x), fp.value);
  if (image.certainly_equal(expected)) return true;
  if (!image.exact && !(image.norm < expected)) {
    throw Error(ErrorCode::PrecisionExhausted,
                "|f(x) - x0| is below the known digits; cannot confirm the linearization");
  }
  throw Error(ErrorCode::PredicateMismatch,
              "linearization fails at x = " + x.to_string() + ": |f(x) - x0| = " +
                  image.norm.to_string() + ", expected " + expected.to_string());
}

}  // namespace padyn
