#pragma once

// The cubic map f(x) = x^3 + a x^2 over Q_p with |a|_p != 1.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "padyn/padic.hpp"

namespace padyn {

enum class Regime { ABig, ASmall };

const char* to_string(Regime regime) noexcept;

struct Rational {
  std::int64_t numerator;
  std::int64_t denominator;

  std::string to_string() const;
};

class CubicMap {
 public:
  // Throws UnitNormParameter for |a| = 1, InvalidArgument for a = 0.
  // Orbits and samples use `a.precision()` as the working precision.
  explicit CubicMap(PAdicNumber a);

  // Exact parameter n/d. The stored parameter carries extra guard digits
  // (3·max(0, -v(a)) + 4) so fixed points stay accurate to the working
  // precision despite the |a|^2 expansion near the repelling point.
  static CubicMap from_rational(std::int64_t numerator, std::int64_t denominator, Prime p,
                                int precision = kDefaultPrecision);

  Prime prime() const noexcept { return a_.prime(); }
  const PAdicNumber& a() const noexcept { return a_; }
  std::int64_t a_valuation() const noexcept { return a_.valuation(); }
  Regime regime() const noexcept { return regime_; }
  int precision() const noexcept { return precision_; }
  const std::optional<Rational>& rational_parameter() const noexcept { return rational_; }

  // x^2 (x + a). Propagates PrecisionExhausted.
  PAdicNumber operator()(const PAdicNumber& x) const;
  PAdicNumber eval(const PAdicNumber& x) const { return (*this)(x); }

  // 3x^2 + 2ax.
  PAdicNumber derivative(const PAdicNumber& x) const;

  PAdicNumber from_rational_point(std::int64_t numerator, std::int64_t denominator) const {
    return PAdicNumber::from_rational(numerator, denominator, prime(), precision_);
  }

  // Human-readable parameter: the rational when known, digits otherwise.
  std::string parameter_string() const;

 private:
  CubicMap(PAdicNumber a, int precision, std::optional<Rational> rational);

  PAdicNumber a_;
  Regime regime_;
  int precision_;
  std::optional<Rational> rational_;
};

enum class FixedPointLabel { X1, X2, X3 };
enum class Stability { Attractive, Indifferent, Repelling };

const char* to_string(FixedPointLabel label) noexcept;
const char* to_string(Stability kind) noexcept;

inline Stability stability_of(NormExponent lambda) noexcept {
  const auto one = NormExponent::Finite(0);
  if (lambda < one) return Stability::Attractive;
  if (lambda == one) return Stability::Indifferent;
  return Stability::Repelling;
}

struct FixedPoint {
  FixedPointLabel label;
  PAdicNumber value;
  NormExponent lambda_norm;
  Stability kind;
};

// x1 = 0 always; x2, x3 = (-a ± sqrt(a^2 + 4)) / 2 when the root exists.
// X2 is the + branch, relabelled for |a| > 1 so that |x2| = |a|. Each point
// is already classified.
std::vector<FixedPoint> fixed_points(const CubicMap& map);

// Recomputes lambda_norm and kind from |f'(value)|.
FixedPoint classify(const CubicMap& map, FixedPoint fp);

struct OrbitRecord {
  PAdicNumber start;
  std::vector<PAdicNumber> states;
  std::vector<NormExponent> norm_trace;
  // Iteration stopped early because f cancelled past the known digits.
  bool precision_exhausted = false;
};

// Up to n + 1 states starting at x0.
OrbitRecord iterate(const CubicMap& map, const PAdicNumber& x0, int n);

// When max{|3 x0 + a| |x - x0|, |x - x0|^2} < |f'(x0)|, checks
// |f(x) - x0| = |f'(x0)| |x - x0| and returns true (throws PredicateMismatch
// if it does not hold). Returns false when the hypothesis fails.
bool check_linearization(const CubicMap& map, const FixedPoint& fp, const PAdicNumber& x);

}  // namespace padyn
