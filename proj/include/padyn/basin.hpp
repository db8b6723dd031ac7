#pragma once

// Orbit fates and stopping times for f(x) = x^3 + a x^2.
//
// TO_X1 and TO_INFINITY are only ever declared once an orbit enters a region
// that is provably absorbing: B_{r1}(0) resp. { |x| > |a| } for |a| > 1, and
// B_1(0) resp. { |x| > 1 } for |a| < 1. Everything else stays UNDECIDED
// until the iteration budget runs out.

#include <cstdint>
#include <optional>
#include <vector>

#include "padyn/cubic_map.hpp"

namespace padyn {

// r_k = |a|^(-k), kept as exact norm exponents.
class RadiusLadder {
 public:
  RadiusLadder(Prime p, std::int64_t a_valuation) : p_(p), a_valuation_(a_valuation) {}

  Prime prime() const noexcept { return p_; }
  std::int64_t a_valuation() const noexcept { return a_valuation_; }
  // |a| = p^(-v(a)), so r_k = p^(k·v(a)).
  NormExponent r(std::int64_t k) const noexcept {
    return NormExponent::Finite(-k * a_valuation_);
  }
  NormExponent abs_a() const noexcept { return NormExponent::Finite(a_valuation_); }

 private:
  Prime p_;
  std::int64_t a_valuation_;
};

enum class Verdict { ToX1, ToInfinity, SphereInvariant, EnteredTarget, ConvergesTo, Undecided };

const char* to_string(Verdict v) noexcept;

struct PointFate {
  Verdict verdict = Verdict::Undecided;
  int steps_used = 0;
  // SphereInvariant: the orbit stays on S_radius(center) forever.
  std::optional<PAdicNumber> sphere_center;
  NormExponent sphere_radius = NormExponent::Zero();
  // EnteredTarget.
  int stopping_time = 0;
  // ConvergesTo.
  FixedPointLabel limit = FixedPointLabel::X1;
  // Undecided because an iterate cancelled past its known digits.
  bool precision_exhausted = false;
};

enum class StopReason {
  Entered,            // T found
  Escaped,            // orbit provably diverges and the target is bounded
  Absorbed,           // orbit provably stays away (sphere or basin of x1)
  BudgetExhausted,
  PrecisionExhausted,
};

const char* to_string(StopReason r) noexcept;

struct StoppingTimeResult {
  PAdicNumber point;
  // min { k >= 1 : f^k(point) in target }, if found.
  std::optional<int> stopping_time;
  int trajectory_len = 0;
  StopReason reason = StopReason::BudgetExhausted;

  bool finite() const noexcept { return stopping_time.has_value(); }
};

// Holds the map with its fixed points and radius ladder so repeated
// classification does not recompute square roots.
class BasinAnalyzer {
 public:
  explicit BasinAnalyzer(CubicMap map);

  const CubicMap& map() const noexcept { return map_; }
  const RadiusLadder& ladder() const noexcept { return ladder_; }
  const std::vector<FixedPoint>& fixed_points() const noexcept { return fixed_points_; }
  const FixedPoint* fixed_point(FixedPointLabel label) const noexcept;

  // Verdict for x if it already lies in a proved region, with steps_used 0.
  std::optional<PointFate> decided_region(const PAdicNumber& x) const;

  // Requires max_iter >= 1.
  PointFate classify_point(const PAdicNumber& x, int max_iter) const;

  // Target is the open ball B_radius(center). Requires budget >= 1.
  StoppingTimeResult stopping_time(const PAdicNumber& x, const PAdicNumber& target_center,
                                   NormExponent target_radius, int budget) const;

 private:
  CubicMap map_;
  RadiusLadder ladder_;
  std::vector<FixedPoint> fixed_points_;
  // Fixed points other than x1 whose B_1 neighbourhood is in their basin.
  std::vector<std::size_t> attractors_;
};

inline std::optional<PointFate> decided_region(const CubicMap& map, const PAdicNumber& x) {
  return BasinAnalyzer(map).decided_region(x);
}

inline PointFate classify_point(const CubicMap& map, const PAdicNumber& x, int max_iter) {
  return BasinAnalyzer(map).classify_point(x, max_iter);
}

inline StoppingTimeResult stopping_time(const CubicMap& map, const PAdicNumber& x,
                                        const PAdicNumber& target_center,
                                        NormExponent target_radius, int budget) {
  return BasinAnalyzer(map).stopping_time(x, target_center, target_radius, budget);
}

// Radius of the ball around 0 inside the basin of x1: r1 for |a| > 1, 1 for
// |a| < 1. On it |f(x)| < |x|, so once |y| < |c| the distance |y - c| stays |c|.
inline NormExponent x1_basin_radius(const CubicMap& map) noexcept {
  return map.regime() == Regime::ABig ? NormExponent::Finite(-map.a_valuation())
                                      : NormExponent::Finite(0);
}

// Whether the open ball B_r(c) meets S_rho(0).
bool ball_meets_sphere(NormExponent center_norm, NormExponent r, NormExponent rho) noexcept;
// Whether the open ball B_r(c) meets B_rho(0).
bool ball_meets_ball(NormExponent center_norm, NormExponent r, NormExponent rho) noexcept;
// Largest norm attained on B_r(c), as an upper bound.
NormExponent ball_norm_bound(NormExponent center_norm, NormExponent r) noexcept;

}  // namespace padyn
