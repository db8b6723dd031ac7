#include "padyn/basin.hpp"

#include <algorithm>

namespace padyn {

const char* to_string(Verdict v) noexcept {
  switch (v) {
    case Verdict::ToX1: return "TO_X1";
    case Verdict::ToInfinity: return "TO_INFINITY";
    case Verdict::SphereInvariant: return "SPHERE_INVARIANT";
    case Verdict::EnteredTarget: return "ENTERED_TARGET";
    case Verdict::ConvergesTo: return "CONVERGES_TO";
    case Verdict::Undecided: return "UNDECIDED";
  }
  return "?";
}

const char* to_string(StopReason r) noexcept {
  switch (r) {
    case StopReason::Entered: return "ENTERED";
    case StopReason::Escaped: return "ESCAPED";
    case StopReason::Absorbed: return "ABSORBED";
    case StopReason::BudgetExhausted: return "BUDGET_EXHAUSTED";
    case StopReason::PrecisionExhausted: return "PRECISION_EXHAUSTED";
  }
  return "?";
}

bool ball_meets_sphere(NormExponent center_norm, NormExponent r, NormExponent rho) noexcept {
  if (center_norm >= r) return center_norm == rho;
  return rho < r;
}

bool ball_meets_ball(NormExponent center_norm, NormExponent r, NormExponent rho) noexcept {
  if (center_norm >= r) return center_norm < rho;
  return true;
}

NormExponent ball_norm_bound(NormExponent center_norm, NormExponent r) noexcept {
  if (center_norm >= r) return center_norm;
  return NormExponent::Finite(r.exponent() + 1);
}

BasinAnalyzer::BasinAnalyzer(CubicMap map)
    : map_(std::move(map)),
      ladder_(map_.prime(), map_.a_valuation()),
      fixed_points_(padyn::fixed_points(map_)) {
  if (map_.regime() == Regime::ASmall) {
    for (std::size_t i = 0; i < fixed_points_.size(); ++i) {
      const auto& fp = fixed_points_[i];
      if (fp.label != FixedPointLabel::X1 && fp.kind == Stability::Attractive) {
        attractors_.push_back(i);
      }
    }
  }
}

const FixedPoint* BasinAnalyzer::fixed_point(FixedPointLabel label) const noexcept {
  for (const auto& fp : fixed_points_) {
    if (fp.label == label) return &fp;
  }
  return nullptr;
}

std::optional<PointFate> BasinAnalyzer::decided_region(const PAdicNumber& x) const {
  PointFate fate;
  const NormExponent n = x.norm();
  if (map_.regime() == Regime::ABig) {
    const NormExponent r1 = ladder_.r(1);
    if (n < r1) {
      fate.verdict = Verdict::ToX1;
    } else if (n == r1) {
      fate.verdict = Verdict::SphereInvariant;
      fate.sphere_center = PAdicNumber::zero(map_.prime());
      fate.sphere_radius = r1;
    } else if (n > ladder_.abs_a()) {
      fate.verdict = Verdict::ToInfinity;
    } else {
      return std::nullopt;
    }
    return fate;
  }
  const NormExponent one = NormExponent::Finite(0);
  if (n < one) {
    fate.verdict = Verdict::ToX1;
  } else if (n > one) {
    fate.verdict = Verdict::ToInfinity;
  } else {
    return std::nullopt;
  }
  return fate;
}

PointFate BasinAnalyzer::classify_point(const PAdicNumber& x, int max_iter) const {
  if (max_iter < 1) throw Error(ErrorCode::InvalidArgument, "max_iter must be at least 1");
  const NormExponent one = NormExponent::Finite(0);
  PAdicNumber y = x;
  for (int step = 0;; ++step) {
    if (auto fate = decided_region(y)) {
      fate->steps_used = step;
      return *fate;
    }
    for (std::size_t i : attractors_) {
      const FixedPoint& fp = fixed_points_[i];
      if (distance(y, fp.value).certainly_below(one)) {
        PointFate fate;
        fate.verdict = Verdict::ConvergesTo;
        fate.limit = fp.label;
        fate.steps_used = step;
        return fate;
      }
    }
    if (step == max_iter) break;
    try {
      y = map_(y);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::PrecisionExhausted) throw;
      PointFate fate;
      fate.steps_used = step;
      fate.precision_exhausted = true;
      return fate;
    }
  }
  PointFate fate;
  fate.steps_used = max_iter;
  return fate;
}

StoppingTimeResult BasinAnalyzer::stopping_time(const PAdicNumber& x,
                                                const PAdicNumber& target_center,
                                                NormExponent target_radius, int budget) const {
  if (budget < 1) throw Error(ErrorCode::InvalidArgument, "budget must be at least 1");
  if (target_radius.is_zero()) {
    throw Error(ErrorCode::InvalidArgument, "target ball needs a positive radius");
  }
  const NormExponent center_norm = target_center.norm();
  const NormExponent escape_threshold =
      map_.regime() == Regime::ABig ? ladder_.abs_a() : NormExponent::Finite(0);
  const NormExponent target_bound = ball_norm_bound(center_norm, target_radius);

  StoppingTimeResult res{x, std::nullopt, 0, StopReason::BudgetExhausted};
  PAdicNumber y = x;
  for (int k = 1; k <= budget; ++k) {
    try {
      y = map_(y);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::PrecisionExhausted) throw;
      res.reason = StopReason::PrecisionExhausted;
      return res;
    }
    res.trajectory_len = k;
    const Distance d = distance(y, target_center);
    if (d.certainly_below(target_radius)) {
      res.stopping_time = k;
      res.reason = StopReason::Entered;
      return res;
    }
    if (!d.exact) {
      res.reason = StopReason::PrecisionExhausted;
      return res;
    }
    const auto region = decided_region(y);
    if (!region) continue;
    switch (region->verdict) {
      case Verdict::ToInfinity:
        // Norms only grow from here on.
        if (target_bound < y.norm() || target_bound <= escape_threshold) {
          res.reason = StopReason::Escaped;
          return res;
        }
        break;
      case Verdict::ToX1:
        if (!ball_meets_ball(center_norm, target_radius, y.norm())) {
          res.reason = StopReason::Absorbed;
          return res;
        }
        break;
      case Verdict::SphereInvariant:
        if (!ball_meets_sphere(center_norm, target_radius, region->sphere_radius)) {
          res.reason = StopReason::Absorbed;
          return res;
        }
        break;
      default:
        break;
    }
  }
  return res;
}

}  // namespace padyn
