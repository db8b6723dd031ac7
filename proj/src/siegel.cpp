#include "padyn/siegel.hpp"

#include "padyn/basin.hpp"
#include "padyn/hensel.hpp"

namespace padyn {

const char* to_string(DiscBoundary b) noexcept {
  return b == DiscBoundary::OpenBall ? "OPEN_BALL" : "CLOSED_BALL";
}

namespace {

struct OrbitOnSphere {
  bool violated = false;
  bool undetermined = false;
  int iteration = 0;
  Distance observed{NormExponent::Zero(), true};
};

// Follows x for n_iter steps, requiring |f^k(x) - center| = rho throughout.
OrbitOnSphere follow_on_sphere(const CubicMap& map, const PAdicNumber& center,
                               const PAdicNumber& x, NormExponent rho, int n_iter) {
  OrbitOnSphere out;
  const NormExponent absorbed = x1_basin_radius(map);
  PAdicNumber y = x;
  for (int k = 1; k <= n_iter; ++k) {
    try {
      y = map(y);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::PrecisionExhausted) throw;
      out.undetermined = true;
      out.iteration = k;
      return out;
    }
    const Distance d = distance(y, center);
    if (d.certainly_equal(rho)) {
      // Absorbed by x1 below |center|: the distance is frozen from here on.
      if (y.norm() < absorbed && y.norm() < center.norm()) return out;
      continue;
    }
    out.iteration = k;
    out.observed = d;
    if (d.exact || d.norm < rho) {
      out.violated = true;
    } else {
      out.undetermined = true;
    }
    return out;
  }
  return out;
}

}  // namespace

SiegelCheckReport siegel_check(const CubicMap& map, const FixedPoint& fp, NormExponent radius,
                               const SiegelCheckOptions& options) {
  if (fp.kind != Stability::Indifferent) {
    throw Error(ErrorCode::InvalidArgument, "Siegel discs are centred at indifferent points");
  }
  if (radius.is_zero() || options.radii < 1) {
    throw Error(ErrorCode::InvalidArgument, "Siegel check needs a finite radius and radii >= 1");
  }
  SiegelCheckReport rep{fp.label, fp.value, radius, {}, 0, options.n_iter, 0, 0, {}, false};
  const auto center_abs = fp.value.absolute_precision();
  for (int i = 1; i <= options.radii; ++i) {
    const std::int64_t e = radius.exponent() + i;
    if (center_abs && e >= *center_abs) break;
    rep.radii.push_back(NormExponent::Finite(e));
  }
  if (rep.radii.empty()) {
    rep.vacuous = true;
    return rep;
  }

  const int n = static_cast<int>(rep.radii.size());
  for (int i = 0; i < n; ++i) {
    const NormExponent rho = rep.radii[static_cast<std::size_t>(i)];
    const int count = options.points / n + (i < options.points % n ? 1 : 0);
    const SphereSample sample =
        sample_sphere(fp.value, rho, options.depth, options.mode,
                      options.mode == SampleMode::Random ? count : unit_count(map.prime(), options.depth),
                      mix_seed(options.seed, static_cast<std::uint64_t>(i)), map.precision());
    for (const auto& x : sample.points) {
      ++rep.points_checked;
      const OrbitOnSphere o = follow_on_sphere(map, fp.value, x, rho, options.n_iter);
      if (o.undetermined) ++rep.undetermined;
      if (o.violated) {
        ++rep.violations;
        if (!rep.witness) rep.witness = SiegelViolation{x, rho, o.iteration, o.observed};
      }
    }
  }
  return rep;
}

SiegelBoundaryReport siegel_boundary(const CubicMap& map, const FixedPoint& fp,
                                     const SiegelBoundaryOptions& options) {
  if (map.regime() != Regime::ASmall) {
    throw Error(ErrorCode::RegimeMismatch, "the unit-sphere dichotomy needs |a| < 1");
  }
  const Prime p = map.prime();
  if (p.value() == 3) {
    throw Error(ErrorCode::InvalidArgument, "p = 3 is excluded: the fixed points are attractive");
  }
  if (fp.label == FixedPointLabel::X1) {
    throw Error(ErrorCode::InvalidArgument, "the dichotomy concerns x2 and x3");
  }

  const int prec = map.a().precision();
  auto integer = [&](std::int64_t c) { return PAdicNumber::from_integer(c, p, prec); };
  const NormExponent one = NormExponent::Finite(0);
  const PAdicNumber& x = fp.value;
  const PAdicNumber three_x = integer(3) * x;
  const PAdicNumber minus_three = integer(-3);

  SiegelBoundaryReport rep{fp.label, x};
  rep.sqrt_minus_3 = sqrt_minus_3_exists(p);
  rep.predicted = rep.sqrt_minus_3 ? DiscBoundary::OpenBall : DiscBoundary::ClosedBall;

  // |gamma^2 + 3x gamma + 3| depends only on gamma mod p.
  for (std::uint32_t g = 1; g < p.value(); ++g) {
    const PAdicNumber gamma = integer(g);
    ++rep.residues_checked;
    const Distance d = distance((gamma + three_x) * gamma, minus_three);
    if (d.certainly_equal(one)) {
      ++rep.residues_unit;
    } else if (d.certainly_below(one) && !rep.witness_residue) {
      rep.witness_residue = g;
    }
  }

  // z = (-3x + sqrt(-3 - 9ax)) / 2 solves z^2 + 3xz + 3 = 0.
  const PAdicNumber disc = minus_three - integer(9) * map.a() * x;
  if (!disc.is_zero() && sqrt_exists(disc).exists) {
    const PAdicNumber z = (-three_x + sqrt(disc)) / integer(2);
    if (z.norm() == one && distance((z + three_x) * z, minus_three).certainly_below(one)) {
      rep.witness_gamma = z;
    }
  }

  const bool has_witness = rep.witness_gamma || rep.witness_residue;
  rep.observed = has_witness ? DiscBoundary::OpenBall : DiscBoundary::ClosedBall;

  bool dynamics_ok = false;
  if (has_witness) {
    const PAdicNumber gamma0 = rep.witness_gamma ? *rep.witness_gamma : integer(*rep.witness_residue);
    rep.witness_leaves_sphere = distance(map(x + gamma0), x).certainly_below(one);
    dynamics_ok = rep.witness_leaves_sphere;
  } else {
    const SphereSample sample = sample_sphere(x, one, options.depth, SampleMode::Random,
                                              options.sphere_points, options.seed,
                                              map.precision());
    for (const auto& pt : sample.points) {
      ++rep.sphere_points;
      const OrbitOnSphere o = follow_on_sphere(map, x, pt, one, options.n_iter);
      if (o.violated || o.undetermined) ++rep.sphere_violations;
    }
    dynamics_ok = rep.sphere_violations == 0;
  }

  for (const auto& other : fixed_points(map)) {
    if (other.label == FixedPointLabel::X1 || other.label == fp.label) continue;
    rep.other_label = other.label;
    rep.other_distance = distance(x, other.value);
    rep.shares_disc_with_other = rep.observed == DiscBoundary::OpenBall
                                     ? rep.other_distance->certainly_below(one)
                                     : rep.other_distance->norm <= one;
  }

  rep.agrees = rep.predicted == rep.observed && dynamics_ok;
  rep.asserted = p.value() != 2;
  if (!rep.agrees && rep.asserted) {
    throw Error(ErrorCode::PredicateMismatch,
                std::string("Siegel boundary for ") + to_string(fp.label) + ": predicted " +
                    to_string(rep.predicted) + ", observed " + to_string(rep.observed));
  }
  return rep;
}

}  // namespace padyn
