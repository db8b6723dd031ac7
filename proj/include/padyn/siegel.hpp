#pragma once

// Siegel discs around indifferent fixed points.

#include <cstdint>
#include <optional>
#include <vector>

#include "padyn/cubic_map.hpp"
#include "padyn/sampling.hpp"

namespace padyn {

struct SiegelCheckOptions {
  int radii = 3;          // spheres at radius/p, radius/p^2, ...
  int points = 100;       // spread across the radii
  int n_iter = 200;
  int depth = 3;
  SampleMode mode = SampleMode::Random;
  std::uint64_t seed = 0;
};

struct SiegelViolation {
  PAdicNumber start;
  NormExponent rho;
  int iteration;
  Distance observed;
};

struct SiegelCheckReport {
  FixedPointLabel label;
  PAdicNumber center;
  NormExponent radius;
  std::vector<NormExponent> radii;
  int points_checked = 0;
  int n_iter = 0;
  int violations = 0;
  // Orbits whose distance fell below the known digits.
  int undetermined = 0;
  std::optional<SiegelViolation> witness;
  // No sphere inside the radius is resolvable at the working precision.
  bool vacuous = false;

  bool passed() const noexcept { return violations == 0 && undetermined == 0; }
};

// For sampled x on S_rho(center), rho < radius, checks
// |f^k(x) - center| = rho for k = 1..n_iter. Throws InvalidArgument unless
// fp is indifferent.
SiegelCheckReport siegel_check(const CubicMap& map, const FixedPoint& fp, NormExponent radius,
                               const SiegelCheckOptions& options = {});

enum class DiscBoundary { OpenBall, ClosedBall };

const char* to_string(DiscBoundary b) noexcept;

struct SiegelBoundaryOptions {
  int sphere_points = 50;  // samples of S_1(x_sigma) for the closed-ball case
  int n_iter = 200;
  int depth = 3;
  std::uint64_t seed = 0;
};

struct SiegelBoundaryReport {
  FixedPointLabel label;
  PAdicNumber center;
  bool sqrt_minus_3 = false;
  DiscBoundary predicted = DiscBoundary::ClosedBall;
  DiscBoundary observed = DiscBoundary::ClosedBall;

  // Residues gamma = 1..p-1 and how many give |gamma^2 + 3 x gamma + 3| = 1.
  int residues_checked = 0;
  int residues_unit = 0;
  std::optional<std::uint32_t> witness_residue{};
  // Root of z^2 + 3 x z + 3 from (-3x + sqrt(-3 - 9 a x)) / 2, when it exists.
  std::optional<PAdicNumber> witness_gamma{};
  // |f(x + gamma0) - x| < 1: the unit sphere is not invariant.
  bool witness_leaves_sphere = false;

  // Closed-ball case: sampled orbits on S_1(center).
  int sphere_points = 0;
  int sphere_violations = 0;

  // The other nontrivial fixed point lies in this disc, so both share it.
  std::optional<FixedPointLabel> other_label{};
  std::optional<Distance> other_distance{};
  bool shares_disc_with_other = false;

  bool agrees = false;
  // For p = 2 disagreement is reported rather than thrown.
  bool asserted = true;
};

// Decides whether SI(x_sigma) is B_1 or its closure, both from the existence
// of sqrt(-3) and empirically. Requires |a| < 1, p != 3, fp in {X2, X3}.
// Throws PredicateMismatch when the two disagree (p != 2).
SiegelBoundaryReport siegel_boundary(const CubicMap& map, const FixedPoint& fp,
                                     const SiegelBoundaryOptions& options = {});

}  // namespace padyn
