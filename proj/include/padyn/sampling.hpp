#pragma once

#include <cstdint>
#include <vector>

#include "padyn/padic.hpp"

namespace padyn {

enum class SampleMode { Exhaustive, Random };

const char* to_string(SampleMode mode) noexcept;

// Points of the sphere S_radius(center) = { x : |x - center| = radius }.
struct SphereSample {
  PAdicNumber center;
  NormExponent radius;
  std::vector<PAdicNumber> points;
  int depth;
  SampleMode mode;
  std::uint64_t seed;
  // Draws that cancel the center to all of its known digits; not in points.
  int skipped;
};

// Points center + p^m·u with p^(-m) = radius and u a unit below p^depth.
// Exhaustive lists all (p-1)p^(depth-1) units in increasing order and throws
// BudgetExceeded when that exceeds `budget`. Random draws `budget` unit
// digit strings of length `depth` from a generator seeded with `seed`.
// `precision` is the relative precision of p^m·u. Draws whose sum with the
// center cancels past every known digit are counted in `skipped`.
SphereSample sample_sphere(const PAdicNumber& center, NormExponent radius, int depth,
                           SampleMode mode, std::int64_t budget, std::uint64_t seed = 0,
                           int precision = kDefaultPrecision);

// Number of units modulo p^depth, saturating at INT64_MAX.
std::int64_t unit_count(Prime p, int depth) noexcept;

// Deterministic 64-bit mixing for per-sphere seeds.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) noexcept;

}  // namespace padyn
