#pragma once

// Region-by-region cross-check of the |a| > 1 basin structure.
//
// Every region is a union of spheres around 0 or -a. Each sampled point is
// classified and compared with the region's predicted verdict, and a
// per-point norm law is checked on its first images.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "padyn/basin.hpp"
#include "padyn/sampling.hpp"

namespace padyn {

struct SampleSpec {
  int depth = 3;
  SampleMode mode = SampleMode::Exhaustive;
  std::uint64_t seed = 0;
  // Exhaustive spheres larger than this fall back to `random_points` draws.
  std::int64_t budget = 100000;
  int random_points = 100;
  // 0 picks default_thread_count().
  unsigned threads = 0;
};

// Hardware concurrency, capped by PADIC_DYN_THREADS when set.
unsigned default_thread_count();

enum class LawStatus { Holds, Violated, Undetermined };

const char* to_string(LawStatus s) noexcept;

struct PointRecord {
  std::size_t region;
  PAdicNumber point;
  PointFate fate;
  bool matches = true;
  LawStatus law = LawStatus::Holds;
  // Stopping-time samples only.
  std::optional<int> stopping_time{};
};

struct RegionWitness {
  PAdicNumber point;
  Verdict verdict;
  int steps;
  std::string reason;
};

struct RegionTally {
  std::string name;
  std::string description;
  // Spheres S_{p^-e}(center) for these e.
  bool around_minus_a = false;
  std::vector<std::int64_t> sphere_exponents;
  bool includes_center = false;
  std::optional<Verdict> predicted;
  std::optional<int> max_steps;
  std::string law;

  int samples = 0;
  // Sampled points dropped by the |x| = |a| filter or skipped by the sampler.
  int discarded = 0;
  int matches = 0;
  int mismatches = 0;
  int undecided = 0;
  int law_violations = 0;
  int law_undetermined = 0;
  // Indexed by Verdict.
  std::array<int, 6> verdict_counts{};
  std::optional<RegionWitness> witness{};

  bool empty() const noexcept { return sphere_exponents.empty() && !includes_center; }
};

// Stopping times from S_{r0}(0) ∪ S_{|a|}(0) into B_{r3}(-a).
struct DMembership {
  int sampled = 0;
  int finite = 0;
  int to_x1 = 0;
  int to_infinity = 0;
  int sphere_invariant = 0;
  int undecided = 0;
  // Decided fates: TO_X1 exactly when T is finite.
  int consistent = 0;
  int inconsistent = 0;
  // Finite T not confirmed by re-simulating the orbit.
  int resimulation_failures = 0;
  std::optional<PAdicNumber> witness{};
};

struct AnalysisReport {
  std::int64_t a_valuation = 0;
  bool non_theorem_regime = false;
  int max_iter = 0;
  SampleSpec spec;
  std::vector<RegionTally> regions;
  DMembership d_membership;
  std::vector<PointRecord> records;
  std::vector<PointRecord> d_records;

  int total_mismatches() const noexcept;
  int total_law_violations() const noexcept;
};

// Requires |a| > 1 (RegimeMismatch otherwise) and max_iter >= 1.
AnalysisReport basin_report(const BasinAnalyzer& analyzer, const SampleSpec& spec, int max_iter);

inline AnalysisReport basin_report(const CubicMap& map, const SampleSpec& spec, int max_iter) {
  return basin_report(BasinAnalyzer(map), spec, max_iter);
}

// Samples of S_{p^-e}(center) following the spec's mode and budget.
SphereSample sample_region_sphere(const PAdicNumber& center, std::int64_t e,
                                  const SampleSpec& spec, std::uint64_t stream, int precision);

}  // namespace padyn
