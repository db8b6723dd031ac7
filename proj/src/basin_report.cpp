#include "padyn/basin_report.hpp"

#include <cstdlib>
#include <functional>
#include <thread>

#include "parallel.hpp"

namespace padyn {

const char* to_string(LawStatus s) noexcept {
  switch (s) {
    case LawStatus::Holds: return "HOLDS";
    case LawStatus::Violated: return "VIOLATED";
    case LawStatus::Undetermined: return "UNDETERMINED";
  }
  return "?";
}

unsigned default_thread_count() {
  unsigned n = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("PADIC_DYN_THREADS")) {
    char* end = nullptr;
    const long cap = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && cap >= 1) n = std::min<unsigned>(n, static_cast<unsigned>(cap));
  }
  return n;
}

int AnalysisReport::total_mismatches() const noexcept {
  int n = 0;
  for (const auto& r : regions) n += r.mismatches;
  return n;
}

int AnalysisReport::total_law_violations() const noexcept {
  int n = 0;
  for (const auto& r : regions) n += r.law_violations;
  return n;
}

SphereSample sample_region_sphere(const PAdicNumber& center, std::int64_t e,
                                  const SampleSpec& spec, std::uint64_t stream, int precision) {
  const NormExponent radius = NormExponent::Finite(e);
  const bool exhaustive = spec.mode == SampleMode::Exhaustive &&
                          unit_count(center.prime(), spec.depth) <= spec.budget;
  if (exhaustive) {
    return sample_sphere(center, radius, spec.depth, SampleMode::Exhaustive, spec.budget, 0,
                         precision);
  }
  return sample_sphere(center, radius, spec.depth, SampleMode::Random, spec.random_points,
                       mix_seed(spec.seed, stream), precision);
}

namespace {

using Law = std::function<LawStatus(const PAdicNumber&)>;

// Runs body, mapping PrecisionExhausted to Undetermined.
LawStatus guarded(const std::function<bool()>& body) {
  try {
    return body() ? LawStatus::Holds : LawStatus::Violated;
  } catch (const Error& e) {
    if (e.code() != ErrorCode::PrecisionExhausted) throw;
    return LawStatus::Undetermined;
  }
}

struct RegionPlan {
  RegionTally tally;
  Law law;
  // Keep only points with |x| = |a|.
  bool filter_abs_a = false;
};

std::vector<std::int64_t> range(std::int64_t lo, std::int64_t hi) {
  std::vector<std::int64_t> out;
  for (std::int64_t e = lo; e <= hi; ++e) out.push_back(e);
  return out;
}

}  // namespace

AnalysisReport basin_report(const BasinAnalyzer& analyzer, const SampleSpec& spec, int max_iter) {
  const CubicMap& map = analyzer.map();
  if (map.regime() != Regime::ABig) {
    throw Error(ErrorCode::RegimeMismatch, "basin_report needs |a| > 1");
  }
  if (max_iter < 1) throw Error(ErrorCode::InvalidArgument, "max_iter must be at least 1");

  const Prime p = map.prime();
  const std::int64_t va = map.a_valuation();
  const std::int64_t k = -va;
  const int prec = map.precision();
  const RadiusLadder& ladder = analyzer.ladder();
  const PAdicNumber zero = PAdicNumber::zero(p);
  const PAdicNumber minus_a = -map.a();

  AnalysisReport report;
  report.a_valuation = va;
  report.non_theorem_regime = va % 2 == 0;
  report.max_iter = max_iter;
  report.spec = spec;

  // |f(x)| = |x|^2 |a| for r1 < |x| < |a|.
  const Law image_law = [&](const PAdicNumber& x) {
    return guarded([&] { return map(x).valuation() == 2 * x.valuation() + va; });
  };
  const Law invariance_law = [&](const PAdicNumber& x) {
    return guarded([&] {
      PAdicNumber y = x;
      for (int i = 0; i < max_iter; ++i) {
        y = map(y);
        if (y.norm() != ladder.r(1)) return false;
      }
      return true;
    });
  };
  const Law cubing_law = [&](const PAdicNumber& x) {
    return guarded([&] {
      PAdicNumber y = x;
      for (int i = 0; i < 3; ++i) {
        const PAdicNumber next = map(y);
        if (next.valuation() != 3 * y.valuation()) return false;
        y = next;
      }
      return true;
    });
  };
  // |f(x)| = |a|^2 |x + a|, then the images follow `chain` (norm exponents).
  auto minus_a_law = [&](std::vector<std::int64_t> chain) -> Law {
    return [&, chain](const PAdicNumber& x) {
      return guarded([&] {
        const Distance d = distance(x, minus_a);
        if (!d.exact) throw Error(ErrorCode::PrecisionExhausted, "x + a unresolved");
        PAdicNumber y = map(x);
        const NormExponent expected =
            d.norm.is_zero() ? NormExponent::Zero() : NormExponent::Finite(2 * va + d.norm.exponent());
        if (y.norm() != expected) return false;
        for (std::size_t i = 0; i < chain.size(); ++i) {
          if (i > 0) y = map(y);
          if (y.norm() != NormExponent::Finite(chain[i])) return false;
        }
        return true;
      });
    };
  };
  auto chain_law = [&](std::vector<std::int64_t> chain) -> Law {
    return [&, chain](const PAdicNumber& x) {
      return guarded([&] {
        PAdicNumber y = x;
        for (auto e : chain) {
          y = map(y);
          if (y.norm() != NormExponent::Finite(e)) return false;
        }
        return true;
      });
    };
  };

  std::vector<RegionPlan> plans;
  auto add = [&](std::string name, std::string description, bool around_minus_a,
                 std::vector<std::int64_t> exps, bool center, std::optional<Verdict> predicted,
                 std::optional<int> max_steps, std::string law_name, Law law,
                 bool filter = false) {
    RegionTally t;
    t.name = std::move(name);
    t.description = std::move(description);
    t.around_minus_a = around_minus_a;
    t.sphere_exponents = std::move(exps);
    t.includes_center = center;
    t.predicted = predicted;
    t.max_steps = max_steps;
    t.law = std::move(law_name);
    plans.push_back({std::move(t), std::move(law), filter});
  };

  add("B_r1(0)", "|x| < r1", false, range(k + 1, k + 3), true, Verdict::ToX1, std::nullopt, "",
      nullptr);
  add("S_r1(0)", "|x| = r1", false, {k}, false, Verdict::SphereInvariant, std::nullopt,
      "|f^n(x)| = r1 for n <= max_iter", invariance_law);
  add("A(r1,r0)", "r1 < |x| < 1", false, range(1, k - 1), false, Verdict::ToInfinity,
      std::nullopt, "|f(x)| = |x|^2 |a|", image_law);
  add("S_r0(0)", "|x| = 1", false, {0}, false, std::nullopt, std::nullopt, "|f(x)| = |a|",
      chain_law({va}));
  add("A(r0,|a|)", "1 < |x| < |a|", false, range(-k + 1, -1), false, Verdict::ToInfinity,
      std::nullopt, "|f(x)| = |x|^2 |a|", image_law);
  add("S_r(0),r>|a|", "|x| > |a|", false, range(-k - 3, -k - 1), false, Verdict::ToInfinity,
      std::nullopt, "|f(x)| = |x|^3 for 3 steps", cubing_law);
  add("B_r3(-a)", "|x + a| < r3", true, range(3 * k + 1, 3 * k + 3), true, Verdict::ToX1, 2,
      "|f(x)| = |a|^2 |x + a|", minus_a_law({}));
  add("S_r3(-a)", "|x + a| = r3", true, {3 * k}, false, Verdict::SphereInvariant, std::nullopt,
      "|f(x)| = r1", minus_a_law({k}));
  add("A_-a(r3,r2)", "r3 < |x + a| < r2", true, range(2 * k + 1, 3 * k - 1), false,
      Verdict::ToInfinity, std::nullopt, "|f(x)| = |a|^2 |x + a|", minus_a_law({}));
  add("S_r2(-a)", "|x + a| = r2", true, {2 * k}, false, std::nullopt, std::nullopt,
      "|f(x)| = 1, |f^2(x)| = |a|", minus_a_law({0, va}));
  add("A_-a(r2,r1)", "r2 < |x + a| < r1", true, range(k + 1, 2 * k - 1), false,
      Verdict::ToInfinity, std::nullopt, "|f(x)| = |a|^2 |x + a|", minus_a_law({}));
  add("S_r1(-a)", "|x + a| = r1", true, {k}, false, std::nullopt, std::nullopt, "|f(x)| = |a|",
      minus_a_law({va}));
  add("A_-a(r1,|a|]", "r1 < |x + a| <= |a|, |x| = |a|", true, range(-k, k - 1), false,
      Verdict::ToInfinity, std::nullopt, "|f(x)| = |a|^2 |x + a|", minus_a_law({}), true);

  // Sampling is sequential so the point order never depends on threads.
  struct Job {
    std::size_t region;
    PAdicNumber point;
  };
  std::vector<Job> jobs;
  for (std::size_t r = 0; r < plans.size(); ++r) {
    RegionPlan& plan = plans[r];
    const PAdicNumber& center = plan.tally.around_minus_a ? minus_a : zero;
    if (plan.tally.includes_center) jobs.push_back({r, center});
    for (std::size_t s = 0; s < plan.tally.sphere_exponents.size(); ++s) {
      const std::uint64_t stream = (static_cast<std::uint64_t>(r) << 16) | s;
      SphereSample sample =
          sample_region_sphere(center, plan.tally.sphere_exponents[s], spec, stream, prec);
      plan.tally.discarded += sample.skipped;
      for (auto& x : sample.points) {
        if (plan.filter_abs_a && x.norm() != ladder.abs_a()) {
          ++plan.tally.discarded;
          continue;
        }
        jobs.push_back({r, std::move(x)});
      }
    }
  }

  const unsigned threads = spec.threads ? spec.threads : default_thread_count();
  std::vector<std::optional<PointRecord>> results(jobs.size());
  detail::parallel_for(jobs.size(), threads, [&](std::size_t i) {
    const Job& job = jobs[i];
    const RegionPlan& plan = plans[job.region];
    PointRecord rec{job.region, job.point, analyzer.classify_point(job.point, max_iter)};
    const auto& t = plan.tally;
    if (t.predicted && rec.fate.verdict != Verdict::Undecided) {
      rec.matches = rec.fate.verdict == *t.predicted &&
                    (!t.max_steps || rec.fate.steps_used <= *t.max_steps);
    }
    if (plan.law) rec.law = plan.law(job.point);
    results[i] = std::move(rec);
  });

  for (auto& slot : results) {
    PointRecord& rec = *slot;
    RegionTally& t = plans[rec.region].tally;
    ++t.samples;
    ++t.verdict_counts[static_cast<std::size_t>(rec.fate.verdict)];
    std::string reason;
    if (rec.fate.verdict == Verdict::Undecided) {
      ++t.undecided;
    } else if (t.predicted) {
      if (rec.matches) {
        ++t.matches;
      } else {
        ++t.mismatches;
        reason = std::string("expected ") + to_string(*t.predicted);
      }
    }
    if (rec.law == LawStatus::Violated) {
      ++t.law_violations;
      if (reason.empty()) reason = "norm law violated: " + t.law;
    } else if (rec.law == LawStatus::Undetermined) {
      ++t.law_undetermined;
    }
    if (!reason.empty() && !t.witness) {
      t.witness = RegionWitness{rec.point, rec.fate.verdict, rec.fate.steps_used, reason};
    }
    report.records.push_back(std::move(rec));
  }
  for (auto& plan : plans) report.regions.push_back(std::move(plan.tally));

  // D[S_r0(0) ∪ S_|a|(0), B_r3(-a)].
  std::vector<PAdicNumber> d_points;
  const std::uint64_t d_stream = 0xD0000;
  for (auto e : {std::int64_t{0}, va}) {
    auto sample = sample_region_sphere(zero, e, spec, d_stream + static_cast<std::uint64_t>(e - va),
                                       prec);
    for (auto& x : sample.points) d_points.push_back(std::move(x));
  }
  const NormExponent r3 = ladder.r(3);
  std::vector<std::optional<PointRecord>> d_results(d_points.size());
  std::vector<char> resim_ok(d_points.size(), 1);
  detail::parallel_for(d_points.size(), threads, [&](std::size_t i) {
    const PAdicNumber& x = d_points[i];
    PointRecord rec{plans.size(), x, analyzer.classify_point(x, max_iter)};
    const StoppingTimeResult st = analyzer.stopping_time(x, minus_a, r3, max_iter);
    rec.stopping_time = st.stopping_time;
    if (st.stopping_time) {
      const int T = *st.stopping_time;
      const OrbitRecord orbit = iterate(map, x, T);
      bool ok = !orbit.precision_exhausted && static_cast<int>(orbit.states.size()) == T + 1;
      for (int j = 1; ok && j <= T; ++j) {
        const bool inside = distance(orbit.states[static_cast<std::size_t>(j)], minus_a)
                                .certainly_below(r3);
        ok = inside == (j == T);
      }
      resim_ok[i] = ok;
    }
    const Verdict v = rec.fate.verdict;
    if (v != Verdict::Undecided) rec.matches = (v == Verdict::ToX1) == st.finite();
    d_results[i] = std::move(rec);
  });

  DMembership& d = report.d_membership;
  for (std::size_t i = 0; i < d_results.size(); ++i) {
    PointRecord& rec = *d_results[i];
    ++d.sampled;
    if (rec.stopping_time) ++d.finite;
    if (!resim_ok[i]) ++d.resimulation_failures;
    switch (rec.fate.verdict) {
      case Verdict::ToX1: ++d.to_x1; break;
      case Verdict::ToInfinity: ++d.to_infinity; break;
      case Verdict::SphereInvariant: ++d.sphere_invariant; break;
      default: ++d.undecided; break;
    }
    if (rec.fate.verdict != Verdict::Undecided) {
      if (rec.matches) {
        ++d.consistent;
      } else {
        ++d.inconsistent;
      }
    }
    if ((!rec.matches || !resim_ok[i]) && !d.witness) d.witness = rec.point;
    report.d_records.push_back(std::move(rec));
  }
  return report;
}

}  // namespace padyn
