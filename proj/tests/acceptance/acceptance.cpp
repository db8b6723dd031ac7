// Acceptance run: prints one PASS/FAIL line per criterion and exits nonzero
// if any criterion fails.

#include <sys/wait.h>

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "padyn/basin_report.hpp"
#include "padyn/hensel.hpp"
#include "padyn/siegel.hpp"
#include "support/reference_padic.hpp"

using namespace padyn;

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fmt_seconds(double s) {
  std::ostringstream os;
  os.precision(2);
  os << std::fixed << s << " s";
  return os.str();
}

PAdicNumber random_number(Prime p, std::mt19937_64& rng, int precision, int max_val) {
  std::uniform_int_distribution<std::uint32_t> digit(0, p.value() - 1);
  std::uniform_int_distribution<std::uint32_t> lead(1, p.value() - 1);
  std::uniform_int_distribution<int> val(-max_val, max_val);
  std::vector<std::uint32_t> d(static_cast<std::size_t>(precision));
  d[0] = lead(rng);
  for (std::size_t i = 1; i < d.size(); ++i) d[i] = digit(rng);
  return PAdicNumber::from_digits(p, val(rng), std::move(d));
}

FixedPoint fixed_point(const CubicMap& m, FixedPointLabel label) {
  for (const auto& fp : fixed_points(m)) {
    if (fp.label == label) return fp;
  }
  throw Error(ErrorCode::InvalidArgument, "fixed point missing");
}

Outcome arithmetic_laws() {
  const auto t0 = Clock::now();
  std::mt19937_64 rng(20240101);
  int pairs = 0, violations = 0, cancelled = 0;
  for (std::uint32_t pv : {2u, 3u, 5u, 7u}) {
    const Prime p(pv);
    for (int i = 0; i < 2500; ++i) {
      const auto x = random_number(p, rng, 32, 6);
      // A third of the pairs share the norm of x to exercise the equal-norm case.
      auto y = random_number(p, rng, 32, 6);
      if (i % 3 == 0) y = PAdicNumber::from_digits(p, x.valuation(), {y.digits().begin(), y.digits().end()});
      ++pairs;
      const NormExponent nx = x.norm(), ny = y.norm();
      const NormExponent mx = std::max(nx, ny);
      if (const auto s = try_add(x, y)) {
        if (s->norm() > mx) ++violations;
        if (nx != ny && s->norm() != mx) ++violations;
      } else {
        ++cancelled;
        if (nx != ny) ++violations;
      }
      if ((x * y).norm() != nx * ny) ++violations;
      if (distance(x, y).norm > mx) ++violations;
    }
  }
  const double s = seconds_since(t0);
  std::ostringstream os;
  os << pairs << " pairs in Q2, Q3, Q5, Q7 at N=32, " << violations << " violations ("
     << cancelled << " sums cancelled past the known digits), " << fmt_seconds(s);
  return {violations == 0 && pairs >= 10000 && s < 10.0, os.str()};
}

Outcome sqrt_oracle() {
  const auto t0 = Clock::now();
  int classes = 0, disagreements = 0;
  for (std::uint32_t pv : {2u, 3u, 5u, 7u, 13u}) {
    const Prime p(pv);
    const int k = pv == 2 ? 5 : 3;
    const auto modulus = static_cast<std::int64_t>(reference::power(pv, k));
    for (std::int64_t u = 1; u < modulus; ++u) {
      if (u % pv == 0) continue;
      ++classes;
      const bool lib = sqrt_exists(PAdicNumber::from_integer(u, p, k)).exists;
      if (lib != reference::square_mod(u, pv, k)) ++disagreements;
    }
  }
  std::mt19937_64 rng(77);
  int squares = 0, failures = 0;
  const std::array<std::uint32_t, 5> primes{2, 3, 5, 7, 13};
  for (int i = 0; i < 1000; ++i) {
    const Prime p(primes[static_cast<std::size_t>(i) % primes.size()]);
    const auto y = random_number(p, rng, 32, 4);
    const auto x = y * y;
    ++squares;
    try {
      const auto r = sqrt(x);
      const auto back = r * r;
      if (!(back == x) || back.precision() != r.precision()) ++failures;
    } catch (const Error&) {
      ++failures;
    }
  }
  const double s = seconds_since(t0);
  std::ostringstream os;
  os << classes << " unit classes vs brute force mod p^3 (2^5), " << disagreements
     << " disagreements; " << squares << " random squares, " << failures << " failures, "
     << fmt_seconds(s);
  return {disagreements == 0 && failures == 0 && s < 10.0, os.str()};
}

Outcome fixed_point_residuals() {
  const NormExponent tol = NormExponent::Finite(30);
  int points = 0, bad = 0;
  struct Case {
    std::uint32_t p;
    std::int64_t n, d;
  };
  for (const Case c : {Case{5, 1, 5}, {7, 1, 7}, {7, 7, 1}, {5, 5, 1}, {3, 3, 1}, {2, 1, 2}, {2, 8, 1}}) {
    const auto m = CubicMap::from_rational(c.n, c.d, Prime(c.p));
    const auto fps = fixed_points(m);
    if (fps.size() != 3) {
      ++bad;
      continue;
    }
    for (const auto& fp : fps) {
      ++points;
      if (distance(m(fp.value), fp.value).norm > tol) ++bad;
    }
    const auto& x2 = fps[1].value;
    const auto& x3 = fps[2].value;
    const auto one = PAdicNumber::from_integer(1, m.prime(), m.precision());
    if (distance(x2 + x3, -m.a()).norm > tol) ++bad;
    if (distance(x2 * x3, -one).norm > tol) ++bad;
  }
  const auto two = fixed_points(CubicMap::from_rational(2, 1, Prime(2)));
  const bool only_x1 = two.size() == 1 && two[0].label == FixedPointLabel::X1;
  std::ostringstream os;
  os << points << " fixed points over 7 maps, " << bad
     << " residual or Vieta failures above p^-30; (2,2) returns "
     << two.size() << " point(s)";
  return {bad == 0 && only_x1, os.str()};
}

Outcome a_big_structure() {
  const auto t0 = Clock::now();
  const auto m = CubicMap::from_rational(1, 5, Prime(5));
  SampleSpec spec;
  spec.depth = 3;
  spec.mode = SampleMode::Exhaustive;
  const auto rep = basin_report(m, spec, 200);
  // At |a| = 5 several annuli hold no sphere p^-e and are empty.
  int samples = 0, mismatches = 0, undecided = 0, law_bad = 0, predicted = 0, unsampled = 0;
  for (const auto& r : rep.regions) {
    if (!r.predicted || r.empty()) continue;
    ++predicted;
    if (r.samples == 0) ++unsampled;
    samples += r.samples;
    mismatches += r.mismatches;
    if (*r.predicted != Verdict::SphereInvariant) undecided += r.undecided;
    law_bad += r.law_violations + r.law_undetermined;
  }
  const double s = seconds_since(t0);
  std::ostringstream os;
  os << predicted << " non-empty predicted regions (" << unsampled << " unsampled), " << samples
     << " samples, " << mismatches
     << " mismatches, " << undecided << " undecided, " << law_bad << " norm-law failures, "
     << fmt_seconds(s);
  return {mismatches == 0 && undecided == 0 && law_bad == 0 && predicted > 0 &&
              unsampled == 0 && s < 60.0,
          os.str()};
}

Outcome siegel_a_big() {
  const auto m = CubicMap::from_rational(1, 5, Prime(5));
  const auto x3 = fixed_point(m, FixedPointLabel::X3);
  SiegelCheckOptions o;
  o.radii = 3;
  o.points = 100;
  o.n_iter = 200;
  const auto rep = siegel_check(m, x3, NormExponent::Finite(1), o);
  std::ostringstream os;
  os << rep.points_checked << " points on " << rep.radii.size() << " spheres around x3, "
     << rep.n_iter << " iterations, " << rep.violations << " violations, " << rep.undetermined
     << " undetermined";
  return {rep.passed() && !rep.vacuous && rep.points_checked == 100 && rep.radii.size() == 3,
          os.str()};
}

Outcome a_small_dichotomy() {
  std::ostringstream os;
  bool ok = true;
  try {
    const auto m7 = CubicMap::from_rational(7, 1, Prime(7));
    const auto three = m7.from_rational_point(3, 1);
    for (auto label : {FixedPointLabel::X2, FixedPointLabel::X3}) {
      const auto rep = siegel_boundary(m7, fixed_point(m7, label));
      const bool witness =
          rep.witness_gamma && rep.witness_gamma->norm() == NormExponent::Finite(0) &&
          distance((*rep.witness_gamma + three * rep.center) * *rep.witness_gamma, -three)
              .certainly_below(NormExponent::Finite(0));
      ok = ok && rep.observed == DiscBoundary::OpenBall && witness && rep.agrees &&
           sqrt_minus_3_exists(Prime(7));
      os << "(7,7) " << to_string(label) << " " << to_string(rep.observed)
         << (witness ? " with witness" : " without witness") << "; ";
    }
    const auto m5 = CubicMap::from_rational(5, 1, Prime(5));
    for (auto label : {FixedPointLabel::X2, FixedPointLabel::X3}) {
      const auto rep = siegel_boundary(m5, fixed_point(m5, label));
      ok = ok && rep.observed == DiscBoundary::ClosedBall && rep.residues_unit == 4 &&
           rep.residues_checked == 4 && rep.agrees && !sqrt_minus_3_exists(Prime(5));
      os << "(5,5) " << to_string(label) << " " << to_string(rep.observed) << ", "
         << rep.residues_unit << "/" << rep.residues_checked << " residues of norm 1; ";
    }
  } catch (const Error& e) {
    ok = false;
    os << "error: " << e.what();
  }
  return {ok, os.str()};
}

Outcome p3_attractors() {
  const auto m = CubicMap::from_rational(3, 1, Prime(3));
  const NormExponent close = NormExponent::Finite(25);
  const NormExponent one = NormExponent::Finite(0);
  const int max_iter = 500;
  int inner = 0, converged = 0, outer = 0, unit_ok = 0;
  for (auto label : {FixedPointLabel::X2, FixedPointLabel::X3}) {
    const auto xs = fixed_point(m, label).value;
    // B_1(x) is the union of the spheres |x - xs| = 3^-e, e >= 1.
    for (int e = 1; e <= 4; ++e) {
      const auto sample = sample_sphere(xs, NormExponent::Finite(e), 6, SampleMode::Random, 25,
                                        mix_seed(3, static_cast<std::uint64_t>(e)), m.precision());
      for (const auto& x : sample.points) {
        ++inner;
        PAdicNumber y = x;
        for (int k = 0; k < max_iter; ++k) {
          if (distance(y, xs).certainly_below(close)) {
            ++converged;
            break;
          }
          y = m(y);
        }
      }
    }
    const auto sphere =
        sample_sphere(xs, one, 6, SampleMode::Random, 100, 99, m.precision());
    for (const auto& x : sphere.points) {
      ++outer;
      if (distance(m(x), xs).certainly_equal(one)) ++unit_ok;
    }
  }
  std::ostringstream os;
  os << converged << "/" << inner << " points of B_1(x2), B_1(x3) within 3^-25; " << unit_ok
     << "/" << outer << " points of S_1 keep distance 1";
  return {inner == 200 && converged == inner && outer == 200 && unit_ok == outer, os.str()};
}

// Roots of 5x^3 + x^2 + 1, i.e. f(x) = -a for a = 1/5, by Newton steps from r0.
PAdicNumber preimage_of_minus_a(const CubicMap& m, std::int64_t r0) {
  auto c = [&](std::int64_t v) { return m.from_rational_point(v, 1); };
  PAdicNumber x = c(r0);
  for (int i = 0; i < 8; ++i) {
    const auto g = c(5) * x * x * x + x * x + c(1);
    if (g.is_zero()) break;
    const auto dg = c(15) * x * x + c(2) * x;
    const auto next = try_add(x, -(g / dg));
    if (!next) break;
    x = *next;
  }
  return x;
}

Outcome stopping_time_consistency() {
  const auto m = CubicMap::from_rational(1, 5, Prime(5));
  const BasinAnalyzer an(m);
  const auto minus_a = -m.a();
  const NormExponent r1 = an.ladder().r(1);
  const NormExponent r3 = an.ladder().r(3);
  const NormExponent abs_a = an.ladder().abs_a();
  const int budget = 200;

  std::vector<PAdicNumber> points;
  auto take = [&](const SphereSample& s) {
    points.insert(points.end(), s.points.begin(), s.points.end());
  };
  const auto zero = PAdicNumber::zero(m.prime());
  // Bulk of S_{r0}(0) and S_{|a|}(0).
  take(sample_sphere(zero, NormExponent::Finite(0), 8, SampleMode::Random, 300, 801, m.precision()));
  take(sample_sphere(zero, abs_a, 8, SampleMode::Random, 300, 802, m.precision()));
  // S_{|a|}(0) stratified by |x + a| <= r1, down into B_{r3}(-a).
  for (int e = 1; e <= 6; ++e) {
    take(sample_sphere(minus_a, NormExponent::Finite(e), 8, SampleMode::Random, 50,
                       mix_seed(803, static_cast<std::uint64_t>(e)), m.precision()));
  }
  // S_{r0}(0) near the preimages of -a.
  for (std::int64_t r0 : {2, 3}) {
    const auto rho = preimage_of_minus_a(m, r0);
    for (int e = 1; e <= 5; ++e) {
      take(sample_sphere(rho, NormExponent::Finite(e), 8, SampleMode::Random, 20,
                         mix_seed(804 + static_cast<std::uint64_t>(r0), static_cast<std::uint64_t>(e)),
                         m.precision()));
    }
  }

  int finite = 0, resim_fail = 0, decided = 0, agree = 0, implication_fail = 0, off_sphere = 0;
  for (const auto& x : points) {
    if (x.norm() != NormExponent::Finite(0) && x.norm() != abs_a) ++off_sphere;
    const auto st = an.stopping_time(x, minus_a, r3, budget);
    const auto fate = an.classify_point(x, budget);
    if (st.finite()) {
      ++finite;
      const int T = *st.stopping_time;
      const auto orbit = iterate(m, x, T);
      bool ok = static_cast<int>(orbit.states.size()) == T + 1 &&
                distance(orbit.states[static_cast<std::size_t>(T)], minus_a).certainly_below(r3);
      for (int k = 1; ok && k < T; ++k) {
        const Distance d = distance(orbit.states[static_cast<std::size_t>(k)], minus_a);
        ok = d.exact && !(d.norm < r3);
      }
      if (!ok) ++resim_fail;
      if (fate.verdict != Verdict::ToX1) ++implication_fail;
    }
    if (fate.verdict == Verdict::Undecided) continue;
    ++decided;
    // Independent simulation: the orbit must reach the absorbing region the
    // verdict names and behave there as that region dictates.
    const auto orbit = iterate(m, x, fate.steps_used + 3);
    bool ok = false;
    const auto& states = orbit.states;
    for (std::size_t k = 0; k + 1 < states.size() && !ok; ++k) {
      const NormExponent n = states[k].norm();
      const NormExponent next = states[k + 1].norm();
      switch (fate.verdict) {
        case Verdict::ToX1:
          ok = n < r1 && (n.is_zero() || next < n);
          break;
        case Verdict::ToInfinity:
          ok = n > abs_a && next == n * n * n;
          break;
        case Verdict::SphereInvariant:
          ok = n == r1 && next == r1;
          break;
        default:
          break;
      }
    }
    if (ok) ++agree;
  }
  std::ostringstream os;
  os << points.size() << " points, " << finite << " with finite T, " << resim_fail
     << " failed re-simulation, " << implication_fail << " finite T without TO_X1; "
     << agree << "/" << decided << " decided fates confirmed by simulation";
  return {points.size() >= 1000 && off_sphere == 0 && finite > 0 && resim_fail == 0 &&
              implication_fail == 0 && agree == decided,
          os.str()};
}

std::string run_cli(const std::string& args, int& rc) {
  const std::string cmd = std::string(PADYN_CLI) + " " + args;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) {
    rc = -1;
    return {};
  }
  std::string out;
  std::array<char, 4096> buf{};
  while (std::size_t n = std::fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
  const int status = pclose(pipe);
  rc = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return out;
}

Outcome determinism() {
  int rc1 = 0, rc2 = 0;
  const auto a = run_cli("verify --p 5 --a 1/5 --seed 42", rc1);
  const auto b = run_cli("verify --p 5 --a 1/5 --seed 42", rc2);
  std::ostringstream os;
  os << "two runs, " << a.size() << " and " << b.size() << " bytes, exit " << rc1 << "/" << rc2
     << (a == b ? ", identical" : ", different");
  return {rc1 == 0 && rc2 == 0 && !a.empty() && a == b, os.str()};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"arithmetic laws", arithmetic_laws},
      {"square-root oracle", sqrt_oracle},
      {"fixed-point residuals", fixed_point_residuals},
      {"|a| > 1 basin structure", a_big_structure},
      {"Siegel disc around x3", siegel_a_big},
      {"|a| < 1 disc boundary", a_small_dichotomy},
      {"p = 3 attractors", p3_attractors},
      {"stopping-time consistency", stopping_time_consistency},
      {"determinism", determinism},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("error: ") + e.what()};
    }
    if (!o.pass) ++failed;
    std::cout << (o.pass ? "PASS" : "FAIL") << " " << (i + 1) << " " << criteria[i].first
              << ": " << o.detail << std::endl;
  }
  return failed == 0 ? 0 : 1;
}
