#include "padyn/verify.hpp"

#include <functional>
#include <sstream>

#include "padyn/hensel.hpp"

namespace padyn {

const char* to_string(ItemStatus s) noexcept {
  switch (s) {
    case ItemStatus::Pass: return "PASS";
    case ItemStatus::Fail: return "FAIL";
    case ItemStatus::Undecided: return "UNDECIDED";
  }
  return "?";
}

int TheoremReport::count(ItemStatus s) const noexcept {
  int n = 0;
  for (const auto& item : items) n += item.status == s;
  return n;
}

namespace {

const NormExponent kOne = NormExponent::Finite(0);

std::string norm_string(NormExponent n) { return n.to_string(); }

class Checklist {
 public:
  explicit Checklist(TheoremReport& report) : report_(report) {}

  TheoremItem& add(std::string id, std::string claim, ItemStatus status, std::string detail,
                   std::optional<PAdicNumber> witness = std::nullopt) {
    report_.items.push_back(
        {std::move(id), std::move(claim), status, std::move(detail), std::move(witness)});
    return report_.items.back();
  }

  // Runs body; errors become UNDECIDED (precision, budget) or FAIL (anything else).
  void run(const std::string& id, const std::string& claim,
           const std::function<void(TheoremItem&)>& body) {
    TheoremItem item{id, claim, ItemStatus::Undecided, {}};
    try {
      body(item);
    } catch (const Error& e) {
      const bool soft =
          e.code() == ErrorCode::PrecisionExhausted || e.code() == ErrorCode::BudgetExceeded;
      item.status = soft ? ItemStatus::Undecided : ItemStatus::Fail;
      item.detail = std::string(to_string(e.code())) + ": " + e.what();
    }
    report_.items.push_back(std::move(item));
  }

 private:
  TheoremReport& report_;
};

ItemStatus pass_if(bool ok) { return ok ? ItemStatus::Pass : ItemStatus::Fail; }

const FixedPoint* find(const std::vector<FixedPoint>& fps, FixedPointLabel label) {
  for (const auto& fp : fps) {
    if (fp.label == label) return &fp;
  }
  return nullptr;
}

// |f(x) - x| and the Vieta relations x2 + x3 = -a, x2 x3 = -1, to p^-(N-2).
void check_residuals(Checklist& list, const CubicMap& map, const std::vector<FixedPoint>& fps) {
  const NormExponent tol = NormExponent::Finite(map.precision() - 2);
  list.run("fixed_points.residuals", "|f(x) - x| <= p^-(N-2) for every fixed point",
           [&](TheoremItem& item) {
             std::ostringstream detail;
             item.status = ItemStatus::Pass;
             for (const auto& fp : fps) {
               const Distance d = distance(map(fp.value), fp.value);
               detail << to_string(fp.label) << ": " << norm_string(d.norm)
                      << (d.exact ? "" : " (bound)") << "; ";
               if (!(d.norm <= tol) && item.status == ItemStatus::Pass) {
                 item.status = ItemStatus::Fail;
                 item.witness = fp.value;
               }
             }
             item.detail = detail.str();
           });
  const FixedPoint* x2 = find(fps, FixedPointLabel::X2);
  const FixedPoint* x3 = find(fps, FixedPointLabel::X3);
  if (!x2 || !x3) return;
  list.run("fixed_points.vieta", "x2 + x3 = -a and x2 x3 = -1 to p^-(N-2)",
           [&](TheoremItem& item) {
             const Prime p = map.prime();
             const Distance sum = distance(x2->value + x3->value, -map.a());
             const Distance prod = distance(x2->value * x3->value,
                                            PAdicNumber::from_integer(-1, p, map.a().precision()));
             item.status = pass_if(sum.norm <= tol && prod.norm <= tol);
             item.detail = "|x2 + x3 + a| <= " + norm_string(sum.norm) + ", |x2 x3 + 1| <= " +
                           norm_string(prod.norm);
           });
}

std::string kinds_string(const std::vector<FixedPoint>& fps) {
  std::string out;
  for (const auto& fp : fps) {
    if (!out.empty()) out += ", ";
    out += std::string(to_string(fp.label)) + " " + to_string(fp.kind) + " |lambda| = " +
           norm_string(fp.lambda_norm);
  }
  return out;
}

SiegelCheckOptions siegel_options(const VerifyOptions& o, std::uint64_t stream) {
  SiegelCheckOptions s;
  s.points = o.siegel_points;
  s.n_iter = o.siegel_iter;
  s.depth = o.sampling.depth;
  s.mode = SampleMode::Random;
  s.seed = mix_seed(o.sampling.seed, stream);
  return s;
}

void add_siegel_item(Checklist& list, TheoremReport& report, const CubicMap& map,
                     const FixedPoint& fp, NormExponent radius, const VerifyOptions& o,
                     std::uint64_t stream) {
  const std::string label = to_string(fp.label);
  list.run("siegel." + label, "spheres S_rho(" + label + "), rho < " + norm_string(radius) +
                                  ", are invariant",
           [&](TheoremItem& item) {
             const SiegelCheckReport rep = siegel_check(map, fp, radius, siegel_options(o, stream));
             std::ostringstream detail;
             detail << rep.points_checked << " points on " << rep.radii.size() << " spheres, "
                    << rep.n_iter << " iterations, " << rep.violations << " violations, "
                    << rep.undetermined << " undetermined";
             item.detail = detail.str();
             if (rep.witness) item.witness = rep.witness->start;
             if (rep.violations > 0) {
               item.status = ItemStatus::Fail;
             } else if (rep.vacuous || rep.undetermined > 0) {
               item.status = ItemStatus::Undecided;
             } else {
               item.status = ItemStatus::Pass;
             }
             report.siegel_checks.push_back(rep);
           });
}

std::vector<PAdicNumber> sample_spheres(const PAdicNumber& center,
                                        const std::vector<std::int64_t>& exps,
                                        const SampleSpec& spec, std::uint64_t stream, int prec) {
  std::vector<PAdicNumber> out;
  for (std::size_t i = 0; i < exps.size(); ++i) {
    for (auto& x : sample_region_sphere(center, exps[i], spec, stream + i, prec).points) {
      out.push_back(std::move(x));
    }
  }
  return out;
}

// Random draws spread over the spheres, for the fixed-count checks.
std::vector<PAdicNumber> draw_points(const PAdicNumber& center,
                                     const std::vector<std::int64_t>& exps, int total,
                                     const SampleSpec& spec, std::uint64_t stream, int prec) {
  std::vector<PAdicNumber> out;
  const int n = static_cast<int>(exps.size());
  for (int i = 0; i < n; ++i) {
    const int count = total / n + (i < total % n ? 1 : 0);
    auto pts = sample_sphere(center, NormExponent::Finite(exps[static_cast<std::size_t>(i)]),
                             spec.depth, SampleMode::Random, count,
                             mix_seed(spec.seed, stream + static_cast<std::uint64_t>(i)), prec)
                   .points;
    for (auto& x : pts) out.push_back(std::move(x));
  }
  return out;
}

void verify_big(Checklist& list, TheoremReport& report, const CubicMap& map,
                const VerifyOptions& o) {
  const BasinAnalyzer analyzer(map);
  const auto& fps = analyzer.fixed_points();
  const RadiusLadder& ladder = analyzer.ladder();
  const std::int64_t k = -map.a_valuation();
  const NormExponent r1 = ladder.r(1);
  const int prec = map.precision();
  const FixedPoint* x2 = find(fps, FixedPointLabel::X2);
  const FixedPoint* x3 = find(fps, FixedPointLabel::X3);

  list.add("fixed_points.count", "three fixed points exist", pass_if(x2 && x3),
           std::to_string(fps.size()) + " fixed points");
  if (!x2 || !x3) return;

  list.add("fixed_points.norms", "|x2| = |a| and |x3| = r1",
           pass_if(x2->value.norm() == ladder.abs_a() && x3->value.norm() == r1),
           "|x2| = " + norm_string(x2->value.norm()) + ", |x3| = " + norm_string(x3->value.norm()) +
               ", |a| = " + norm_string(ladder.abs_a()) + ", r1 = " + norm_string(r1));
  check_residuals(list, map, fps);
  list.add("fixed_points.classification", "x1 attractive, x2 repelling, x3 indifferent",
           pass_if(fps[0].kind == Stability::Attractive && x2->kind == Stability::Repelling &&
                   x3->kind == Stability::Indifferent),
           kinds_string(fps));

  const AnalysisReport basin = basin_report(analyzer, o.sampling, o.max_iter);
  const bool relaxed = basin.non_theorem_regime;
  for (const auto& t : basin.regions) {
    if (t.empty()) continue;
    std::ostringstream detail;
    detail << t.description << ": " << t.samples << " samples, " << t.matches << " match, "
           << t.mismatches << " mismatch, " << t.undecided << " undecided, " << t.law_violations
           << " law violations, " << t.law_undetermined << " law undetermined";
    if (t.discarded) detail << ", " << t.discarded << " outside |x| = |a|";
    ItemStatus status = ItemStatus::Pass;
    if (t.mismatches > 0 || t.law_violations > 0) {
      status = relaxed ? ItemStatus::Undecided : ItemStatus::Fail;
    } else if ((t.predicted && t.undecided > 0) || t.law_undetermined > 0) {
      status = ItemStatus::Undecided;
    }
    std::string claim = t.description + " -> ";
    claim += t.predicted ? to_string(*t.predicted) : "no fixed verdict";
    if (t.max_steps) claim += " within " + std::to_string(*t.max_steps) + " steps";
    if (!t.law.empty()) claim += "; " + t.law;
    list.add("basin." + t.name, claim, status, detail.str(),
             t.witness ? std::optional<PAdicNumber>(t.witness->point) : std::nullopt);
  }
  {
    const DMembership& d = basin.d_membership;
    std::ostringstream detail;
    detail << d.sampled << " samples, " << d.finite << " finite stopping times, " << d.to_x1
           << " TO_X1, " << d.to_infinity << " TO_INFINITY, " << d.sphere_invariant
           << " SPHERE_INVARIANT, " << d.undecided << " undecided, " << d.inconsistent
           << " inconsistent, " << d.resimulation_failures << " re-simulation failures";
    ItemStatus status = ItemStatus::Pass;
    if (d.inconsistent > 0 || d.resimulation_failures > 0) {
      status = relaxed ? ItemStatus::Undecided : ItemStatus::Fail;
    } else if (d.undecided > 0) {
      status = ItemStatus::Undecided;
    }
    list.add("basin.decomposition",
             "on S_r0(0) and S_|a|(0), TO_X1 exactly when the orbit enters B_r3(-a)", status,
             detail.str(), d.witness);
  }
  report.basin = basin;

  if (x3->kind != Stability::Indifferent) {
    // |f'(x3)| = |3 - a x3| = |2| here, which is below 1 only for p = 2.
    list.add("siegel.X3", "spheres S_rho(X3), rho < r1, are invariant", ItemStatus::Fail,
             std::string("x3 is ") + to_string(x3->kind) + " with |lambda| = " +
                 norm_string(x3->lambda_norm) + ", so it has no Siegel disc",
             x3->value);
  } else {
    add_siegel_item(list, report, map, *x3, r1, o, 0x5100);
  }

  list.run("siegel.X3_in_sphere", "B_r1(x3) lies in the invariant sphere S_r1(0)",
           [&](TheoremItem& item) {
             const auto pts = draw_points(x3->value, {k + 1, k + 2, k + 3}, o.siegel_points,
                                          o.sampling, 0x5200, prec);
             int bad = 0;
             for (const auto& x : pts) {
               PAdicNumber y = x;
               bool ok = y.norm() == r1;
               for (int i = 0; ok && i < o.siegel_iter; ++i) {
                 y = map(y);
                 ok = y.norm() == r1;
               }
               if (!ok && !bad++) item.witness = x;
             }
             item.status = pass_if(bad == 0);
             item.detail = std::to_string(pts.size()) + " points, " + std::to_string(bad) +
                           " leave S_r1(0)";
           });

  if (x3->kind != Stability::Indifferent) return;
  list.run("siegel.X3_maximal", "S_r1(x3) is not invariant, so the disc is B_r1(x3)",
           [&](TheoremItem& item) {
             const auto pts = sample_spheres(x3->value, {k}, o.sampling, 0x5300, prec);
             for (const auto& x : pts) {
               PAdicNumber y = x;
               for (int i = 1; i <= o.siegel_iter; ++i) {
                 y = map(y);
                 const Distance d = distance(y, x3->value);
                 if (d.certainly_equal(r1)) {
                   if (y.norm() < r1) break;  // absorbed by x1; the distance stays r1
                   continue;
                 }
                 if (d.exact || d.norm < r1) {
                   item.status = ItemStatus::Pass;
                   item.witness = x;
                   item.detail = "|f^" + std::to_string(i) + "(x) - x3| = " +
                                 norm_string(d.norm) + (d.exact ? "" : " (bound)");
                   return;
                 }
                 break;
               }
             }
             item.status = ItemStatus::Undecided;
             item.detail = "no sampled point of S_r1(x3) left the sphere (" +
                           std::to_string(pts.size()) + " points)";
           });
}

void verify_small(Checklist& list, TheoremReport& report, const CubicMap& map,
                  const VerifyOptions& o) {
  const BasinAnalyzer analyzer(map);
  const auto& fps = analyzer.fixed_points();
  const Prime p = map.prime();
  const std::uint32_t pv = p.value();
  const int prec = map.precision();
  const PAdicNumber zero = PAdicNumber::zero(p);
  const FixedPoint* x2 = find(fps, FixedPointLabel::X2);
  const FixedPoint* x3 = find(fps, FixedPointLabel::X3);
  const bool nontrivial = x2 && x3;

  list.add("fixed_points.count", "x2, x3 exist exactly when sqrt(a^2 + 4) exists",
           pass_if(nontrivial == sqrt_a2_plus_4_exists(map.a())),
           std::to_string(fps.size()) + " fixed points");
  check_residuals(list, map, fps);

  list.run("x1.basin_inner", "B_1(0) -> TO_X1", [&](TheoremItem& item) {
    auto pts = sample_spheres(zero, {1, 2, 3}, o.sampling, 0x6100, prec);
    pts.insert(pts.begin(), zero);
    int bad = 0;
    for (const auto& x : pts) {
      if (analyzer.classify_point(x, o.max_iter).verdict != Verdict::ToX1 && !bad++) {
        item.witness = x;
      }
    }
    item.status = pass_if(bad == 0);
    item.detail = std::to_string(pts.size()) + " points, " + std::to_string(bad) + " mismatches";
  });

  list.run("x1.basin_outer", "|x| > 1 -> TO_INFINITY with |f(x)| = |x|^3",
           [&](TheoremItem& item) {
             const auto pts = sample_spheres(zero, {-1, -2, -3}, o.sampling, 0x6200, prec);
             int bad = 0;
             for (const auto& x : pts) {
               const bool ok =
                   analyzer.classify_point(x, o.max_iter).verdict == Verdict::ToInfinity &&
                   map(x).valuation() == 3 * x.valuation();
               if (!ok && !bad++) item.witness = x;
             }
             item.status = pass_if(bad == 0);
             item.detail =
                 std::to_string(pts.size()) + " points, " + std::to_string(bad) + " mismatches";
           });

  list.run("x1.boundary", "points of S_1(0) keep |f^n(x)| = 1", [&](TheoremItem& item) {
    const auto pts = sample_spheres(zero, {0}, o.sampling, 0x6300, prec);
    int bad = 0;
    for (const auto& x : pts) {
      PAdicNumber y = x;
      bool ok = true;
      for (int i = 0; ok && i < o.siegel_iter; ++i) {
        y = map(y);
        ok = y.norm() == kOne;
      }
      if (!ok && !bad++) item.witness = x;
    }
    item.status = pass_if(bad == 0);
    item.detail = std::to_string(pts.size()) + " points, " + std::to_string(o.siegel_iter) +
                  " iterations, " + std::to_string(bad) + " leave S_1(0)";
  });

  if (!nontrivial) {
    list.add("fixed_points.classification", "x1 attractive",
             pass_if(fps[0].kind == Stability::Attractive), kinds_string(fps));
    return;
  }

  list.add("fixed_points.unit_norm", "|x2| = |x3| = 1",
           pass_if(x2->value.norm() == kOne && x3->value.norm() == kOne),
           "|x2| = " + norm_string(x2->value.norm()) + ", |x3| = " + norm_string(x3->value.norm()));
  const Stability expected = pv == 3 ? Stability::Attractive : Stability::Indifferent;
  list.add("fixed_points.classification",
           std::string("x1 attractive, x2 and x3 ") + to_string(expected),
           pass_if(fps[0].kind == Stability::Attractive && x2->kind == expected &&
                   x3->kind == expected),
           kinds_string(fps));

  if (pv != 3) {
    std::optional<DiscBoundary> shape;
    for (const FixedPoint* fp : {x2, x3}) {
      const std::string label = to_string(fp->label);
      list.run("siegel.boundary." + label,
               "SI(" + label + ") is open exactly when sqrt(-3) exists", [&](TheoremItem& item) {
                 SiegelBoundaryOptions bo;
                 bo.sphere_points = o.siegel_points;
                 bo.n_iter = o.siegel_iter;
                 bo.depth = o.sampling.depth;
                 bo.seed = mix_seed(o.sampling.seed, 0x6400 + static_cast<unsigned>(fp->label));
                 const SiegelBoundaryReport rep = siegel_boundary(map, *fp, bo);
                 std::ostringstream detail;
                 detail << to_string(rep.observed) << " (predicted " << to_string(rep.predicted)
                        << "); " << rep.residues_unit << "/" << rep.residues_checked
                        << " unit residues";
                 if (rep.witness_residue) detail << ", residue witness " << *rep.witness_residue;
                 if (rep.witness_gamma) {
                   detail << ", root witness leaves S_1: "
                          << (rep.witness_leaves_sphere ? "yes" : "no");
                   item.witness = rep.witness_gamma;
                 }
                 if (rep.sphere_points) {
                   detail << ", " << rep.sphere_points << " sphere orbits, "
                          << rep.sphere_violations << " violations";
                 }
                 if (!rep.asserted) detail << "; reported, not asserted";
                 item.detail = detail.str();
                 item.status = rep.agrees ? ItemStatus::Pass
                                          : (rep.asserted ? ItemStatus::Fail : ItemStatus::Undecided);
                 shape = rep.observed;
                 report.boundaries.push_back(rep);
               });
      add_siegel_item(list, report, map, *fp, kOne, o, 0x6500 + static_cast<unsigned>(fp->label));
    }

    const Distance d = distance(x2->value, x3->value);
    if (pv >= 5) {
      list.add("siegel.center_distance", "|x2 - x3| = |2| = 1", pass_if(d.certainly_equal(kOne)),
               "|x2 - x3| = " + norm_string(d.norm));
      if (shape) {
        const bool disjoint =
            *shape == DiscBoundary::OpenBall ? !d.certainly_below(kOne) : kOne < d.norm;
        list.add("siegel.disjoint", "SI(x2) and SI(x3) are disjoint", pass_if(disjoint),
                 std::string("discs are ") + to_string(*shape) + " of radius 1, |x2 - x3| = " +
                     norm_string(d.norm),
                 disjoint ? std::nullopt : std::optional<PAdicNumber>(x3->value));
      }
    } else {
      const NormExponent two = PAdicNumber::from_integer(2, p, prec).norm();
      const bool shared = d.certainly_equal(two) && two < kOne;
      list.add("siegel.shared_disc", "SI(x2) = SI(x3): |x2 - x3| = |2| < 1", pass_if(shared),
               "|x2 - x3| = " + norm_string(d.norm));
    }
    return;
  }

  // p = 3: x2 and x3 attract B_1 around themselves.
  const std::int64_t target = std::min<std::int64_t>(25, prec - 2);
  for (const FixedPoint* fp : {x2, x3}) {
    const std::string label = to_string(fp->label);
    const FixedPoint* other = fp == x2 ? x3 : x2;
    const std::uint64_t stream = 0x7000 + 0x100 * static_cast<unsigned>(fp->label);
    list.run("attractor." + label,
             "sampled points of B_1(" + label + ") converge below p^-" + std::to_string(target),
             [&](TheoremItem& item) {
               const auto pts =
                   draw_points(fp->value, {1, 2, 3}, o.attractor_points, o.sampling, stream, prec);
               int bad = 0, labelled = 0;
               for (const auto& x : pts) {
                 const PointFate fate = analyzer.classify_point(x, o.max_iter);
                 labelled += fate.verdict == Verdict::ConvergesTo && fate.limit == fp->label;
                 PAdicNumber y = x;
                 bool reached = false;
                 for (int i = 0; i < o.max_iter && !reached; ++i) {
                   y = map(y);
                   reached = distance(y, fp->value).norm <= NormExponent::Finite(target);
                 }
                 if (!reached && !bad++) item.witness = x;
               }
               const bool all_labelled = labelled == static_cast<int>(pts.size());
               item.status = pass_if(bad == 0 && all_labelled);
               item.detail = std::to_string(pts.size()) + " points, " + std::to_string(bad) +
                             " did not converge, " + std::to_string(labelled) + " labelled " +
                             "CONVERGES_TO " + label;
             });
    list.run("attractor." + label + ".cubing",
             "|x - " + label + "| = r >= 1 gives |f(x) - " + label + "| = r^3 for r = 1, p, p^2",
             [&](TheoremItem& item) {
               const auto pts = sample_spheres(fp->value, {0, -1, -2}, o.sampling, stream + 0x10, prec);
               int bad = 0;
               for (const auto& x : pts) {
                 const Distance before = distance(x, fp->value);
                 const Distance after = distance(map(x), fp->value);
                 const bool ok = before.exact && after.exact &&
                                 after.norm == NormExponent::Finite(3 * before.norm.exponent());
                 if (!ok && !bad++) item.witness = x;
               }
               item.status = pass_if(bad == 0);
               item.detail = std::to_string(pts.size()) + " points, " + std::to_string(bad) +
                             " violations";
             });
    list.add("attractor." + label + ".other",
             "the other nontrivial fixed point lies on S_1(" + label + ")",
             pass_if(distance(other->value, fp->value).certainly_equal(kOne)),
             "|x2 - x3| = " + norm_string(distance(other->value, fp->value).norm));
  }
}

}  // namespace

TheoremReport verify_theorem(const CubicMap& map, const VerifyOptions& options) {
  TheoremReport report;
  report.regime = map.regime();
  report.a_valuation = map.a_valuation();
  report.non_theorem_regime = map.a_valuation() % 2 == 0;
  report.fixed_points = fixed_points(map);
  Checklist list(report);
  if (map.regime() == Regime::ABig) {
    verify_big(list, report, map, options);
  } else {
    verify_small(list, report, map, options);
  }
  return report;
}

}  // namespace padyn
