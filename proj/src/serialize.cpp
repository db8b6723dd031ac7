#include "padyn/serialize.hpp"

#include <sstream>

#include <json.hpp>

namespace padyn {

namespace {

using json = nlohmann::ordered_json;

json norm_json(NormExponent n) { return n.is_zero() ? json(nullptr) : json(n.exponent()); }

json point_json(const PAdicNumber& x) {
  json j;
  if (x.is_zero()) {
    j["valuation"] = nullptr;
    j["digits"] = "0";
  } else {
    j["valuation"] = x.valuation();
    j["digits"] = x.digit_string();
  }
  j["precision"] = x.precision();
  return j;
}

json map_json(const CubicMap& map) {
  json j;
  j["p"] = map.prime().value();
  if (const auto& r = map.rational_parameter()) {
    j["a"] = {{"numerator", r->numerator}, {"denominator", r->denominator}};
  } else {
    j["a"] = point_json(map.a());
  }
  j["a_valuation"] = map.a_valuation();
  j["regime"] = to_string(map.regime());
  j["precision"] = map.precision();
  return j;
}

json header(const char* type, const CubicMap& map) {
  json j;
  j["schema_version"] = 1;
  j["report"] = type;
  j["map"] = map_json(map);
  return j;
}

json fixed_point_json(const FixedPoint& fp) {
  json j;
  j["label"] = to_string(fp.label);
  j["value"] = point_json(fp.value);
  j["lambda_norm_exponent"] = norm_json(fp.lambda_norm);
  j["kind"] = to_string(fp.kind);
  return j;
}

json fate_json(const PointFate& fate) {
  json j;
  j["verdict"] = to_string(fate.verdict);
  j["steps_used"] = fate.steps_used;
  if (fate.verdict == Verdict::SphereInvariant && fate.sphere_center) {
    j["sphere_center"] = point_json(*fate.sphere_center);
    j["sphere_radius_exponent"] = norm_json(fate.sphere_radius);
  }
  if (fate.verdict == Verdict::EnteredTarget) j["stopping_time"] = fate.stopping_time;
  if (fate.verdict == Verdict::ConvergesTo) j["limit"] = to_string(fate.limit);
  if (fate.precision_exhausted) j["precision_exhausted"] = true;
  return j;
}

json spec_json(const SampleSpec& s) {
  return {{"depth", s.depth},
          {"mode", to_string(s.mode)},
          {"seed", s.seed},
          {"budget", s.budget},
          {"random_points", s.random_points}};
}

json region_json(const RegionTally& t) {
  json j;
  j["name"] = t.name;
  j["description"] = t.description;
  j["center"] = t.around_minus_a ? "-a" : "0";
  j["sphere_exponents"] = t.sphere_exponents;
  j["includes_center"] = t.includes_center;
  j["predicted"] = t.predicted ? json(to_string(*t.predicted)) : json(nullptr);
  j["max_steps"] = t.max_steps ? json(*t.max_steps) : json(nullptr);
  j["law"] = t.law;
  j["samples"] = t.samples;
  j["discarded"] = t.discarded;
  j["matches"] = t.matches;
  j["mismatches"] = t.mismatches;
  j["undecided"] = t.undecided;
  j["law_violations"] = t.law_violations;
  j["law_undetermined"] = t.law_undetermined;
  json counts = json::object();
  for (std::size_t v = 0; v < t.verdict_counts.size(); ++v) {
    if (t.verdict_counts[v]) counts[to_string(static_cast<Verdict>(v))] = t.verdict_counts[v];
  }
  j["verdicts"] = counts;
  if (t.witness) {
    j["witness"] = {{"point", point_json(t.witness->point)},
                    {"verdict", to_string(t.witness->verdict)},
                    {"steps", t.witness->steps},
                    {"reason", t.witness->reason}};
  } else {
    j["witness"] = nullptr;
  }
  return j;
}

json d_json(const DMembership& d) {
  return {{"sampled", d.sampled},
          {"finite_stopping_time", d.finite},
          {"to_x1", d.to_x1},
          {"to_infinity", d.to_infinity},
          {"sphere_invariant", d.sphere_invariant},
          {"undecided", d.undecided},
          {"consistent", d.consistent},
          {"inconsistent", d.inconsistent},
          {"resimulation_failures", d.resimulation_failures},
          {"witness", d.witness ? point_json(*d.witness) : json(nullptr)}};
}

json basin_body(const AnalysisReport& r) {
  json j;
  j["max_iter"] = r.max_iter;
  j["sampling"] = spec_json(r.spec);
  j["regions"] = json::array();
  for (const auto& t : r.regions) j["regions"].push_back(region_json(t));
  j["d_membership"] = d_json(r.d_membership);
  j["total_mismatches"] = r.total_mismatches();
  j["total_law_violations"] = r.total_law_violations();
  return j;
}

json tags_json(bool non_theorem_regime) {
  json tags = json::array();
  if (non_theorem_regime) tags.push_back("NON_THEOREM_REGIME");
  return tags;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string csv_point(const PAdicNumber& x) {
  return x.is_zero() ? "0," : x.digit_string() + "," + std::to_string(x.valuation());
}

std::string csv_norm(NormExponent n) { return n.is_zero() ? "" : std::to_string(n.exponent()); }

}  // namespace

std::string fixed_points_json(const CubicMap& map, const std::vector<FixedPoint>& fps) {
  json j = header("fixed_points", map);
  j["fixed_points"] = json::array();
  for (const auto& fp : fps) j["fixed_points"].push_back(fixed_point_json(fp));
  return dump(j);
}

std::string fixed_points_csv(const std::vector<FixedPoint>& fps) {
  std::ostringstream os;
  os << "label,digits,valuation,lambda_norm_exponent,kind\n";
  for (const auto& fp : fps) {
    os << to_string(fp.label) << ',' << csv_point(fp.value) << ',' << csv_norm(fp.lambda_norm)
       << ',' << to_string(fp.kind) << '\n';
  }
  return os.str();
}

std::string orbit_json(const CubicMap& map, const OrbitRecord& orbit, const PointFate& fate) {
  json j = header("orbit", map);
  j["start"] = point_json(orbit.start);
  j["norm_trace"] = json::array();
  for (auto n : orbit.norm_trace) j["norm_trace"].push_back(norm_json(n));
  j["precision_exhausted"] = orbit.precision_exhausted;
  j["fate"] = fate_json(fate);
  return dump(j);
}

std::string orbit_csv(const OrbitRecord& orbit) {
  std::ostringstream os;
  os << "step,digits,valuation,norm_exponent\n";
  for (std::size_t i = 0; i < orbit.states.size(); ++i) {
    os << i << ',' << csv_point(orbit.states[i]) << ',' << csv_norm(orbit.norm_trace[i]) << '\n';
  }
  return os.str();
}

std::string basin_json(const CubicMap& map, const AnalysisReport& report) {
  json j = header("basin", map);
  j["tags"] = tags_json(report.non_theorem_regime);
  j.update(basin_body(report));
  return dump(j);
}

std::string basin_csv(const AnalysisReport& report) {
  std::ostringstream os;
  os << "region,digits,valuation,precision,verdict,steps,stopping_time,matches,law\n";
  auto row = [&](const std::string& region, const PointRecord& r) {
    os << csv_field(region) << ',' << csv_point(r.point) << ',' << r.point.precision() << ','
       << to_string(r.fate.verdict) << ',' << r.fate.steps_used << ','
       << (r.stopping_time ? std::to_string(*r.stopping_time) : "") << ','
       << (r.matches ? "true" : "false") << ',' << to_string(r.law) << '\n';
  };
  for (const auto& r : report.records) row(report.regions[r.region].name, r);
  for (const auto& r : report.d_records) row("D", r);
  return os.str();
}

std::string verify_json(const CubicMap& map, const TheoremReport& report) {
  json j = header("verify", map);
  j["tags"] = tags_json(report.non_theorem_regime);
  j["fixed_points"] = json::array();
  for (const auto& fp : report.fixed_points) j["fixed_points"].push_back(fixed_point_json(fp));
  j["items"] = json::array();
  for (const auto& item : report.items) {
    json it;
    it["id"] = item.id;
    it["claim"] = item.claim;
    it["status"] = to_string(item.status);
    it["detail"] = item.detail;
    it["witness"] = item.witness ? point_json(*item.witness) : json(nullptr);
    j["items"].push_back(it);
  }
  j["siegel_boundaries"] = json::array();
  for (const auto& b : report.boundaries) {
    json jb;
    jb["label"] = to_string(b.label);
    jb["sqrt_minus_3_exists"] = b.sqrt_minus_3;
    jb["predicted"] = to_string(b.predicted);
    jb["observed"] = to_string(b.observed);
    jb["residues_checked"] = b.residues_checked;
    jb["residues_unit"] = b.residues_unit;
    jb["witness_residue"] = b.witness_residue ? json(*b.witness_residue) : json(nullptr);
    jb["witness_gamma"] = b.witness_gamma ? point_json(*b.witness_gamma) : json(nullptr);
    jb["witness_leaves_sphere"] = b.witness_leaves_sphere;
    jb["sphere_points"] = b.sphere_points;
    jb["sphere_violations"] = b.sphere_violations;
    jb["shares_disc_with_other"] = b.shares_disc_with_other;
    jb["agrees"] = b.agrees;
    jb["asserted"] = b.asserted;
    j["siegel_boundaries"].push_back(jb);
  }
  j["basin"] = report.basin ? basin_body(*report.basin) : json(nullptr);
  j["summary"] = {{"pass", report.count(ItemStatus::Pass)},
                  {"fail", report.count(ItemStatus::Fail)},
                  {"undecided", report.count(ItemStatus::Undecided)}};
  return dump(j);
}

std::string verify_csv(const TheoremReport& report) {
  std::ostringstream os;
  os << "id,status,claim,detail,witness_digits,witness_valuation\n";
  for (const auto& item : report.items) {
    os << csv_field(item.id) << ',' << to_string(item.status) << ',' << csv_field(item.claim)
       << ',' << csv_field(item.detail) << ','
       << (item.witness ? csv_point(*item.witness) : ",") << '\n';
  }
  return os.str();
}

}  // namespace padyn
