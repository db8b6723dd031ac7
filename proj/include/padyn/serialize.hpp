#pragma once

// JSON and CSV renderings of analysis results. JSON carries a top-level
// "schema_version": 1 and a "report" type; points are written as
// {"valuation", "digits"} with digits little-endian and dot-separated, and
// norms as exponents e meaning p^-e (null for zero).

#include <string>
#include <vector>

#include "padyn/verify.hpp"

namespace padyn {

std::string fixed_points_json(const CubicMap& map, const std::vector<FixedPoint>& fps);
std::string fixed_points_csv(const std::vector<FixedPoint>& fps);

std::string orbit_json(const CubicMap& map, const OrbitRecord& orbit, const PointFate& fate);
std::string orbit_csv(const OrbitRecord& orbit);

std::string basin_json(const CubicMap& map, const AnalysisReport& report);
// One row per sampled point.
std::string basin_csv(const AnalysisReport& report);

std::string verify_json(const CubicMap& map, const TheoremReport& report);
// One row per checklist item.
std::string verify_csv(const TheoremReport& report);

}  // namespace padyn
