#pragma once

// Regime-specific checklists over a map: each claim becomes a PASS, FAIL or
// UNDECIDED item with an optional witness point.

#include <optional>
#include <string>
#include <vector>

#include "padyn/basin_report.hpp"
#include "padyn/siegel.hpp"

namespace padyn {

enum class ItemStatus { Pass, Fail, Undecided };

const char* to_string(ItemStatus s) noexcept;

struct TheoremItem {
  std::string id;
  std::string claim;
  ItemStatus status = ItemStatus::Undecided;
  std::string detail;
  std::optional<PAdicNumber> witness{};
};

struct VerifyOptions {
  SampleSpec sampling;
  int max_iter = 500;
  int siegel_points = 100;
  int siegel_iter = 200;
  int attractor_points = 100;
};

struct TheoremReport {
  Regime regime = Regime::ABig;
  std::int64_t a_valuation = 0;
  bool non_theorem_regime = false;
  std::vector<FixedPoint> fixed_points;
  std::vector<TheoremItem> items;
  std::optional<AnalysisReport> basin{};
  std::vector<SiegelCheckReport> siegel_checks;
  std::vector<SiegelBoundaryReport> boundaries;

  int count(ItemStatus s) const noexcept;
};

// Never throws for a failed claim; those become FAIL items.
TheoremReport verify_theorem(const CubicMap& map, const VerifyOptions& options = {});

}  // namespace padyn
