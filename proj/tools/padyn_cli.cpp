// padyn-cli: fixed points, orbits, basin reports and theorem checks for
// f(x) = x^3 + a x^2 over Q_p.
//
// Exit codes: 0 ok, 1 a verify item failed (or was undecided with --strict),
// 2 invalid configuration, 3 precision exhausted.

#include <charconv>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "padyn/padyn.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitConfig = 2;
constexpr int kExitPrecision = 3;

struct RunConfig {
  std::uint32_t p = 0;
  std::string a;
  int precision = 32;
  int max_iter = 500;
  int depth = 3;
  std::string mode = "exhaustive";
  std::uint64_t seed = 0;
  std::int64_t budget = 100000;
  std::string format = "json";
  std::string out;
  bool strict = false;
  std::string x;
};

struct RationalArg {
  std::int64_t numerator = 0;
  std::int64_t denominator = 1;
};

bool parse_int(std::string_view s, std::int64_t& value) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  const auto res = std::from_chars(s.data(), s.data() + s.size(), value);
  return res.ec == std::errc() && res.ptr == s.data() + s.size() && !s.empty();
}

// Accepts "n" or "n/d" with integer n, d.
bool parse_rational(const std::string& text, RationalArg& out) {
  const auto slash = text.find('/');
  if (slash == std::string::npos) {
    out.denominator = 1;
    return parse_int(text, out.numerator);
  }
  return parse_int(std::string_view(text).substr(0, slash), out.numerator) &&
         parse_int(std::string_view(text).substr(slash + 1), out.denominator);
}

int exit_for(padyn_status status) {
  std::cerr << "error: " << padyn_status_string(status) << ": " << padyn_last_error() << "\n";
  if (status == PADYN_UNIT_NORM_PARAMETER) {
    std::cerr << "note: the analysis assumes |a|_p != 1; choose a with |a|_p > 1 or |a|_p < 1\n";
  }
  return status == PADYN_PRECISION_EXHAUSTED ? kExitPrecision : kExitConfig;
}

int emit(const RunConfig& cfg, char* text) {
  if (cfg.out.empty()) {
    std::fputs(text, stdout);
  } else {
    std::ofstream file(cfg.out, std::ios::binary);
    file << text;
    if (!file) {
      padyn_string_free(text);
      std::cerr << "error: cannot write " << cfg.out << "\n";
      return kExitConfig;
    }
  }
  padyn_string_free(text);
  return kExitOk;
}

padyn_run_options options_for(const RunConfig& cfg) {
  padyn_run_options o;
  padyn_run_options_default(&o);
  o.max_iter = cfg.max_iter;
  o.depth = cfg.depth;
  o.exhaustive = cfg.mode == "exhaustive";
  o.seed = cfg.seed;
  o.budget = cfg.budget;
  o.format = cfg.format == "csv" ? PADYN_FORMAT_CSV : PADYN_FORMAT_JSON;
  return o;
}

void add_common(CLI::App& cmd, RunConfig& cfg) {
  cmd.add_option("--p", cfg.p, "prime p")->required();
  cmd.add_option("--a", cfg.a, "parameter a as n/d")->required();
  cmd.add_option("--precision", cfg.precision, "relative precision in digits")
      ->check(CLI::Range(1, 100000));
  cmd.add_option("--max-iter", cfg.max_iter, "iteration budget per point")
      ->check(CLI::Range(1, 100000000));
  cmd.add_option("--depth", cfg.depth, "unit digits enumerated per sphere")
      ->check(CLI::Range(1, 64));
  cmd.add_option("--mode", cfg.mode, "sphere sampling mode")
      ->check(CLI::IsMember({"exhaustive", "random"}));
  cmd.add_option("--seed", cfg.seed, "seed for random sampling");
  cmd.add_option("--budget", cfg.budget, "largest exhaustive sphere")
      ->check(CLI::Range(std::int64_t{1}, std::int64_t{1} << 40));
  cmd.add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"json", "csv"}));
  cmd.add_option("--out", cfg.out, "write the report here instead of stdout");
}

int run(const std::string& command, const RunConfig& cfg) {
  RationalArg a;
  if (!parse_rational(cfg.a, a)) {
    std::cerr << "error: --a must be an exact rational n/d, got '" << cfg.a << "'\n";
    return kExitConfig;
  }
  padyn_map* map = nullptr;
  if (padyn_status s = padyn_map_create(cfg.p, a.numerator, a.denominator, cfg.precision, &map)) {
    return exit_for(s);
  }
  const padyn_run_options options = options_for(cfg);
  char* text = nullptr;
  padyn_status status = PADYN_OK;
  int fails = 0, undecided = 0;
  if (command == "fixed-points") {
    status = padyn_report_fixed_points(map, options.format, &text);
  } else if (command == "orbit") {
    RationalArg x;
    if (!parse_rational(cfg.x, x)) {
      padyn_map_free(map);
      std::cerr << "error: --x must be an exact rational n/d, got '" << cfg.x << "'\n";
      return kExitConfig;
    }
    status = padyn_report_orbit(map, x.numerator, x.denominator, &options, &text);
  } else if (command == "basin") {
    status = padyn_report_basin(map, &options, &text);
  } else {
    status = padyn_report_verify(map, &options, &text, &fails, &undecided);
  }
  padyn_map_free(map);
  if (status != PADYN_OK) return exit_for(status);
  if (const int rc = emit(cfg, text)) return rc;
  if (fails > 0 || (cfg.strict && undecided > 0)) return kExitFail;
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"p-adic dynamics of f(x) = x^3 + a x^2"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto* fixed = app.add_subcommand("fixed-points", "fixed points with |f'| and stability");
  add_common(*fixed, cfg);
  auto* orbit = app.add_subcommand("orbit", "norm trace and fate of one point");
  add_common(*orbit, cfg);
  orbit->add_option("--x", cfg.x, "starting point as n/d")->required();
  auto* verify = app.add_subcommand("verify", "checklist of the regime's theorem");
  add_common(*verify, cfg);
  verify->add_flag("--strict", cfg.strict, "treat UNDECIDED items as failures");
  auto* basin = app.add_subcommand("basin", "region-by-region basin report (|a| > 1)");
  add_common(*basin, cfg);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitConfig;
  }
  return run(app.get_subcommands().front()->get_name(), cfg);
}
