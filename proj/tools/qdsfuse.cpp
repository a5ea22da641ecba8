// qdsfuse: command-line front end for reliability-weighted evidence fusion.
//
//   qdsfuse fuse    --scenario FILE --strategy classical|murphy|reliability [--output table|json]
//   qdsfuse compare --scenario FILE [--output table|json]
//   qdsfuse curve   --c V --L V --gamma V --xr V [--points N] [--dirichlet] [--out FILE]
//
// Exit codes: 0 success, 2 invalid input, 3 mathematical failure (total
// conflict, no reliable source, degenerate curve).

#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "qdsfusion/curve_export.hpp"
#include "qdsfusion/error.hpp"
#include "qdsfusion/fusion.hpp"
#include "qdsfusion/report.hpp"
#include "qdsfusion/scenario.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitMath = 3;

int exit_code_for(const qds::Error& e) {
  return qds::is_mathematical_failure(e.kind()) ? kExitMath : kExitInput;
}

int report_error(const qds::Error& e) {
  std::cerr << "error: " << qds::to_string(e.kind()) << ": " << e.what() << '\n';
  return exit_code_for(e);
}

int run_fuse(const std::string& scenario_path, const std::string& strategy_name,
             const std::string& output) {
  const auto strategy = qds::parse_strategy(strategy_name);
  if (!strategy) {
    std::cerr << "error: unknown strategy '" << strategy_name << "'\n";
    return kExitInput;
  }
  const auto scenario = qds::load_scenario(scenario_path);
  const auto result = qds::fuse(scenario.reports, *strategy);
  if (output == "json") {
    std::cout << qds::fusion_to_json(result).dump(2) << '\n';
  } else {
    std::cout << qds::format_fusion_table(result);
  }
  return kExitOk;
}

int run_compare(const std::string& scenario_path, const std::string& output) {
  const auto scenario = qds::load_scenario(scenario_path);
  const auto rows = qds::compare_strategies(scenario.reports);
  if (output == "json") {
    std::cout << qds::comparison_to_json(rows).dump(2) << '\n';
  } else {
    std::cout << qds::format_comparison_table(rows);
  }
  for (const auto& row : rows) {
    if (row.ok()) return kExitOk;
  }
  return exit_code_for(*rows.front().error);
}

struct CurveArgs {
  double c = 0.0;
  double big_l = 0.0;
  double gamma = 0.0;
  double x_r = 0.0;
  std::size_t points = qds::kDefaultGridSize;
  bool dirichlet = false;
  std::string out;
};

int run_curve(const CurveArgs& args) {
  const auto params =
      qds::CurveParams::create(args.c, args.big_l, args.gamma, args.x_r,
                               args.dirichlet ? qds::Superposition::Dirichlet
                                              : qds::Superposition::Sum);
  const auto csv = qds::export_curve_csv(qds::confidence_curve(params, args.points));
  if (args.out.empty()) {
    std::cout << csv;
    return kExitOk;
  }
  std::ofstream file(args.out, std::ios::binary);
  if (!file) {
    std::cerr << "error: cannot write '" << args.out << "'\n";
    return kExitInput;
  }
  file << csv;
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Evidence fusion with quantum-inspired sensor reliability curves"};
  app.require_subcommand(1);

  std::string scenario_path;
  std::string strategy;
  std::string output = "table";

  auto* fuse = app.add_subcommand("fuse", "Fuse the reports of a scenario with one strategy");
  fuse->add_option("--scenario", scenario_path, "Scenario JSON file")->required();
  fuse->add_option("--strategy", strategy, "classical | murphy | reliability")->required();
  fuse->add_option("--output", output, "table | json")
      ->check(CLI::IsMember({"table", "json"}));

  auto* compare = app.add_subcommand("compare", "Run all strategies side by side");
  compare->add_option("--scenario", scenario_path, "Scenario JSON file")->required();
  compare->add_option("--output", output, "table | json")
      ->check(CLI::IsMember({"table", "json"}));

  CurveArgs curve_args;
  auto* curve = app.add_subcommand("curve", "Export a confidence coefficient curve as CSV");
  curve->add_option("--c", curve_args.c, "Scale factor c")->required();
  curve->add_option("--L", curve_args.big_l, "Sensitivity level L")->required();
  curve->add_option("--gamma", curve_args.gamma, "Quasi-potential strength")->required();
  curve->add_option("--xr", curve_args.x_r, "Maximal reconnaissance distance")->required();
  curve->add_option("--points", curve_args.points, "Grid size (>= 100)");
  curve->add_flag("--dirichlet", curve_args.dirichlet, "Force psi(x_r) = 0");
  curve->add_option("--out", curve_args.out, "Write CSV here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (*fuse) return run_fuse(scenario_path, strategy, output);
    if (*compare) return run_compare(scenario_path, output);
    if (*curve) return run_curve(curve_args);
  } catch (const qds::Error& e) {
    return report_error(e);
  }
  return kExitInput;
}
