#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "uninav/driver.hpp"
#include "uninav/errors.hpp"

namespace {

int load_scenario(const std::string& path, uninav::ScenarioFile& out) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    std::cerr << "error: cannot read scenario file '" << path << "'\n";
    return uninav::kExitIo;
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    out = uninav::parse_scenario(buf.str());
  } catch (const uninav::ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return uninav::kExitValidation;
  }
  return uninav::kExitOk;
}

std::vector<std::string> split_csv_list(const std::string& list) {
  std::vector<std::string> out;
  std::string token;
  std::istringstream in(list);
  while (std::getline(in, token, ',')) {
    if (!token.empty()) out.push_back(token);
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Safe unicycle navigation with feedback motion prediction"};
  app.require_subcommand(1);

  std::string scenario_path, out_dir, predictor_token, predictors_list;
  double dt_override = 0.0, horizon_override = 0.0;

  CLI::App* simulate = app.add_subcommand("simulate", "Run one scenario and export outputs");
  simulate->add_option("--scenario", scenario_path, "Scenario JSON file")->required();
  simulate->add_option("--out", out_dir, "Output directory")->required();
  simulate->add_option("--predictor", predictor_token,
                       "Prediction method: ball|bc|ic|tc|fs (default: scenario file)");
  simulate->add_option("--dt", dt_override, "Integrator step override [s]");
  simulate->add_option("--horizon", horizon_override, "Simulation horizon override [s]");

  CLI::App* compare = app.add_subcommand("compare", "Run one scenario per predictor");
  compare->add_option("--scenario", scenario_path, "Scenario JSON file")->required();
  compare->add_option("--predictors", predictors_list,
                      "Comma-separated predictor list, e.g. ball,bc,ic,tc,fs")
      ->required();
  compare->add_option("--out", out_dir, "Output directory")->required();

  CLI11_PARSE(app, argc, argv);

  uninav::ScenarioFile file;
  if (const int code = load_scenario(scenario_path, file); code != uninav::kExitOk) {
    return code;
  }

  try {
    if (simulate->parsed()) {
      if (!predictor_token.empty()) {
        file.scenario.predictor = uninav::predictor_from_token(predictor_token);
      }
      if (dt_override > 0.0) file.scenario.dt = dt_override;
      if (horizon_override > 0.0) file.scenario.horizon = horizon_override;
      return uninav::run(file, out_dir, std::cout);
    }
    std::vector<uninav::PredictorKind> kinds;
    for (const std::string& token : split_csv_list(predictors_list)) {
      kinds.push_back(uninav::predictor_from_token(token));
    }
    const uninav::ComparisonReport report =
        uninav::compare(file, kinds, out_dir, std::cout);
    return uninav::compare_exit_code(report);
  } catch (const uninav::ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return uninav::kExitValidation;
  }
}
