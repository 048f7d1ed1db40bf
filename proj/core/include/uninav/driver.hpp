#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "uninav/scenario_io.hpp"

namespace uninav {

// Process exit codes shared by the library driver and the CLI.
inline constexpr int kExitOk = 0;
inline constexpr int kExitSimulationFailed = 1;
inline constexpr int kExitValidation = 2;
inline constexpr int kExitIo = 3;

// Runs the scenario and writes trajectory.csv and scene.svg into out_dir,
// plus a one-line summary on `summary`. Returns an exit code.
int run(const ScenarioFile& file, const std::filesystem::path& out_dir,
        std::ostream& summary);

struct ComparisonRow {
  PredictorKind predictor = PredictorKind::IceCream;
  double travel_time = 0.0;   // s, time of the last logged row
  double mean_speed = 0.0;    // m/s, average commanded speed over the run
  double min_clearance = 0.0; // m, closest body-to-boundary gap over the run
  RunStatus status = RunStatus::Horizon;
  int exit_code = kExitOk;
  std::string error;  // non-empty when the run was rejected
};

struct ComparisonReport {
  std::vector<ComparisonRow> rows;
};

// Runs the scenario once per predictor (concurrently), writes report.csv and
// speeds.svg into out_dir, and prints one summary line per predictor.
// Requires at least two predictors. Per-run failures are recorded in the
// report while the remaining predictors still run.
ComparisonReport compare(const ScenarioFile& file,
                         const std::vector<PredictorKind>& predictors,
                         const std::filesystem::path& out_dir, std::ostream& summary);

int compare_exit_code(const ComparisonReport& report);

// Smallest gap between the robot body and the raw workspace/obstacle
// boundary over the logged trajectory (negative means penetration).
double min_body_clearance(const Environment& env, const TrajectoryLog& log);

double mean_speed(const TrajectoryLog& log);

std::string run_status_name(RunStatus status);

}  // namespace uninav
