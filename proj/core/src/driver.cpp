#include "uninav/driver.hpp"

#include <algorithm>
#include <fstream>
#include <future>
#include <limits>
#include <ostream>
#include <sstream>

#include "uninav/errors.hpp"
#include "uninav/svg.hpp"
#include "uninav/trajectory_csv.hpp"

namespace uninav {

namespace {

bool write_text_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) return false;
  out << content;
  out.flush();
  return static_cast<bool>(out);
}

}  // namespace

double min_body_clearance(const Environment& env, const TrajectoryLog& log) {
  double best = std::numeric_limits<double>::infinity();
  for (const TrajectoryLog::Row& r : log.rows) {
    const Point2 p{r.x, r.y};
    double raw = env.workspace.boundary_distance(p);
    for (const Polygon& obs : env.obstacles) {
      raw = std::min(raw, obs.boundary_distance(p));
    }
    best = std::min(best, raw - env.robot_radius);
  }
  return best;
}

double mean_speed(const TrajectoryLog& log) {
  if (log.rows.empty()) return 0.0;
  double acc = 0.0;
  for (const TrajectoryLog::Row& r : log.rows) acc += r.v;
  return acc / static_cast<double>(log.rows.size());
}

std::string run_status_name(RunStatus status) {
  switch (status) {
    case RunStatus::Reached: return "reached";
    case RunStatus::Horizon: return "horizon";
    case RunStatus::Frozen: return "frozen";
  }
  return "horizon";
}

int run(const ScenarioFile& file, const std::filesystem::path& out_dir,
        std::ostream& summary) {
  TrajectoryLog log;
  try {
    log = simulate(file.scenario);
  } catch (const ValidationError& e) {
    summary << "error: " << e.what() << '\n';
    return kExitValidation;
  }

  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  std::ostringstream csv;
  write_trajectory_csv(csv, log);
  if (!write_text_file(out_dir / "trajectory.csv", csv.str()) ||
      !write_text_file(out_dir / "scene.svg",
                       render_scene_svg(file.scenario, log, file.output.snapshot_period))) {
    summary << "error: cannot write outputs to " << out_dir.string() << '\n';
    return kExitIo;
  }

  const TrajectoryLog::Row& last = log.rows.back();
  summary << "predictor=" << predictor_token(file.scenario.predictor)
          << " status=" << run_status_name(log.status) << " steps=" << log.rows.size()
          << " t_end=" << last.t << " mean_speed=" << mean_speed(log)
          << " min_clearance=" << min_body_clearance(file.scenario.environment, log)
          << '\n';
  return log.status == RunStatus::Reached ? kExitOk : kExitSimulationFailed;
}

ComparisonReport compare(const ScenarioFile& file,
                         const std::vector<PredictorKind>& predictors,
                         const std::filesystem::path& out_dir, std::ostream& summary) {
  if (predictors.size() < 2) {
    throw ValidationError("compare needs at least 2 predictors");
  }

  struct RunResult {
    ComparisonRow row;
    TrajectoryLog log;
  };
  // Runs are pure functions of the scenario, so they can execute in parallel;
  // outputs are merged in input order afterwards.
  std::vector<std::future<RunResult>> futures;
  futures.reserve(predictors.size());
  for (const PredictorKind kind : predictors) {
    Scenario variant = file.scenario;
    variant.predictor = kind;
    futures.push_back(std::async(std::launch::async, [variant, kind]() {
      RunResult res;
      res.row.predictor = kind;
      try {
        res.log = simulate(variant);
        res.row.status = res.log.status;
        res.row.travel_time = res.log.rows.back().t;
        res.row.mean_speed = mean_speed(res.log);
        res.row.min_clearance = min_body_clearance(variant.environment, res.log);
        res.row.exit_code =
            res.log.status == RunStatus::Reached ? kExitOk : kExitSimulationFailed;
      } catch (const ValidationError& e) {
        res.row.exit_code = kExitValidation;
        res.row.error = e.what();
      }
      return res;
    }));
  }

  ComparisonReport report;
  std::vector<TrajectoryLog> logs;
  logs.reserve(predictors.size());
  for (auto& fut : futures) {
    RunResult res = fut.get();
    report.rows.push_back(res.row);
    logs.push_back(std::move(res.log));
  }

  std::ostringstream csv;
  csv << "predictor,travel_time,mean_speed,min_clearance,status\n";
  for (const ComparisonRow& row : report.rows) {
    char buf[160];
    std::snprintf(buf, sizeof(buf), "%s,%.9f,%.9f,%.9f,%s\n",
                  predictor_token(row.predictor).c_str(), row.travel_time,
                  row.mean_speed, row.min_clearance,
                  row.error.empty() ? run_status_name(row.status).c_str() : "rejected");
    csv << buf;
  }

  std::vector<std::pair<std::string, const TrajectoryLog*>> labelled;
  for (std::size_t i = 0; i < predictors.size(); ++i) {
    if (report.rows[i].error.empty()) {
      labelled.emplace_back(predictor_token(predictors[i]), &logs[i]);
    }
  }

  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  if (!write_text_file(out_dir / "report.csv", csv.str()) ||
      !write_text_file(out_dir / "speeds.svg", render_speed_svg(labelled))) {
    summary << "error: cannot write outputs to " << out_dir.string() << '\n';
    for (ComparisonRow& row : report.rows) row.exit_code = kExitIo;
    return report;
  }

  for (const ComparisonRow& row : report.rows) {
    summary << "predictor=" << predictor_token(row.predictor);
    if (!row.error.empty()) {
      summary << " error=\"" << row.error << "\"";
    } else {
      summary << " status=" << run_status_name(row.status)
              << " travel_time=" << row.travel_time << " mean_speed=" << row.mean_speed
              << " min_clearance=" << row.min_clearance;
    }
    summary << '\n';
  }
  return report;
}

int compare_exit_code(const ComparisonReport& report) {
  int code = kExitOk;
  for (const ComparisonRow& row : report.rows) {
    code = std::max(code, row.exit_code);
  }
  return code;
}

}  // namespace uninav
