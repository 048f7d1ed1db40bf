#pragma once

#include <vector>

#include "uninav/environment.hpp"
#include "uninav/prediction.hpp"
#include "uninav/unicycle.hpp"

namespace uninav {

// Deviation tolerance when simplifying forward-simulation polylines for
// clearance queries; the pad grows by the same amount so the simplified
// region stays a superset.
inline constexpr double kForwardSimSimplifyTol = 1e-3;

// Piecewise-linear reference path parameterized by normalized arc length.
class PathPolyline {
 public:
  PathPolyline() = default;
  // Throws ValidationError on fewer than two waypoints or zero total length.
  explicit PathPolyline(std::vector<Point2> waypoints);

  const std::vector<Point2>& waypoints() const { return waypoints_; }
  double total_length() const { return total_length_; }
  Point2 point_at(double alpha) const;  // alpha clamped to [0, 1]
  Point2 end() const { return waypoints_.back(); }
  double distance_to(Point2 q) const;  // distance from q to the path

 private:
  std::vector<Point2> waypoints_;
  std::vector<double> cumulative_;  // arc length up to each waypoint
  double total_length_ = 0.0;
};

struct NavState {
  Pose pose;
  Point2 governor;
  double time = 0.0;
};

struct NavGains {
  ControlGains control;
  double k_path = 1.0;
  double k_gov = 4.0;
};

struct Scenario {
  Environment environment;
  PathPolyline path;
  NavGains gains;
  Pose initial_pose;
  Point2 initial_governor;
  PredictorKind predictor = PredictorKind::IceCream;
  double dt = 0.01;
  double horizon = 120.0;
  double forward_sim_horizon = 60.0;  // inner budget for the FS predictor
};

enum class RunStatus { Reached, Horizon, Frozen };

struct TrajectoryLog {
  struct Row {
    double t, x, y, theta, gx, gy, sigma, v, omega;
  };
  std::vector<Row> rows;
  RunStatus status = RunStatus::Horizon;
  // Diagnostics, not enforced: steps where the governor left its Voronoi
  // domain or the free space.
  int voronoi_exit_steps = 0;
  int governor_outside_free_space_steps = 0;
};

// Furthest path point within the clearance ball around g, i.e. gamma(alpha*)
// with alpha* the largest alpha such that |gamma(alpha) - g| stays within the
// free-space boundary distance of g. Falls back to gamma(0) when the ball
// contains no path point.
Point2 projected_path_goal(const PathPolyline& path, const Environment& env, Point2 g);

// Move-to-projected-path-goal reference field, -k_path (g - gamma(alpha*)).
Point2 path_pursuit_field(const PathPolyline& path, const Environment& env, Point2 g,
                          double k_path);

// Governor velocity: gain times the metric projection of the reference field
// onto the ball of radius sigma; the zero vector when sigma is zero.
Point2 governor_velocity(Point2 field_value, double sigma, double k_gov);

// Safety level of the selected predictor evaluated at (pose -> governor).
double safety_level(const Environment& env, PredictorKind kind, const Pose& pose,
                    Point2 governor, const ControlGains& gains,
                    double forward_sim_dt = 0.01, double forward_sim_horizon = 60.0);

struct NavDerivative {
  PoseRate pose_rate;
  Point2 governor_rate;
  double sigma = 0.0;
  ControlInput control;
};

// Right-hand side of the coupled unicycle-governor dynamics: the unicycle
// chases the governor while the governor follows the reference field inside
// the sigma ball.
NavDerivative coupled_derivative(const NavState& state, const Scenario& scenario);

// Checks scenario invariants: environment validity, waypoints inside the free
// space interior, positive gains and integrator settings, and a strictly
// positive initial safety level. Throws ValidationError.
void validate_scenario(const Scenario& scenario);

// Fixed-step RK4 simulation of the coupled system. Terminates when both the
// robot and the governor are within 0.05 m of the path end, or at the
// horizon. One log row per step; deterministic for identical scenarios.
TrajectoryLog simulate(const Scenario& scenario);

}  // namespace uninav
