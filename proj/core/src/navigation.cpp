#include "uninav/navigation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "uninav/errors.hpp"
#include "uninav/ode.hpp"

namespace uninav {

namespace {

constexpr double kReachTol = 0.05;  // terminal radius around the path end

}  // namespace

PathPolyline::PathPolyline(std::vector<Point2> waypoints)
    : waypoints_(std::move(waypoints)) {
  if (waypoints_.size() < 2) {
    throw ValidationError("path needs at least 2 waypoints");
  }
  cumulative_.resize(waypoints_.size(), 0.0);
  for (std::size_t i = 1; i < waypoints_.size(); ++i) {
    if (!is_finite(waypoints_[i - 1]) || !is_finite(waypoints_[i])) {
      throw ValidationError("path waypoints must be finite");
    }
    cumulative_[i] = cumulative_[i - 1] + distance(waypoints_[i - 1], waypoints_[i]);
  }
  total_length_ = cumulative_.back();
  if (!(total_length_ > 0.0)) {
    throw ValidationError("path must have positive total length");
  }
}

Point2 PathPolyline::point_at(double alpha) const {
  const double s = std::clamp(alpha, 0.0, 1.0) * total_length_;
  const auto it = std::upper_bound(cumulative_.begin(), cumulative_.end(), s);
  std::size_t i = static_cast<std::size_t>(it - cumulative_.begin());
  if (i == 0) return waypoints_.front();
  if (i >= waypoints_.size()) return waypoints_.back();
  const double seg_len = cumulative_[i] - cumulative_[i - 1];
  if (seg_len == 0.0) return waypoints_[i];
  const double t = (s - cumulative_[i - 1]) / seg_len;
  return waypoints_[i - 1] + (waypoints_[i] - waypoints_[i - 1]) * t;
}

double PathPolyline::distance_to(Point2 q) const {
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i + 1 < waypoints_.size(); ++i) {
    best = std::min(best, point_segment_distance(q, {waypoints_[i], waypoints_[i + 1]}));
  }
  return best;
}

Point2 projected_path_goal(const PathPolyline& path, const Environment& env, Point2 g) {
  const double radius = boundary_distance(env, g);
  const auto& pts = path.waypoints();
  const double total = path.total_length();
  double best_alpha = -1.0;
  double travelled = 0.0;
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    const Point2 d = pts[i + 1] - pts[i];
    const double seg_len = norm(d);
    // Solve |pts[i] + s d - g| = radius for s on [0, 1].
    const double a = norm_sq(d);
    const Point2 w = pts[i] - g;
    const double b = 2.0 * dot(d, w);
    const double c = norm_sq(w) - radius * radius;
    if (a == 0.0) {
      if (c <= 0.0 && travelled / total >= best_alpha) best_alpha = travelled / total;
      continue;
    }
    const double disc = b * b - 4.0 * a * c;
    if (disc >= 0.0) {
      const double sqrt_disc = std::sqrt(disc);
      const double s_lo = std::max(0.0, (-b - sqrt_disc) / (2.0 * a));
      const double s_hi = std::min(1.0, (-b + sqrt_disc) / (2.0 * a));
      if (s_lo <= s_hi) {
        const double alpha = (travelled + s_hi * seg_len) / total;
        if (alpha >= best_alpha) best_alpha = alpha;  // ties go to the later segment
      }
    }
    travelled += seg_len;
  }
  if (best_alpha < 0.0) return path.point_at(0.0);
  return path.point_at(best_alpha);
}

Point2 path_pursuit_field(const PathPolyline& path, const Environment& env, Point2 g,
                          double k_path) {
  return (projected_path_goal(path, env, g) - g) * k_path;
}

Point2 governor_velocity(Point2 field_value, double sigma, double k_gov) {
  if (sigma <= 0.0) return {0.0, 0.0};
  const double n = norm(field_value);
  if (n <= sigma) return field_value * k_gov;
  return field_value * (sigma / n) * k_gov;
}

double safety_level(const Environment& env, PredictorKind kind, const Pose& pose,
                    Point2 governor, const ControlGains& gains, double forward_sim_dt,
                    double forward_sim_horizon) {
  switch (kind) {
    case PredictorKind::Ball:
      return region_clearance(env, predict_ball(pose, governor), pose.position).sigma;
    case PredictorKind::IceCream:
      return region_clearance(env, predict_ice_cream(pose, governor), pose.position).sigma;
    case PredictorKind::TruncatedIceCream:
      return region_clearance(env, predict_truncated(pose, governor), pose.position).sigma;
    case PredictorKind::BoundedCone: {
      const BoundedConePrediction bc = predict_bounded_cone(pose, governor);
      if (bc.cone) {
        return region_clearance(env, BallConeIntersection{bc.ball, *bc.cone},
                                pose.position)
            .sigma;
      }
      return region_clearance(env, Region{bc.ball}, pose.position).sigma;
    }
    case PredictorKind::ForwardSim: {
      const ForwardSimPrediction fs = predict_forward_sim(
          pose, governor, gains, forward_sim_dt, forward_sim_horizon);
      const PaddedPolyline slim =
          simplify_padded_polyline(fs.polyline, kForwardSimSimplifyTol);
      return region_clearance(env, Region{slim}, pose.position).sigma;
    }
  }
  return 0.0;
}

NavDerivative coupled_derivative(const NavState& state, const Scenario& scenario) {
  NavDerivative d;
  if (distance(state.pose.position, state.governor) >= kGoalCaptureRadius) {
    d.control = forward_control(state.pose, state.governor, scenario.gains.control);
  }
  d.pose_rate = dynamics(state.pose, d.control);
  d.sigma = safety_level(scenario.environment, scenario.predictor, state.pose,
                         state.governor, scenario.gains.control, scenario.dt,
                         scenario.forward_sim_horizon);
  const Point2 field = path_pursuit_field(scenario.path, scenario.environment,
                                          state.governor, scenario.gains.k_path);
  d.governor_rate = governor_velocity(field, d.sigma, scenario.gains.k_gov);
  return d;
}

void validate_scenario(const Scenario& scenario) {
  scenario.environment.validate();
  if (!(scenario.gains.control.k_v > 0.0)) throw ValidationError("k_v must be positive");
  if (!(scenario.gains.control.k_omega > 0.0)) {
    throw ValidationError("k_omega must be positive");
  }
  if (!(scenario.gains.k_path > 0.0)) throw ValidationError("k_path must be positive");
  if (!(scenario.gains.k_gov > 0.0)) throw ValidationError("k_gov must be positive");
  if (!(scenario.dt > 0.0)) throw ValidationError("integrator dt must be positive");
  if (!(scenario.horizon > 0.0)) {
    throw ValidationError("integrator horizon must be positive");
  }
  if (scenario.path.waypoints().size() < 2) {
    throw ValidationError("path needs at least 2 waypoints");
  }
  const auto& pts = scenario.path.waypoints();
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (!in_free_space(scenario.environment, pts[i])) {
      throw ValidationError("path waypoint " + std::to_string(i) +
                            " is outside the free space interior");
    }
  }
  if (!is_finite(scenario.initial_pose.position) ||
      !std::isfinite(scenario.initial_pose.heading)) {
    throw ValidationError("initial pose must be finite");
  }
  if (!is_finite(scenario.initial_governor)) {
    throw ValidationError("initial governor position must be finite");
  }
  const double sigma0 = safety_level(
      scenario.environment, scenario.predictor, scenario.initial_pose,
      scenario.initial_governor, scenario.gains.control, scenario.dt,
      scenario.forward_sim_horizon);
  if (!(sigma0 > 0.0)) {
    throw ValidationError("initial safety level must be strictly positive");
  }
}

TrajectoryLog simulate(const Scenario& scenario) {
  validate_scenario(scenario);

  TrajectoryLog log;
  const Point2 goal = scenario.path.end();
  NavState state{scenario.initial_pose, scenario.initial_governor, 0.0};
  state.pose.heading = wrap_angle(state.pose.heading);

  const auto rhs = [&](const std::array<double, 5>& s) -> std::array<double, 5> {
    const NavState ns{{{s[0], s[1]}, s[2]}, {s[3], s[4]}, state.time};
    const NavDerivative d = coupled_derivative(ns, scenario);
    return {d.pose_rate.dx, d.pose_rate.dy, d.pose_rate.dtheta, d.governor_rate.x,
            d.governor_rate.y};
  };

  const long max_steps = static_cast<long>(std::ceil(scenario.horizon / scenario.dt));
  for (long step = 0;; ++step) {
    const NavDerivative d = coupled_derivative(state, scenario);
    log.rows.push_back({state.time, state.pose.position.x, state.pose.position.y,
                        state.pose.heading, state.governor.x, state.governor.y, d.sigma,
                        d.control.v, d.control.omega});
    if (!in_free_space(scenario.environment, state.governor)) {
      ++log.governor_outside_free_space_steps;
    }
    if (scenario.path.distance_to(state.governor) >
        boundary_distance(scenario.environment, state.governor) + 1e-9) {
      ++log.voronoi_exit_steps;
    }

    const bool robot_done = distance(state.pose.position, goal) < kReachTol;
    const bool governor_done = distance(state.governor, goal) < kReachTol;
    if (robot_done && governor_done) {
      log.status = RunStatus::Reached;
      break;
    }
    if (step >= max_steps) {
      const bool stalled = d.sigma == 0.0 &&
                           distance(state.pose.position, state.governor) < kReachTol;
      log.status = stalled ? RunStatus::Frozen : RunStatus::Horizon;
      break;
    }

    const std::array<double, 5> next =
        rk4_step<5>({state.pose.position.x, state.pose.position.y, state.pose.heading,
                     state.governor.x, state.governor.y},
                    scenario.dt, rhs);
    state.pose = {{next[0], next[1]}, wrap_angle(next[2])};
    state.governor = {next[3], next[4]};
    state.time = static_cast<double>(step + 1) * scenario.dt;
  }
  return log;
}

}  // namespace uninav
