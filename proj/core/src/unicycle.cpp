#include "uninav/unicycle.hpp"

#include <cmath>

#include "uninav/ode.hpp"

namespace uninav {

double wrap_angle(double angle) {
  const double two_pi = 2.0 * M_PI;
  double a = std::fmod(angle + M_PI, two_pi);
  if (a < 0.0) a += two_pi;
  return a - M_PI;
}

Point2 heading_vector(double theta) { return {std::cos(theta), std::sin(theta)}; }

Point2 heading_normal(double theta) { return {-std::sin(theta), std::cos(theta)}; }

double goal_alignment(const Pose& pose, Point2 goal) {
  return dot(heading_vector(pose.heading), goal - pose.position);
}

double perpendicular_alignment_distance(const Pose& pose, Point2 goal) {
  return std::abs(dot(heading_normal(pose.heading), goal - pose.position));
}

ControlInput forward_control(const Pose& pose, Point2 goal, const ControlGains& gains) {
  const Point2 delta = goal - pose.position;
  if (delta.x == 0.0 && delta.y == 0.0) return {0.0, 0.0};  // atan2(0,0) is undefined
  const double along = dot(heading_vector(pose.heading), delta);
  const double across = dot(heading_normal(pose.heading), delta);
  return {gains.k_v * std::max(0.0, along), gains.k_omega * std::atan2(across, along)};
}

PoseRate dynamics(const Pose& pose, const ControlInput& u) {
  return {u.v * std::cos(pose.heading), u.v * std::sin(pose.heading), u.omega};
}

ClosedLoopTrace simulate_to_goal(const Pose& start, Point2 goal,
                                 const ControlGains& gains, double dt,
                                 double horizon, double capture_radius) {
  ClosedLoopTrace trace;
  Pose pose = start;
  pose.heading = wrap_angle(pose.heading);

  const auto closed_loop = [&](const std::array<double, 3>& s) -> std::array<double, 3> {
    const Pose p{{s[0], s[1]}, s[2]};
    ControlInput u{};
    if (distance(p.position, goal) >= capture_radius) {
      u = forward_control(p, goal, gains);
    }
    const PoseRate r = dynamics(p, u);
    return {r.dx, r.dy, r.dtheta};
  };

  const long max_steps = static_cast<long>(std::ceil(horizon / dt));
  for (long step = 0;; ++step) {
    trace.times.push_back(static_cast<double>(step) * dt);
    trace.poses.push_back(pose);
    if (distance(pose.position, goal) < capture_radius) {
      trace.converged = true;
      break;
    }
    if (step >= max_steps) break;
    const std::array<double, 3> next =
        rk4_step<3>({pose.position.x, pose.position.y, pose.heading}, dt, closed_loop);
    pose = {{next[0], next[1]}, wrap_angle(next[2])};
  }
  return trace;
}

}  // namespace uninav
