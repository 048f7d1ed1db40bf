#pragma once

#include <vector>

#include "uninav/geometry.hpp"

namespace uninav {

// Goal-capture radius (meters) used by the simulators to gate the controller
// near its discontinuity at the goal.
inline constexpr double kGoalCaptureRadius = 1e-3;

// Wraps an angle into [-pi, pi).
double wrap_angle(double angle);

// Unit forward vector o(theta) and its left normal n(theta).
Point2 heading_vector(double theta);
Point2 heading_normal(double theta);

struct Pose {
  Point2 position;
  double heading = 0.0;  // radians in [-pi, pi)
};

struct ControlGains {
  double k_v = 1.0;
  double k_omega = 1.5;
};

struct ControlInput {
  double v = 0.0;      // m/s, forward only (v >= 0)
  double omega = 0.0;  // rad/s
};

struct PoseRate {
  double dx = 0.0;
  double dy = 0.0;
  double dtheta = 0.0;
};

// Signed projection of the goal offset onto the forward direction,
// o(theta)^T (goal - position); nonnegative means the robot points at the goal.
double goal_alignment(const Pose& pose, Point2 goal);

// Lateral offset of the goal from the heading line, |n(theta)^T (goal - position)|.
double perpendicular_alignment_distance(const Pose& pose, Point2 goal);

// Forward motion controller: v = k_v max(0, o^T (g-x)),
// omega = k_omega atan2(n^T (g-x), o^T (g-x)); (0, 0) exactly at the goal.
ControlInput forward_control(const Pose& pose, Point2 goal, const ControlGains& gains);

// Kinematic unicycle equations of motion.
PoseRate dynamics(const Pose& pose, const ControlInput& u);

struct ClosedLoopTrace {
  std::vector<double> times;
  std::vector<Pose> poses;
  bool converged = false;  // reached the capture radius before the horizon
};

// Fixed-step RK4 integration of the closed-loop unicycle toward a fixed goal.
// Stops once the position enters the capture radius or the horizon elapses.
ClosedLoopTrace simulate_to_goal(const Pose& start, Point2 goal,
                                 const ControlGains& gains, double dt,
                                 double horizon,
                                 double capture_radius = kGoalCaptureRadius);

}  // namespace uninav
