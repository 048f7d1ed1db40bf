#include "uninav/prediction.hpp"

namespace uninav {

Region predict_ball(const Pose& pose, Point2 goal) {
  return Ball{goal, distance(goal, pose.position)};
}

Region predict_unbounded(const Pose& pose, Point2 goal) {
  if (goal_alignment(pose, goal) >= 0.0) {
    return SolidCone{pose.position, goal, perpendicular_alignment_distance(pose, goal)};
  }
  return HalfPlane{pose.position, goal};
}

BoundedConePrediction predict_bounded_cone(const Pose& pose, Point2 goal) {
  BoundedConePrediction p;
  p.ball = Ball{goal, distance(goal, pose.position)};
  if (goal_alignment(pose, goal) >= 0.0) {
    p.cone = SolidCone{pose.position, goal, perpendicular_alignment_distance(pose, goal)};
  }
  return p;
}

Region predict_ice_cream(const Pose& pose, Point2 goal) {
  if (goal_alignment(pose, goal) >= 0.0) {
    return IceCreamCone{pose.position, goal, perpendicular_alignment_distance(pose, goal)};
  }
  return Ball{goal, distance(goal, pose.position)};
}

Region predict_truncated(const Pose& pose, Point2 goal) {
  if (goal_alignment(pose, goal) >= 0.0) {
    return TruncatedIceCreamCone{pose.position, goal, pose.heading};
  }
  return Ball{goal, distance(goal, pose.position)};
}

ForwardSimPrediction predict_forward_sim(const Pose& pose, Point2 goal,
                                         const ControlGains& gains, double dt,
                                         double horizon) {
  const ClosedLoopTrace trace = simulate_to_goal(pose, goal, gains, dt, horizon);
  ForwardSimPrediction out;
  out.converged = trace.converged;
  out.polyline.points.reserve(trace.poses.size());
  for (const Pose& p : trace.poses) out.polyline.points.push_back(p.position);
  const double v_max = gains.k_v * distance(goal, pose.position);
  out.polyline.pad = 0.5 * v_max * dt;
  return out;
}

}  // namespace uninav
