#pragma once

#include <optional>

#include "uninav/geometry.hpp"
#include "uninav/unicycle.hpp"

namespace uninav {

enum class PredictorKind { Ball, BoundedCone, IceCream, TruncatedIceCream, ForwardSim };

// Intersection of the circular and unbounded conic predictions. The cone is
// absent when the robot does not point at the goal; membership is then the
// ball alone.
struct BoundedConePrediction {
  Ball ball;
  std::optional<SolidCone> cone;
};

// Circular prediction: the ball around the goal through the current position.
// Independent of the heading.
Region predict_ball(const Pose& pose, Point2 goal);

// Unbounded conic prediction: the solid cone from the position towards the
// goal with base clearance equal to the perpendicular alignment distance when
// aligned, otherwise the half-plane through the position facing the goal.
// Exposed for analysis; unbounded sets are useless for clearance queries.
Region predict_unbounded(const Pose& pose, Point2 goal);

BoundedConePrediction predict_bounded_cone(const Pose& pose, Point2 goal);

// Ice-cream cone conv(position, Ball(goal, perpendicular alignment distance))
// when aligned, otherwise the circular prediction.
Region predict_ice_cream(const Pose& pose, Point2 goal);

// Truncated ice-cream cone (alignment triangle union terminal ball) when
// aligned, otherwise the circular prediction.
Region predict_truncated(const Pose& pose, Point2 goal);

struct ForwardSimPrediction {
  PaddedPolyline polyline;
  bool converged = false;  // closed-loop simulation reached the capture radius
};

// Baseline ground truth: integrate the closed loop toward the goal and pad
// the sampled path by v_max*dt/2 to cover inter-sample motion (the speed
// never exceeds k_v times the initial goal distance).
ForwardSimPrediction predict_forward_sim(const Pose& pose, Point2 goal,
                                         const ControlGains& gains,
                                         double dt = 0.01, double horizon = 60.0);

}  // namespace uninav
