#pragma once

#include <vector>

#include "uninav/geometry.hpp"

namespace uninav {

// Workspace polygon, obstacle polygons and the robot body radius. The free
// space is the set of body centers whose radius-rho disk fits inside the
// workspace and clear of every obstacle.
struct Environment {
  Polygon workspace;
  std::vector<Polygon> obstacles;
  double robot_radius = 0.0;

  // Checks the structural invariants (polygon validity, positive radius,
  // obstacles within the workspace bounding box, and the corridor-width rule
  // that every free-space gap is wider than twice the robot radius; touching
  // features are allowed). Throws ValidationError naming the broken rule.
  void validate() const;

  // All workspace and obstacle boundary edges.
  std::vector<Segment> boundary_segments() const;
};

struct ClearanceReport {
  double sigma = 0.0;
  Point2 witness_region_point;
  Point2 witness_boundary_point;
};

// True iff the body disk around p fits strictly inside the free space.
bool in_free_space(const Environment& env, Point2 p);

// Distance from p to the free-space boundary, i.e. the raw boundary distance
// minus the robot radius clamped at zero. Returns 0 when p is not in the
// free space.
double boundary_distance(const Environment& env, Point2 p);

// Safety level of a prediction region: the minimum distance between the
// region and the free-space boundary, or 0 when the robot position itself is
// outside the free space. Witness points realize sigma when it is positive.
ClearanceReport region_clearance(const Environment& env, const Region& region,
                                 Point2 robot_pos);
ClearanceReport region_clearance(const Environment& env,
                                 const BallConeIntersection& region,
                                 Point2 robot_pos);

}  // namespace uninav
