#include "uninav/environment.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "uninav/errors.hpp"

namespace uninav {

namespace {

constexpr double kTouchTol = 1e-9;

void validate_polygon(const Polygon& poly, const std::string& name) {
  if (poly.size() < 3) {
    throw ValidationError(name + " needs at least 3 vertices");
  }
  for (const Point2& v : poly.vertices) {
    if (!is_finite(v)) throw ValidationError(name + " has a non-finite vertex");
  }
  if (!poly.is_simple()) {
    throw ValidationError(name + " must be a simple (non-self-intersecting) polygon");
  }
  if (!poly.is_ccw()) {
    throw ValidationError(name + " must be counter-clockwise");
  }
}

double polygon_pair_distance(const Polygon& a, const Polygon& b) {
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      best = std::min(best, segment_segment_distance(a.edge(i), b.edge(j)));
    }
  }
  return best;
}

}  // namespace

void Environment::validate() const {
  if (!(robot_radius > 0.0)) {
    throw ValidationError("robot_radius must be positive");
  }
  validate_polygon(workspace, "workspace polygon");
  for (std::size_t k = 0; k < obstacles.size(); ++k) {
    validate_polygon(obstacles[k], "obstacle " + std::to_string(k) + " polygon");
  }

  double min_x = std::numeric_limits<double>::infinity(), min_y = min_x;
  double max_x = -min_x, max_y = -min_y;
  for (const Point2& v : workspace.vertices) {
    min_x = std::min(min_x, v.x);
    min_y = std::min(min_y, v.y);
    max_x = std::max(max_x, v.x);
    max_y = std::max(max_y, v.y);
  }
  for (std::size_t k = 0; k < obstacles.size(); ++k) {
    for (const Point2& v : obstacles[k].vertices) {
      if (v.x < min_x || v.x > max_x || v.y < min_y || v.y > max_y) {
        throw ValidationError("obstacle " + std::to_string(k) +
                              " lies outside the workspace bounding box");
      }
    }
  }

  // Corridor-width rule: any strictly positive gap between boundary features
  // must exceed 2*robot_radius, otherwise the eroded-boundary distance used
  // for clearance queries would be inexact there. Touching features merge
  // into one wall and are allowed.
  const double min_gap = 2.0 * robot_radius;
  const auto check_gap = [&](double gap, const std::string& what) {
    if (gap > kTouchTol && gap <= min_gap) {
      throw ValidationError("free-space corridor narrower than twice the robot radius (" +
                            what + ")");
    }
  };
  for (std::size_t i = 0; i < obstacles.size(); ++i) {
    check_gap(polygon_pair_distance(obstacles[i], workspace),
              "obstacle " + std::to_string(i) + " vs workspace");
    for (std::size_t j = i + 1; j < obstacles.size(); ++j) {
      check_gap(polygon_pair_distance(obstacles[i], obstacles[j]),
                "obstacles " + std::to_string(i) + " and " + std::to_string(j));
    }
  }
  const std::size_t n = workspace.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 2; j < n; ++j) {
      if (i == 0 && j == n - 1) continue;  // adjacent edges share a vertex
      check_gap(segment_segment_distance(workspace.edge(i), workspace.edge(j)),
                "workspace edges " + std::to_string(i) + " and " + std::to_string(j));
    }
  }
}

std::vector<Segment> Environment::boundary_segments() const {
  std::vector<Segment> segs;
  segs.reserve(workspace.size() + obstacles.size() * 4);
  for (std::size_t i = 0; i < workspace.size(); ++i) segs.push_back(workspace.edge(i));
  for (const Polygon& obs : obstacles) {
    for (std::size_t i = 0; i < obs.size(); ++i) segs.push_back(obs.edge(i));
  }
  return segs;
}

bool in_free_space(const Environment& env, Point2 p) {
  if (!env.workspace.contains(p)) return false;
  if (env.workspace.boundary_distance(p) <= env.robot_radius) return false;
  for (const Polygon& obs : env.obstacles) {
    if (obs.contains(p)) return false;
    if (obs.boundary_distance(p) <= env.robot_radius) return false;
  }
  return true;
}

double boundary_distance(const Environment& env, Point2 p) {
  if (!in_free_space(env, p)) return 0.0;
  double raw = env.workspace.boundary_distance(p);
  for (const Polygon& obs : env.obstacles) {
    raw = std::min(raw, obs.boundary_distance(p));
  }
  return std::max(0.0, raw - env.robot_radius);
}

namespace {

template <typename RegionLike>
ClearanceReport clearance_impl(const Environment& env, const RegionLike& region,
                               Point2 robot_pos) {
  if (!in_free_space(env, robot_pos)) {
    return {0.0, robot_pos, robot_pos};
  }
  SegmentQuery best;
  best.distance = std::numeric_limits<double>::infinity();
  const auto consider = [&](const Segment& seg) {
    const SegmentQuery q = segment_closest(region, seg);
    if (q.distance < best.distance) best = q;
  };
  for (std::size_t i = 0; i < env.workspace.size(); ++i) consider(env.workspace.edge(i));
  for (const Polygon& obs : env.obstacles) {
    for (std::size_t i = 0; i < obs.size(); ++i) consider(obs.edge(i));
  }

  ClearanceReport report;
  report.sigma = std::max(0.0, best.distance - env.robot_radius);
  report.witness_region_point = best.region_point;
  if (best.distance > 0.0) {
    // Slide the raw boundary witness inward by the robot radius so the pair
    // realizes sigma on the eroded free-space boundary.
    report.witness_boundary_point =
        best.segment_point +
        (best.region_point - best.segment_point) * (env.robot_radius / best.distance);
  } else {
    report.witness_boundary_point = best.segment_point;
  }
  return report;
}

}  // namespace

ClearanceReport region_clearance(const Environment& env, const Region& region,
                                 Point2 robot_pos) {
  return clearance_impl(env, region, robot_pos);
}

ClearanceReport region_clearance(const Environment& env,
                                 const BallConeIntersection& region,
                                 Point2 robot_pos) {
  return clearance_impl(env, region, robot_pos);
}

}  // namespace uninav
