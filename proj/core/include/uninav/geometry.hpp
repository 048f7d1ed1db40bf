#pragma once

#include <cmath>
#include <cstddef>
#include <variant>
#include <vector>

namespace uninav {

// Default tolerance (meters) for closed-region membership queries.
inline constexpr double kContainmentTol = 1e-9;

// Ternary-search settings for segment-to-region distance queries.
inline constexpr int kTernaryMaxIterations = 100;
inline constexpr double kTernaryParamTol = 1e-10;

// Dykstra alternating-projection settings for ball/cone intersections.
inline constexpr int kDykstraMaxIterations = 200;
inline constexpr double kDykstraTol = 1e-9;

struct Point2 {
  double x = 0.0;
  double y = 0.0;

  constexpr Point2 operator+(Point2 o) const { return {x + o.x, y + o.y}; }
  constexpr Point2 operator-(Point2 o) const { return {x - o.x, y - o.y}; }
  constexpr Point2 operator*(double s) const { return {x * s, y * s}; }
  constexpr Point2 operator/(double s) const { return {x / s, y / s}; }
  constexpr Point2 operator-() const { return {-x, -y}; }
  constexpr bool operator==(const Point2&) const = default;
};

constexpr Point2 operator*(double s, Point2 p) { return p * s; }

constexpr double dot(Point2 a, Point2 b) { return a.x * b.x + a.y * b.y; }
// z-component of the 3D cross product; positive when b is counterclockwise of a.
constexpr double cross(Point2 a, Point2 b) { return a.x * b.y - a.y * b.x; }
constexpr Point2 perp(Point2 a) { return {-a.y, a.x}; }
inline double norm(Point2 a) { return std::hypot(a.x, a.y); }
constexpr double norm_sq(Point2 a) { return a.x * a.x + a.y * a.y; }
inline double distance(Point2 a, Point2 b) { return norm(a - b); }
inline Point2 rotated(Point2 p, double angle) {
  const double c = std::cos(angle), s = std::sin(angle);
  return {p.x * c - p.y * s, p.x * s + p.y * c};
}
inline bool is_finite(Point2 p) { return std::isfinite(p.x) && std::isfinite(p.y); }

struct Segment {
  Point2 a;
  Point2 b;

  double length() const { return distance(a, b); }
  Point2 point_at(double t) const { return a + (b - a) * t; }
};

Point2 closest_point_on_segment(const Segment& s, Point2 p);
double point_segment_distance(Point2 p, const Segment& s);
bool segments_intersect(const Segment& s1, const Segment& s2);

struct SegmentPair {
  double distance = 0.0;
  double param1 = 0.0;  // parameter of the closest point on the first segment
  double param2 = 0.0;
  Point2 point1;
  Point2 point2;
};
SegmentPair closest_segment_pair(const Segment& s1, const Segment& s2);
double segment_segment_distance(const Segment& s1, const Segment& s2);

// Convex helper used to decompose the truncated ice-cream cone.
struct Triangle {
  Point2 a;
  Point2 b;
  Point2 c;

  bool contains(Point2 p) const;
  double distance(Point2 p) const;
  Point2 closest_point(Point2 p) const;
};

struct Polygon {
  std::vector<Point2> vertices;

  std::size_t size() const { return vertices.size(); }
  Segment edge(std::size_t i) const {
    return {vertices[i], vertices[(i + 1) % vertices.size()]};
  }
  double signed_area() const;
  bool is_ccw() const { return signed_area() > 0.0; }
  bool is_simple() const;
  bool contains(Point2 p) const;
  double boundary_distance(Point2 p) const;
};

struct Ball {
  Point2 center;
  double radius = 0.0;
};

// Closed half-plane {z : (toward-anchor)^T (z-anchor) >= 0}. When toward
// coincides with anchor the inequality is vacuous and the set is all of R^2.
struct HalfPlane {
  Point2 anchor;
  Point2 toward;
};

// Solid cone {apex + alpha (z-apex) : alpha >= 0, z in Ball(base, base_clearance)}.
// base_clearance == |base-apex| degenerates to the half-plane through the apex.
struct SolidCone {
  Point2 apex;
  Point2 base;
  double base_clearance = 0.0;
};

// conv(apex, Ball(base, base_radius)); requires base_radius <= |base-apex|,
// with equality collapsing the hull to the ball itself.
struct IceCreamCone {
  Point2 apex;
  Point2 base;
  double base_radius = 0.0;
};

// Non-convex union of the alignment triangle and the terminal ball. The
// triangle's third vertex is the projection of base onto the heading ray.
struct TruncatedIceCreamCone {
  Point2 apex;
  Point2 base;
  double heading = 0.0;

  Triangle triangle() const;
  Ball cap() const;
};

// Union of capsules of radius pad around consecutive points (a single ball
// when only one point is given).
struct PaddedPolyline {
  std::vector<Point2> points;
  double pad = 0.0;
};

using Region = std::variant<Ball, HalfPlane, SolidCone, IceCreamCone,
                            TruncatedIceCreamCone, PaddedPolyline>;

// Convex intersection of a ball and a solid cone; distance queries run
// Dykstra's alternating projection between the two parts.
struct BallConeIntersection {
  Ball ball;
  SolidCone cone;
};

bool contains(const Ball& r, Point2 p, double tol = kContainmentTol);
bool contains(const HalfPlane& r, Point2 p, double tol = kContainmentTol);
bool contains(const SolidCone& r, Point2 p, double tol = kContainmentTol);
bool contains(const IceCreamCone& r, Point2 p, double tol = kContainmentTol);
bool contains(const TruncatedIceCreamCone& r, Point2 p, double tol = kContainmentTol);
bool contains(const PaddedPolyline& r, Point2 p, double tol = kContainmentTol);
bool contains(const BallConeIntersection& r, Point2 p, double tol = kContainmentTol);
bool contains(const Region& r, Point2 p, double tol = kContainmentTol);

double point_distance(const Ball& r, Point2 p);
double point_distance(const HalfPlane& r, Point2 p);
double point_distance(const SolidCone& r, Point2 p);
double point_distance(const IceCreamCone& r, Point2 p);
double point_distance(const TruncatedIceCreamCone& r, Point2 p);
double point_distance(const PaddedPolyline& r, Point2 p);
double point_distance(const BallConeIntersection& r, Point2 p);
double point_distance(const Region& r, Point2 p);

Point2 project(const Ball& r, Point2 p);
Point2 project(const HalfPlane& r, Point2 p);
Point2 project(const SolidCone& r, Point2 p);
Point2 project(const IceCreamCone& r, Point2 p);
Point2 project(const BallConeIntersection& r, Point2 p);
// Throws std::invalid_argument for the non-convex variants
// (TruncatedIceCreamCone, PaddedPolyline); callers decompose those.
Point2 project(const Region& r, Point2 p);

struct SegmentQuery {
  double distance = 0.0;
  double param = 0.0;    // parameter of the closest point on the query segment
  Point2 region_point;   // closest point of the region
  Point2 segment_point;  // closest point of the segment
};

SegmentQuery segment_closest(const Region& r, const Segment& s);
SegmentQuery segment_closest(const BallConeIntersection& r, const Segment& s);
double segment_distance(const Region& r, const Segment& s);
double segment_distance(const BallConeIntersection& r, const Segment& s);

// Douglas-Peucker reduction of the spine; the dropped-vertex deviation bound
// is added to the pad so the result is a superset of the input region.
PaddedPolyline simplify_padded_polyline(const PaddedPolyline& r, double tolerance);

}  // namespace uninav
