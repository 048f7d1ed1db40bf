#include "uninav/geometry.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <utility>

namespace uninav {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

int orientation_sign(Point2 a, Point2 b, Point2 c) {
  const double v = cross(b - a, c - a);
  if (v > 0.0) return 1;
  if (v < 0.0) return -1;
  return 0;
}

bool on_segment_collinear(const Segment& s, Point2 p) {
  return std::min(s.a.x, s.b.x) <= p.x && p.x <= std::max(s.a.x, s.b.x) &&
         std::min(s.a.y, s.b.y) <= p.y && p.y <= std::max(s.a.y, s.b.y);
}

}  // namespace

Point2 closest_point_on_segment(const Segment& s, Point2 p) {
  const Point2 d = s.b - s.a;
  const double len2 = norm_sq(d);
  if (len2 == 0.0) return s.a;
  const double t = std::clamp(dot(p - s.a, d) / len2, 0.0, 1.0);
  return s.a + d * t;
}

double point_segment_distance(Point2 p, const Segment& s) {
  return distance(p, closest_point_on_segment(s, p));
}

bool segments_intersect(const Segment& s1, const Segment& s2) {
  const int o1 = orientation_sign(s1.a, s1.b, s2.a);
  const int o2 = orientation_sign(s1.a, s1.b, s2.b);
  const int o3 = orientation_sign(s2.a, s2.b, s1.a);
  const int o4 = orientation_sign(s2.a, s2.b, s1.b);
  if (o1 != o2 && o3 != o4) return true;
  if (o1 == 0 && on_segment_collinear(s1, s2.a)) return true;
  if (o2 == 0 && on_segment_collinear(s1, s2.b)) return true;
  if (o3 == 0 && on_segment_collinear(s2, s1.a)) return true;
  if (o4 == 0 && on_segment_collinear(s2, s1.b)) return true;
  return false;
}

SegmentPair closest_segment_pair(const Segment& s1, const Segment& s2) {
  const Point2 d1 = s1.b - s1.a;
  const Point2 d2 = s2.b - s2.a;
  if (segments_intersect(s1, s2)) {
    // Proper crossing: solve for the intersection parameters.
    const double denom = cross(d1, d2);
    if (denom != 0.0) {
      const double t1 = std::clamp(cross(s2.a - s1.a, d2) / denom, 0.0, 1.0);
      const double t2 = std::clamp(cross(s2.a - s1.a, d1) / denom, 0.0, 1.0);
      const Point2 q = s1.point_at(t1);
      return {0.0, t1, t2, q, s2.point_at(t2)};
    }
    // Collinear overlap: any shared point works; use a clamped projection.
    const double len2 = norm_sq(d1);
    const double t1 =
        len2 == 0.0 ? 0.0 : std::clamp(dot(s2.a - s1.a, d1) / len2, 0.0, 1.0);
    const Point2 q = s1.point_at(t1);
    const double len2b = norm_sq(d2);
    const double t2 =
        len2b == 0.0 ? 0.0 : std::clamp(dot(q - s2.a, d2) / len2b, 0.0, 1.0);
    return {distance(q, s2.point_at(t2)), t1, t2, q, s2.point_at(t2)};
  }

  SegmentPair best;
  best.distance = kInf;
  const auto consider = [&](double t1, double t2) {
    const Point2 p1 = s1.point_at(t1);
    const Point2 p2 = s2.point_at(t2);
    const double d = distance(p1, p2);
    if (d < best.distance) best = {d, t1, t2, p1, p2};
  };
  const double l1 = norm_sq(d1), l2 = norm_sq(d2);
  const auto param_on = [](const Segment& s, Point2 p, double len2) {
    return len2 == 0.0 ? 0.0 : std::clamp(dot(p - s.a, s.b - s.a) / len2, 0.0, 1.0);
  };
  consider(param_on(s1, s2.a, l1), 0.0);
  consider(param_on(s1, s2.b, l1), 1.0);
  consider(0.0, param_on(s2, s1.a, l2));
  consider(1.0, param_on(s2, s1.b, l2));
  return best;
}

double segment_segment_distance(const Segment& s1, const Segment& s2) {
  return closest_segment_pair(s1, s2).distance;
}

// ---------------------------------------------------------------------------
// Triangle

bool Triangle::contains(Point2 p) const {
  const double area2 = cross(b - a, c - a);
  const double scale = std::max({norm_sq(b - a), norm_sq(c - a), norm_sq(c - b), 1e-30});
  if (std::abs(area2) < 1e-12 * scale) {
    // Degenerate (collinear) triangle: the hull is a segment.
    return distance(p) == 0.0;
  }
  const double c1 = cross(b - a, p - a);
  const double c2 = cross(c - b, p - b);
  const double c3 = cross(a - c, p - c);
  const bool any_neg = c1 < 0.0 || c2 < 0.0 || c3 < 0.0;
  const bool any_pos = c1 > 0.0 || c2 > 0.0 || c3 > 0.0;
  return !(any_neg && any_pos);
}

double Triangle::distance(Point2 p) const {
  const double area2 = cross(b - a, c - a);
  const double scale = std::max({norm_sq(b - a), norm_sq(c - a), norm_sq(c - b), 1e-30});
  if (std::abs(area2) >= 1e-12 * scale && contains(p)) return 0.0;
  return std::min({point_segment_distance(p, {a, b}),
                   point_segment_distance(p, {b, c}),
                   point_segment_distance(p, {c, a})});
}

Point2 Triangle::closest_point(Point2 p) const {
  const double area2 = cross(b - a, c - a);
  const double scale = std::max({norm_sq(b - a), norm_sq(c - a), norm_sq(c - b), 1e-30});
  if (std::abs(area2) >= 1e-12 * scale && contains(p)) return p;
  Point2 best = a;
  double best_d = kInf;
  for (const Segment& e : {Segment{a, b}, Segment{b, c}, Segment{c, a}}) {
    const Point2 q = closest_point_on_segment(e, p);
    const double d = norm(p - q);
    if (d < best_d) {
      best_d = d;
      best = q;
    }
  }
  return best;
}

// ---------------------------------------------------------------------------
// Polygon

double Polygon::signed_area() const {
  double acc = 0.0;
  const std::size_t n = vertices.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Point2& p = vertices[i];
    const Point2& q = vertices[(i + 1) % n];
    acc += cross(p, q);
  }
  return 0.5 * acc;
}

bool Polygon::is_simple() const {
  const std::size_t n = vertices.size();
  if (n < 3) return false;
  for (std::size_t i = 0; i < n; ++i) {
    const Segment ei = edge(i);
    if (ei.a == ei.b) return false;  // zero-length edge
    // Adjacent edges may only meet at the shared vertex (no spikes).
    const Segment en = edge((i + 1) % n);
    const Point2 u = ei.b - ei.a;
    const Point2 v = en.b - en.a;
    if (cross(u, v) == 0.0 && dot(u, v) < 0.0) return false;
    for (std::size_t j = i + 2; j < n; ++j) {
      if (i == 0 && j == n - 1) continue;  // adjacent through the wrap-around
      if (segments_intersect(ei, edge(j))) return false;
    }
  }
  return true;
}

bool Polygon::contains(Point2 p) const {
  bool inside = false;
  const std::size_t n = vertices.size();
  for (std::size_t i = 0, j = n - 1; i < n; j = i++) {
    const Point2& vi = vertices[i];
    const Point2& vj = vertices[j];
    if ((vi.y > p.y) != (vj.y > p.y) &&
        p.x < (vj.x - vi.x) * (p.y - vi.y) / (vj.y - vi.y) + vi.x) {
      inside = !inside;
    }
  }
  return inside;
}

double Polygon::boundary_distance(Point2 p) const {
  double best = kInf;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    best = std::min(best, point_segment_distance(p, edge(i)));
  }
  return best;
}

// ---------------------------------------------------------------------------
// Ball

bool contains(const Ball& r, Point2 p, double tol) {
  return distance(p, r.center) <= r.radius + tol;
}

double point_distance(const Ball& r, Point2 p) {
  return std::max(0.0, distance(p, r.center) - r.radius);
}

Point2 project(const Ball& r, Point2 p) {
  const double d = distance(p, r.center);
  if (d <= r.radius) return p;
  return r.center + (p - r.center) * (r.radius / d);
}

// ---------------------------------------------------------------------------
// HalfPlane

namespace {

// Signed distance of p to the boundary line, positive inside the half-plane.
// Returns +inf for the degenerate full-plane case (anchor == toward).
double halfplane_signed(const HalfPlane& r, Point2 p) {
  const Point2 d = r.toward - r.anchor;
  const double len = norm(d);
  if (len == 0.0) return kInf;
  return dot(d, p - r.anchor) / len;
}

}  // namespace

bool contains(const HalfPlane& r, Point2 p, double tol) {
  return halfplane_signed(r, p) >= -tol;
}

double point_distance(const HalfPlane& r, Point2 p) {
  return std::max(0.0, -halfplane_signed(r, p));
}

Point2 project(const HalfPlane& r, Point2 p) {
  const double s = halfplane_signed(r, p);
  if (s >= 0.0) return p;
  const Point2 n = (r.toward - r.anchor) / norm(r.toward - r.anchor);
  return p - n * s;
}

// ---------------------------------------------------------------------------
// SolidCone

namespace {

struct ConeFrame {
  bool point_only = false;  // apex == base: the cone degenerates to {apex}
  Point2 axis;              // unit vector apex -> base
  double sin_half = 0.0;
  double cos_half = 1.0;
};

ConeFrame cone_frame(const SolidCone& r) {
  ConeFrame f;
  const Point2 d = r.base - r.apex;
  const double len = norm(d);
  if (len == 0.0) {
    f.point_only = true;
    return f;
  }
  f.axis = d / len;
  f.sin_half = std::clamp(r.base_clearance / len, 0.0, 1.0);
  f.cos_half = std::sqrt(std::max(0.0, 1.0 - f.sin_half * f.sin_half));
  return f;
}

bool cone_member(const SolidCone& r, Point2 p) {
  const ConeFrame f = cone_frame(r);
  const Point2 w = p - r.apex;
  const double n = norm(w);
  if (f.point_only || n == 0.0) return n == 0.0;
  return dot(f.axis, w) >= n * f.cos_half;
}

}  // namespace

bool contains(const SolidCone& r, Point2 p, double tol) {
  if (cone_member(r, p)) return true;
  return tol > 0.0 && point_distance(r, p) <= tol;
}

Point2 project(const SolidCone& r, Point2 p) {
  const ConeFrame f = cone_frame(r);
  if (f.point_only) return r.apex;
  if (cone_member(r, p)) return p;
  const Point2 w = p - r.apex;
  // The boundary consists of the two edge rays from the apex.
  const Point2 e1 = rotated(f.axis, std::asin(f.sin_half));
  const Point2 e2 = rotated(f.axis, -std::asin(f.sin_half));
  const Point2 c1 = r.apex + e1 * std::max(0.0, dot(e1, w));
  const Point2 c2 = r.apex + e2 * std::max(0.0, dot(e2, w));
  return distance(p, c1) <= distance(p, c2) ? c1 : c2;
}

double point_distance(const SolidCone& r, Point2 p) {
  if (cone_member(r, p)) return 0.0;
  return distance(p, project(r, p));
}

// ---------------------------------------------------------------------------
// IceCreamCone

namespace {

struct IceCreamFrame {
  bool ball_only = false;  // apex inside/on the base ball: hull == ball
  Point2 tangent_plus;
  Point2 tangent_minus;
};

IceCreamFrame ice_cream_frame(const IceCreamCone& r) {
  IceCreamFrame f;
  const Point2 d = r.base - r.apex;
  const double len = norm(d);
  if (len <= r.base_radius) {
    f.ball_only = true;
    return f;
  }
  const Point2 u = d / len;
  const double sin_b = std::clamp(r.base_radius / len, 0.0, 1.0);
  const double beta = std::asin(sin_b);
  const double tangent_len = std::sqrt(std::max(0.0, len * len - r.base_radius * r.base_radius));
  f.tangent_plus = r.apex + rotated(u, beta) * tangent_len;
  f.tangent_minus = r.apex + rotated(u, -beta) * tangent_len;
  return f;
}

bool ice_cream_member(const IceCreamCone& r, Point2 p) {
  if (distance(p, r.base) <= r.base_radius) return true;
  const IceCreamFrame f = ice_cream_frame(r);
  if (f.ball_only) return false;
  return Triangle{r.apex, f.tangent_plus, f.tangent_minus}.contains(p);
}

}  // namespace

bool contains(const IceCreamCone& r, Point2 p, double tol) {
  if (ice_cream_member(r, p)) return true;
  return tol > 0.0 && point_distance(r, p) <= tol;
}

Point2 project(const IceCreamCone& r, Point2 p) {
  const IceCreamFrame f = ice_cream_frame(r);
  const Ball base_ball{r.base, r.base_radius};
  if (f.ball_only) return project(base_ball, p);
  if (ice_cream_member(r, p)) return p;
  // Closest of: the base ball and the two tangent edges from the apex.
  Point2 best = project(base_ball, p);
  double best_d = distance(p, best);
  for (const Segment& e :
       {Segment{r.apex, f.tangent_plus}, Segment{r.apex, f.tangent_minus}}) {
    const Point2 q = closest_point_on_segment(e, p);
    const double d = distance(p, q);
    if (d < best_d) {
      best_d = d;
      best = q;
    }
  }
  return best;
}

double point_distance(const IceCreamCone& r, Point2 p) {
  if (ice_cream_member(r, p)) return 0.0;
  return distance(p, project(r, p));
}

// ---------------------------------------------------------------------------
// TruncatedIceCreamCone

Triangle TruncatedIceCreamCone::triangle() const {
  const Point2 o{std::cos(heading), std::sin(heading)};
  const Point2 delta = base - apex;
  const Point2 foot = apex + o * dot(o, delta);
  return {apex, base, foot};
}

Ball TruncatedIceCreamCone::cap() const {
  const Point2 o{std::cos(heading), std::sin(heading)};
  return {base, std::abs(cross(o, base - apex))};
}

bool contains(const TruncatedIceCreamCone& r, Point2 p, double tol) {
  if (contains(r.cap(), p, tol)) return true;
  const Triangle t = r.triangle();
  if (t.contains(p)) return true;
  return tol > 0.0 && t.distance(p) <= tol;
}

double point_distance(const TruncatedIceCreamCone& r, Point2 p) {
  return std::min(r.triangle().distance(p), point_distance(r.cap(), p));
}

// ---------------------------------------------------------------------------
// PaddedPolyline

namespace {

double polyline_core_distance(const PaddedPolyline& r, Point2 p) {
  if (r.points.empty()) return kInf;
  if (r.points.size() == 1) return distance(p, r.points.front());
  double best = kInf;
  for (std::size_t i = 0; i + 1 < r.points.size(); ++i) {
    best = std::min(best, point_segment_distance(p, {r.points[i], r.points[i + 1]}));
  }
  return best;
}

}  // namespace

bool contains(const PaddedPolyline& r, Point2 p, double tol) {
  return polyline_core_distance(r, p) <= r.pad + tol;
}

double point_distance(const PaddedPolyline& r, Point2 p) {
  return std::max(0.0, polyline_core_distance(r, p) - r.pad);
}

// ---------------------------------------------------------------------------
// BallConeIntersection (Dykstra alternating projection)

bool contains(const BallConeIntersection& r, Point2 p, double tol) {
  if (contains(r.ball, p, 0.0) && cone_member(r.cone, p)) return true;
  return tol > 0.0 && point_distance(r, p) <= tol;
}

Point2 project(const BallConeIntersection& r, Point2 p) {
  if (contains(r.ball, p, 0.0) && cone_member(r.cone, p)) return p;
  Point2 z = p;
  Point2 ball_corr{0.0, 0.0};
  Point2 cone_corr{0.0, 0.0};
  for (int it = 0; it < kDykstraMaxIterations; ++it) {
    const Point2 y = project(r.ball, z + ball_corr);
    ball_corr = z + ball_corr - y;
    const Point2 z_next = project(r.cone, y + cone_corr);
    cone_corr = y + cone_corr - z_next;
    const bool settled = distance(z_next, z) < kDykstraTol && distance(y, z_next) < kDykstraTol;
    z = z_next;
    if (settled) break;
  }
  return z;
}

double point_distance(const BallConeIntersection& r, Point2 p) {
  if (contains(r.ball, p, 0.0) && cone_member(r.cone, p)) return 0.0;
  return distance(p, project(r, p));
}

// ---------------------------------------------------------------------------
// Region dispatch

bool contains(const Region& r, Point2 p, double tol) {
  return std::visit([&](const auto& v) { return contains(v, p, tol); }, r);
}

double point_distance(const Region& r, Point2 p) {
  return std::visit([&](const auto& v) { return point_distance(v, p); }, r);
}

Point2 project(const Region& r, Point2 p) {
  return std::visit(
      [&](const auto& v) -> Point2 {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, TruncatedIceCreamCone> ||
                      std::is_same_v<T, PaddedPolyline>) {
          throw std::invalid_argument(
              "project: non-convex region variant; decompose into convex parts");
        } else {
          return project(v, p);
        }
      },
      r);
}

// ---------------------------------------------------------------------------
// Segment-to-region distance

namespace {

// Minimizes a convex point-distance map over the segment parameter.
template <typename DistFn>
SegmentQuery minimize_over_segment(const Segment& s, DistFn&& dist) {
  if (s.a == s.b) {
    return {dist(s.a), 0.0, Point2{}, s.a};
  }
  double lo = 0.0, hi = 1.0;
  for (int it = 0; it < kTernaryMaxIterations && (hi - lo) > kTernaryParamTol; ++it) {
    const double m1 = lo + (hi - lo) / 3.0;
    const double m2 = hi - (hi - lo) / 3.0;
    if (dist(s.point_at(m1)) <= dist(s.point_at(m2))) {
      hi = m2;
    } else {
      lo = m1;
    }
  }
  SegmentQuery best{kInf, 0.0, Point2{}, Point2{}};
  for (const double t : {0.0, 0.5 * (lo + hi), 1.0}) {
    const Point2 q = s.point_at(t);
    const double d = dist(q);
    if (d < best.distance) best = {d, t, Point2{}, q};
  }
  return best;
}

template <typename ConvexPart>
SegmentQuery convex_segment_closest(const ConvexPart& part, const Segment& s) {
  SegmentQuery q = minimize_over_segment(
      s, [&](Point2 p) { return point_distance(part, p); });
  q.region_point = project(part, q.segment_point);
  return q;
}

SegmentQuery triangle_segment_closest(const Triangle& t, const Segment& s) {
  SegmentQuery q =
      minimize_over_segment(s, [&](Point2 p) { return t.distance(p); });
  q.region_point = t.closest_point(q.segment_point);
  return q;
}

SegmentQuery capsule_segment_closest(const Segment& core, double pad, const Segment& s) {
  const SegmentPair pair = closest_segment_pair(core, s);
  SegmentQuery q;
  q.distance = std::max(0.0, pair.distance - pad);
  q.param = pair.param2;
  q.segment_point = pair.point2;
  if (pair.distance > pad) {
    q.region_point = pair.point1 + (pair.point2 - pair.point1) * (pad / pair.distance);
  } else {
    q.region_point = pair.point2;  // the segment point is inside the capsule
  }
  return q;
}

SegmentQuery polyline_segment_closest(const PaddedPolyline& r, const Segment& s) {
  if (r.points.size() == 1) {
    return convex_segment_closest(Ball{r.points.front(), r.pad}, s);
  }
  SegmentQuery best{kInf, 0.0, Point2{}, Point2{}};
  for (std::size_t i = 0; i + 1 < r.points.size(); ++i) {
    const SegmentQuery q =
        capsule_segment_closest({r.points[i], r.points[i + 1]}, r.pad, s);
    if (q.distance < best.distance) best = q;
    if (best.distance == 0.0) break;
  }
  return best;
}

}  // namespace

SegmentQuery segment_closest(const Region& r, const Segment& s) {
  return std::visit(
      [&](const auto& v) -> SegmentQuery {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, TruncatedIceCreamCone>) {
          const SegmentQuery qt = triangle_segment_closest(v.triangle(), s);
          const SegmentQuery qb = convex_segment_closest(v.cap(), s);
          return qt.distance <= qb.distance ? qt : qb;
        } else if constexpr (std::is_same_v<T, PaddedPolyline>) {
          return polyline_segment_closest(v, s);
        } else {
          return convex_segment_closest(v, s);
        }
      },
      r);
}

SegmentQuery segment_closest(const BallConeIntersection& r, const Segment& s) {
  return convex_segment_closest(r, s);
}

double segment_distance(const Region& r, const Segment& s) {
  return segment_closest(r, s).distance;
}

double segment_distance(const BallConeIntersection& r, const Segment& s) {
  return segment_closest(r, s).distance;
}

// ---------------------------------------------------------------------------
// Polyline simplification

namespace {

void douglas_peucker(const std::vector<Point2>& pts, std::size_t lo, std::size_t hi,
                     double tolerance, std::vector<bool>& keep) {
  if (hi <= lo + 1) return;
  const Segment chord{pts[lo], pts[hi]};
  double worst = -1.0;
  std::size_t worst_i = lo;
  for (std::size_t i = lo + 1; i < hi; ++i) {
    const double d = point_segment_distance(pts[i], chord);
    if (d > worst) {
      worst = d;
      worst_i = i;
    }
  }
  if (worst > tolerance) {
    keep[worst_i] = true;
    douglas_peucker(pts, lo, worst_i, tolerance, keep);
    douglas_peucker(pts, worst_i, hi, tolerance, keep);
  }
}

}  // namespace

PaddedPolyline simplify_padded_polyline(const PaddedPolyline& r, double tolerance) {
  if (tolerance <= 0.0 || r.points.size() <= 2) return r;
  std::vector<bool> keep(r.points.size(), false);
  keep.front() = keep.back() = true;
  douglas_peucker(r.points, 0, r.points.size() - 1, tolerance, keep);
  PaddedPolyline out;
  out.pad = r.pad + tolerance;
  for (std::size_t i = 0; i < r.points.size(); ++i) {
    if (keep[i]) out.points.push_back(r.points[i]);
  }
  return out;
}

}  // namespace uninav
