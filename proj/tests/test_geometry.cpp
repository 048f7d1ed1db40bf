#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "support/oracles.hpp"
#include "uninav/geometry.hpp"

using namespace uninav;
namespace oracle = uninav::testing;

namespace {

std::mt19937 make_rng(unsigned seed) { return std::mt19937{seed}; }

double uniform(std::mt19937& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

Point2 random_point(std::mt19937& rng, double span = 8.0) {
  return {uniform(rng, -span, span), uniform(rng, -span, span)};
}

// Random instances of each convex variant, scaled like the navigation scenes.
Ball random_ball(std::mt19937& rng) {
  return {random_point(rng), uniform(rng, 0.0, 5.0)};
}

SolidCone random_cone(std::mt19937& rng) {
  const Point2 apex = random_point(rng);
  Point2 base = random_point(rng);
  if (base == apex) base.x += 1.0;
  return {apex, base, uniform(rng, 0.0, 1.0) * distance(apex, base)};
}

IceCreamCone random_ice_cream(std::mt19937& rng) {
  const Point2 apex = random_point(rng);
  Point2 base = random_point(rng);
  if (base == apex) base.x += 1.0;
  return {apex, base, uniform(rng, 0.0, 1.0) * distance(apex, base)};
}

TruncatedIceCreamCone random_truncated(std::mt19937& rng) {
  return {random_point(rng), random_point(rng), uniform(rng, -M_PI, M_PI)};
}

PaddedPolyline random_polyline(std::mt19937& rng) {
  PaddedPolyline pl;
  const int n = 2 + static_cast<int>(uniform(rng, 0.0, 4.0));
  Point2 p = random_point(rng);
  for (int i = 0; i < n; ++i) {
    pl.points.push_back(p);
    p = p + Point2{uniform(rng, -2.0, 2.0), uniform(rng, -2.0, 2.0)};
  }
  pl.pad = uniform(rng, 0.0, 0.8);
  return pl;
}

}  // namespace

TEST_CASE("segment primitives") {
  const Segment s{{0, 0}, {4, 0}};
  CHECK(point_segment_distance({2, 3}, s) == doctest::Approx(3.0));
  CHECK(point_segment_distance({-3, 4}, s) == doctest::Approx(5.0));
  CHECK(closest_point_on_segment(s, {5, 1}) == Point2{4, 0});
  CHECK(segment_segment_distance({{0, 0}, {1, 1}}, {{1, 0}, {0, 1}}) == 0.0);
  CHECK(segment_segment_distance({{0, 0}, {1, 0}}, {{0, 2}, {1, 2}}) ==
        doctest::Approx(2.0));
}

TEST_CASE("polygon basics") {
  const Polygon square{{{0, 0}, {10, 0}, {10, 10}, {0, 10}}};
  CHECK(square.signed_area() == doctest::Approx(100.0));
  CHECK(square.is_ccw());
  CHECK(square.is_simple());
  CHECK(square.contains({5, 5}));
  CHECK_FALSE(square.contains({-1, 5}));
  CHECK(square.boundary_distance({5, 5}) == doctest::Approx(5.0));
  CHECK(square.boundary_distance({12, 5}) == doctest::Approx(2.0));

  const Polygon bowtie{{{0, 0}, {2, 2}, {2, 0}, {0, 2}}};
  CHECK_FALSE(bowtie.is_simple());

  Polygon cw = square;
  std::reverse(cw.vertices.begin(), cw.vertices.end());
  CHECK_FALSE(cw.is_ccw());
}

TEST_CASE("ball queries") {
  const Ball b{{0, 0}, 1.0};
  CHECK(contains(b, {0, 0}, 0.0));
  CHECK(project(b, {2, 0}) == Point2{1, 0});
  CHECK(point_distance(Ball{{5, 5}, 1.0}, {0, 5}) == doctest::Approx(4.0));
  CHECK(point_distance(b, {0.25, 0.25}) == 0.0);
}

TEST_CASE("half-plane queries") {
  const HalfPlane h{{0, 0}, {1, 0}};
  const Point2 q = project(h, {-2, 3});
  CHECK(q.x == doctest::Approx(0.0));
  CHECK(q.y == doctest::Approx(3.0));
  CHECK(contains(h, {5, -7}, 0.0));
  CHECK_FALSE(contains(h, {-0.1, 0}, 1e-9));
  CHECK(point_distance(h, {-2, 3}) == doctest::Approx(2.0));

  // anchor == toward degenerates to the full plane
  const HalfPlane full{{1, 1}, {1, 1}};
  CHECK(contains(full, {-100, 40}, 0.0));
  CHECK(point_distance(full, {-100, 40}) == 0.0);
}

TEST_CASE("solid cone queries") {
  const SolidCone c{{0, 0}, {2, 0}, 1.0};
  CHECK(point_distance(c, {-1, 0}) == doctest::Approx(1.0));
  CHECK(point_distance(c, {-1, 0}) ==
        doctest::Approx(oracle::oracle_point_distance(Region{c}, {-1, 0})).epsilon(1e-6));
  CHECK(contains(c, {2, 0}, 0.0));
  CHECK(contains(c, {2, 1}, 0.0));       // on the edge ray
  CHECK(contains(c, {40, 19.9}, 0.0));   // unbounded far out
  CHECK_FALSE(contains(c, {1, 2}, 1e-9));

  // base_clearance == |base-apex| is the half-plane limit
  const SolidCone half{{0, 0}, {2, 0}, 2.0};
  CHECK(contains(half, {0, 37}, 0.0));
  CHECK_FALSE(contains(half, {-0.5, 37}, 1e-6));

  // apex == base collapses to a point
  const SolidCone pt{{1, 1}, {1, 1}, 0.0};
  CHECK(contains(pt, {1, 1}, 0.0));
  CHECK(point_distance(pt, {2, 1}) == doctest::Approx(1.0));
}

TEST_CASE("ice cream cone queries") {
  const IceCreamCone ic{{0, 0}, {4, 3}, 3.0};
  CHECK(contains(ic, {4, 3}, 0.0));  // base point always inside
  CHECK_FALSE(contains(ic, {-1, 0}, 1e-6));
  // Oracle confirms the point is strictly outside.
  CHECK(oracle::oracle_point_distance(Region{ic}, {-1, 0}) > 1e-3);

  // Projection onto the lower tangent edge, cross-checked by brute force.
  const IceCreamCone ic2{{0, 0}, {4, 0}, 2.0};
  const Point2 p{0, -3};
  const Point2 proj = project(ic2, p);
  CHECK(contains(ic2, proj, 1e-9));
  CHECK(distance(p, proj) ==
        doctest::Approx(oracle::oracle_point_distance(Region{ic2}, p)).epsilon(1e-6));
  CHECK(proj.y < 0.0);  // lands on the lower edge
  CHECK(proj.x > 0.0);

  // apex on the base circle collapses the hull to the ball
  const IceCreamCone deg{{4, 0}, {0, 0}, 4.0};
  CHECK(contains(deg, {-3.9, 0}, 0.0));
  CHECK(point_distance(deg, {0, 5}) == doctest::Approx(1.0));
}

TEST_CASE("truncated ice cream cone queries") {
  const TruncatedIceCreamCone tc{{0, 0}, {4, 3}, 0.0};
  const Triangle t = tc.triangle();
  CHECK(t.a == Point2{0, 0});
  CHECK(t.b == Point2{4, 3});
  CHECK(t.c.x == doctest::Approx(4.0));
  CHECK(t.c.y == doctest::Approx(0.0));
  CHECK(tc.cap().radius == doctest::Approx(3.0));
  CHECK(point_distance(tc, {4, 3}) == 0.0);  // base point inside
  CHECK(contains(tc, {2, 0.1}, 0.0));        // in the triangle
  CHECK_FALSE(contains(tc, {0, 3}, 1e-6));

  // Aligned-on-axis: degenerate triangle plus zero-radius cap is the segment.
  const TruncatedIceCreamCone seg{{0, 0}, {5, 0}, 0.0};
  CHECK(point_distance(seg, {2.5, 0.0}) == doctest::Approx(0.0));
  CHECK(point_distance(seg, {2.5, 1.0}) == doctest::Approx(1.0));
  CHECK(point_distance(seg, {6.0, 0.0}) == doctest::Approx(1.0));
}

TEST_CASE("project rejects non-convex variants") {
  CHECK_THROWS_AS((void)project(Region{TruncatedIceCreamCone{{0, 0}, {4, 3}, 0.0}}, {1, 1}),
                  std::invalid_argument);
  CHECK_THROWS_AS((void)project(Region{PaddedPolyline{{{0, 0}, {1, 0}}, 0.1}}, {1, 1}),
                  std::invalid_argument);
}

TEST_CASE("segment distance examples") {
  CHECK(segment_distance(Region{Ball{{0, 0}, 1.0}}, {{3, -5}, {3, 5}}) ==
        doctest::Approx(2.0).epsilon(1e-9));
  CHECK(segment_distance(Region{Ball{{0, 0}, 1.0}}, {{0.5, 0}, {0.6, 0}}) == 0.0);

  const Region ic{IceCreamCone{{0, 0}, {4, 0}, 2.0}};
  const Segment s{{0, 3}, {8, 3}};
  CHECK(segment_distance(ic, s) ==
        doctest::Approx(oracle::oracle_segment_distance(ic, s, 100000)).epsilon(1e-6));
}

TEST_CASE("point distance matches the generator oracle") {
  auto rng = make_rng(20240811);
  for (int i = 0; i < 300; ++i) {
    const Region regions[] = {
        Region{random_ball(rng)},  Region{HalfPlane{random_point(rng), random_point(rng)}},
        Region{random_cone(rng)},  Region{random_ice_cream(rng)},
        Region{random_truncated(rng)}, Region{random_polyline(rng)},
    };
    for (const Region& r : regions) {
      const Point2 p = random_point(rng, 12.0);
      const double got = point_distance(r, p);
      const double want = oracle::oracle_point_distance(r, p);
      CHECK(got == doctest::Approx(want).epsilon(1e-9).scale(1.0));
      if (got == 0.0) CHECK(contains(r, p, 1e-9));
      if (contains(r, p, 0.0)) CHECK(point_distance(r, p) == 0.0);
      const bool member_oracle = oracle::oracle_member(r, p, 1e-9);
      const bool member_impl = contains(r, p, 1e-9);
      if (member_oracle != member_impl) {
        // Only legitimate inside the tolerance band around the boundary.
        CHECK(std::abs(want) <= 2e-9);
      }
    }
  }
}

TEST_CASE("projection properties on convex variants") {
  auto rng = make_rng(77);
  for (int i = 0; i < 300; ++i) {
    const Region regions[] = {
        Region{random_ball(rng)},
        Region{HalfPlane{random_point(rng), random_point(rng)}},
        Region{random_cone(rng)},
        Region{random_ice_cream(rng)},
    };
    for (const Region& r : regions) {
      const Point2 p = random_point(rng, 12.0);
      const Point2 q = project(r, p);
      CHECK(contains(r, q, 1e-9));
      const Point2 q2 = project(r, q);
      CHECK(distance(q, q2) <= 1e-9);
      CHECK(distance(p, q) == doctest::Approx(point_distance(r, p)).epsilon(1e-12));
    }
  }
}

TEST_CASE("segment distance is bounded by endpoint and midpoint distances") {
  auto rng = make_rng(4242);
  for (int i = 0; i < 200; ++i) {
    const Region regions[] = {
        Region{random_ball(rng)},      Region{random_cone(rng)},
        Region{random_ice_cream(rng)}, Region{random_truncated(rng)},
        Region{random_polyline(rng)},
    };
    for (const Region& r : regions) {
      const Segment s{random_point(rng, 12.0), random_point(rng, 12.0)};
      const double d = segment_distance(r, s);
      CHECK(d <= point_distance(r, s.a) + 1e-9);
      CHECK(d <= point_distance(r, s.b) + 1e-9);
      CHECK(d <= point_distance(r, s.point_at(0.5)) + 1e-9);
    }
  }
}

TEST_CASE("segment distance matches dense sampling") {
  auto rng = make_rng(99);
  for (int i = 0; i < 40; ++i) {
    const Region regions[] = {
        Region{random_ball(rng)},      Region{random_cone(rng)},
        Region{random_ice_cream(rng)}, Region{random_truncated(rng)},
        Region{random_polyline(rng)},
    };
    for (const Region& r : regions) {
      const Segment s{random_point(rng, 12.0), random_point(rng, 12.0)};
      const double got = segment_distance(r, s);
      const double want = oracle::oracle_segment_distance(r, s, 20000);
      CHECK(got <= want + 1e-9);     // sampling can only overestimate
      CHECK(got >= want - 1e-4);
    }
  }
}

TEST_CASE("ball-cone intersection via Dykstra") {
  auto rng = make_rng(1337);
  for (int i = 0; i < 120; ++i) {
    // Shaped like bounded-cone predictions: apex on the ball boundary.
    const Point2 apex = random_point(rng);
    Point2 goal = random_point(rng);
    if (goal == apex) goal.x += 1.0;
    const double radius = distance(goal, apex);
    const BallConeIntersection bci{
        Ball{goal, radius},
        SolidCone{apex, goal, uniform(rng, 0.0, 1.0) * radius}};

    const Point2 p = random_point(rng, 12.0);
    const Point2 q = project(bci, p);
    CHECK(contains(bci.ball, q, 1e-7));
    CHECK(contains(bci.cone, q, 1e-7));
    CHECK(distance(p, q) == doctest::Approx(point_distance(bci, p)).epsilon(1e-9));

    const double got = point_distance(bci, p);
    const double want = oracle::oracle_point_distance(bci, p, 20000);
    CHECK(got == doctest::Approx(want).epsilon(2e-4).scale(1.0));

    const Segment s{random_point(rng, 12.0), random_point(rng, 12.0)};
    const double seg_got = segment_distance(bci, s);
    const double seg_want = oracle::oracle_segment_distance(bci, s, 5000);
    CHECK(seg_got <= seg_want + 1e-9);
    CHECK(seg_got >= seg_want - 1e-4);
  }
}

TEST_CASE("padded polyline simplification stays conservative") {
  auto rng = make_rng(555);
  for (int i = 0; i < 50; ++i) {
    PaddedPolyline pl;
    pl.pad = uniform(rng, 0.0, 0.3);
    Point2 p{0, 0};
    for (int k = 0; k < 60; ++k) {
      pl.points.push_back(p);
      p = p + Point2{uniform(rng, 0.0, 0.3), uniform(rng, -0.1, 0.1)};
    }
    const PaddedPolyline slim = simplify_padded_polyline(pl, 0.05);
    CHECK(slim.points.size() <= pl.points.size());
    CHECK(slim.pad == doctest::Approx(pl.pad + 0.05));
    for (int k = 0; k < 200; ++k) {
      const std::size_t idx =
          static_cast<std::size_t>(uniform(rng, 0.0, 0.999) * pl.points.size());
      CHECK(contains(slim, pl.points[idx], 1e-9));
    }
  }
}
