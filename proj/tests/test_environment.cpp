#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "support/oracles.hpp"
#include "uninav/environment.hpp"
#include "uninav/errors.hpp"

using namespace uninav;
namespace oracle = uninav::testing;

namespace {

Environment square_env(double robot_radius = 0.5) {
  Environment env;
  env.workspace.vertices = {{0, 0}, {10, 0}, {10, 10}, {0, 10}};
  env.robot_radius = robot_radius;
  return env;
}

Environment square_env_with_block() {
  Environment env = square_env();
  env.obstacles.push_back(Polygon{{{4, 4}, {6, 4}, {6, 6}, {4, 6}}});
  return env;
}

// Dense sampling of every boundary edge.
double sampled_boundary_distance(const Environment& env, Point2 p, int per_edge) {
  double best = std::numeric_limits<double>::infinity();
  for (const Segment& seg : env.boundary_segments()) {
    for (int i = 0; i <= per_edge; ++i) {
      const double t = static_cast<double>(i) / per_edge;
      best = std::min(best, distance(p, seg.point_at(t)));
    }
  }
  return std::max(0.0, best - env.robot_radius);
}

double uniform(std::mt19937& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

}  // namespace

TEST_CASE("free space membership") {
  const Environment env = square_env();
  CHECK(in_free_space(env, {5, 5}));
  CHECK_FALSE(in_free_space(env, {0.4, 5}));
  CHECK_FALSE(in_free_space(env, {0.5, 5}));  // exactly on the eroded boundary
  CHECK(in_free_space(env, {0.51, 5}));
  CHECK_FALSE(in_free_space(env, {-1, 5}));

  const Environment blocked = square_env_with_block();
  CHECK(in_free_space(blocked, {3.4, 5}));  // 0.6 m from the block, 0.6 > 0.5
  CHECK_FALSE(in_free_space(blocked, {3.6, 5}));
  CHECK_FALSE(in_free_space(blocked, {5, 5}));  // inside the block
}

TEST_CASE("boundary distance") {
  const Environment env = square_env();
  CHECK(boundary_distance(env, {5, 5}) == doctest::Approx(4.5));
  CHECK(boundary_distance(env, {1, 1}) == doctest::Approx(0.5));
  CHECK(boundary_distance(env, {0.4, 5}) == 0.0);  // not in free space

  const Environment blocked = square_env_with_block();
  std::mt19937 rng(2029);
  int checked = 0;
  while (checked < 50) {
    const Point2 p{uniform(rng, 0.0, 10.0), uniform(rng, 0.0, 10.0)};
    if (!in_free_space(blocked, p)) continue;
    ++checked;
    CHECK(boundary_distance(blocked, p) ==
          doctest::Approx(sampled_boundary_distance(blocked, p, 2500)).epsilon(1e-4));
  }
}

TEST_CASE("region clearance worked examples") {
  const Environment env = square_env();
  {
    const ClearanceReport rep = region_clearance(env, Region{Ball{{5, 5}, 1.0}}, {5, 5});
    CHECK(rep.sigma == doctest::Approx(3.5).epsilon(1e-9));
    CHECK(distance(rep.witness_region_point, rep.witness_boundary_point) ==
          doctest::Approx(rep.sigma).epsilon(1e-6));
  }
  {
    // Robot position outside the free space forces sigma to zero.
    const ClearanceReport rep =
        region_clearance(env, Region{Ball{{5, 5}, 1.0}}, {0.2, 5});
    CHECK(rep.sigma == 0.0);
  }
  {
    // Region touching the eroded boundary exactly clamps at zero.
    const ClearanceReport rep =
        region_clearance(env, Region{Ball{{5, 5}, 4.5}}, {5, 5});
    CHECK(rep.sigma == doctest::Approx(0.0).epsilon(1e-9));
  }
  {
    // Region crossing the boundary clamps at zero as well.
    const ClearanceReport rep =
        region_clearance(env, Region{Ball{{5, 5}, 6.0}}, {5, 5});
    CHECK(rep.sigma == 0.0);
  }
}

TEST_CASE("clearance witnesses realize sigma") {
  const Environment env = square_env_with_block();
  std::mt19937 rng(4096);
  int checked = 0;
  while (checked < 60) {
    const Point2 pos{uniform(rng, 0.0, 10.0), uniform(rng, 0.0, 10.0)};
    if (!in_free_space(env, pos)) continue;
    const Point2 goal{uniform(rng, 0.0, 10.0), uniform(rng, 0.0, 10.0)};
    const Region region{Ball{goal, uniform(rng, 0.0, 2.0)}};
    const ClearanceReport rep = region_clearance(env, region, pos);
    if (rep.sigma > 0.0) {
      ++checked;
      CHECK(distance(rep.witness_region_point, rep.witness_boundary_point) ==
            doctest::Approx(rep.sigma).epsilon(1e-6));
      CHECK(contains(region, rep.witness_region_point, 1e-6));
    }
  }
}

TEST_CASE("clearance is monotone under region inclusion") {
  const Environment env = square_env_with_block();
  std::mt19937 rng(58);
  for (int i = 0; i < 100; ++i) {
    const Point2 pos{1.5, 1.5};
    const Point2 c{uniform(rng, 1.0, 9.0), uniform(rng, 1.0, 9.0)};
    const double r1 = uniform(rng, 0.0, 2.0);
    const double r2 = r1 + uniform(rng, 0.0, 2.0);
    const double s1 = region_clearance(env, Region{Ball{c, r1}}, pos).sigma;
    const double s2 = region_clearance(env, Region{Ball{c, r2}}, pos).sigma;
    CHECK(s1 >= s2 - 1e-9);
  }
}

TEST_CASE("environment validation names the broken rule") {
  {
    Environment env = square_env(0.0);
    CHECK_THROWS_WITH_AS(env.validate(), "robot_radius must be positive",
                         ValidationError);
  }
  {
    Environment env = square_env();
    env.workspace.vertices = {{0, 0}, {10, 0}};
    CHECK_THROWS_AS(env.validate(), ValidationError);
  }
  {
    Environment env = square_env();
    std::reverse(env.workspace.vertices.begin(), env.workspace.vertices.end());
    CHECK_THROWS_WITH_AS(env.validate(), "workspace polygon must be counter-clockwise",
                         ValidationError);
  }
  {
    Environment env = square_env();
    env.workspace.vertices = {{0, 0}, {2, 2}, {2, 0}, {0, 2}};  // bowtie
    CHECK_THROWS_AS(env.validate(), ValidationError);
  }
  {
    Environment env = square_env();
    env.obstacles.push_back(Polygon{{{11, 11}, {12, 11}, {12, 12}, {11, 12}}});
    CHECK_THROWS_AS(env.validate(), ValidationError);
  }
  {
    // Gap of 0.8 between obstacles is narrower than 2 rho = 1.
    Environment env = square_env();
    env.obstacles.push_back(Polygon{{{2, 2}, {4, 2}, {4, 4}, {2, 4}}});
    env.obstacles.push_back(Polygon{{{4.8, 2}, {6.8, 2}, {6.8, 4}, {4.8, 4}}});
    CHECK_THROWS_AS(env.validate(), ValidationError);
  }
  {
    // Touching features are allowed (they merge into one wall).
    Environment env = square_env();
    env.obstacles.push_back(Polygon{{{0, 2}, {4, 2}, {4, 4}, {0, 4}}});
    CHECK_NOTHROW(env.validate());
  }
  {
    const Environment env = square_env_with_block();
    CHECK_NOTHROW(env.validate());
  }
}
