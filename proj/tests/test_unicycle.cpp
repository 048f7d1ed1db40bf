#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "uninav/unicycle.hpp"

using namespace uninav;

namespace {

std::mt19937 make_rng(unsigned seed) { return std::mt19937{seed}; }

double uniform(std::mt19937& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

Pose random_pose(std::mt19937& rng, double span = 5.0) {
  return {{uniform(rng, -span, span), uniform(rng, -span, span)},
          uniform(rng, -M_PI, M_PI)};
}

}  // namespace

TEST_CASE("wrap_angle maps into [-pi, pi)") {
  CHECK(wrap_angle(0.0) == 0.0);
  CHECK(wrap_angle(M_PI) == doctest::Approx(-M_PI));
  CHECK(wrap_angle(-M_PI) == doctest::Approx(-M_PI));
  CHECK(wrap_angle(3.0 * M_PI) == doctest::Approx(-M_PI));
  CHECK(wrap_angle(2.5 * M_PI) == doctest::Approx(0.5 * M_PI));
  auto rng = make_rng(7);
  for (int i = 0; i < 1000; ++i) {
    const double a = uniform(rng, -50.0, 50.0);
    const double w = wrap_angle(a);
    CHECK(w >= -M_PI);
    CHECK(w < M_PI);
    CHECK(std::abs(std::remainder(a - w, 2.0 * M_PI)) < 1e-9);
  }
}

TEST_CASE("forward control worked examples") {
  const ControlGains gains{1.0, 1.5};
  {
    const ControlInput u = forward_control({{0, 0}, 0.0}, {1, 0}, gains);
    CHECK(u.v == doctest::Approx(1.0));
    CHECK(u.omega == doctest::Approx(0.0));
  }
  {
    const ControlInput u = forward_control({{0, 0}, 0.0}, {0, 1}, gains);
    CHECK(u.v == 0.0);
    CHECK(u.omega == doctest::Approx(1.5 * M_PI / 2.0));
  }
  {
    const ControlInput u = forward_control({{0, 0}, M_PI / 2.0}, {1, 0}, gains);
    CHECK(u.v == doctest::Approx(0.0));
    CHECK(u.omega == doctest::Approx(-1.5 * M_PI / 2.0));
  }
  // Exactly at the goal the control is identically zero.
  {
    const ControlInput u = forward_control({{2, 3}, 0.7}, {2, 3}, gains);
    CHECK(u.v == 0.0);
    CHECK(u.omega == 0.0);
  }
}

TEST_CASE("forward speed is never negative") {
  auto rng = make_rng(21);
  const ControlGains gains{1.0, 1.5};
  for (int i = 0; i < 2000; ++i) {
    const Point2 goal{uniform(rng, -5.0, 5.0), uniform(rng, -5.0, 5.0)};
    const ControlInput u = forward_control(random_pose(rng), goal, gains);
    CHECK(u.v >= 0.0);
  }
}

TEST_CASE("dynamics worked examples") {
  {
    const PoseRate r = dynamics({{0, 0}, 0.0}, {1.0, 0.0});
    CHECK(r.dx == doctest::Approx(1.0));
    CHECK(r.dy == doctest::Approx(0.0));
    CHECK(r.dtheta == 0.0);
  }
  {
    const PoseRate r = dynamics({{0, 0}, M_PI / 2.0}, {2.0, 0.3});
    CHECK(r.dx == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(r.dy == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(r.dtheta == doctest::Approx(0.3));
  }
  {
    const PoseRate r = dynamics({{4, -2}, 1.1}, {0.0, 0.0});
    CHECK(r.dx == 0.0);
    CHECK(r.dy == 0.0);
    CHECK(r.dtheta == 0.0);
  }
}

TEST_CASE("alignment quantities") {
  CHECK(perpendicular_alignment_distance({{0, 0}, 0.0}, {4, 3}) == doctest::Approx(3.0));
  CHECK(perpendicular_alignment_distance({{0, 0}, 0.0}, {5, 0}) == doctest::Approx(0.0));
  CHECK(goal_alignment({{0, 0}, 0.0}, {2, 0}) == doctest::Approx(2.0));
  CHECK(goal_alignment({{0, 0}, M_PI / 2.0}, {2, 0}) == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(goal_alignment({{1, 1}, 0.0}, {0, 1}) == doctest::Approx(-1.0));

  // |n^T (g-x)| = |g-x| |sin(alignment error)|
  auto rng = make_rng(31);
  for (int i = 0; i < 500; ++i) {
    const Pose pose = random_pose(rng);
    const Point2 goal{uniform(rng, -5.0, 5.0), uniform(rng, -5.0, 5.0)};
    if (goal == pose.position) continue;
    const Point2 delta = goal - pose.position;
    const double err = std::atan2(dot(heading_normal(pose.heading), delta),
                                  dot(heading_vector(pose.heading), delta));
    CHECK(perpendicular_alignment_distance(pose, goal) ==
          doctest::Approx(norm(delta) * std::abs(std::sin(err))).epsilon(1e-12));
  }
}

TEST_CASE("closed-loop trajectories satisfy the stability properties") {
  auto rng = make_rng(101);
  const ControlGains gains{1.0, 1.5};
  const double dt = 0.01;
  for (int i = 0; i < 25; ++i) {
    const Pose start = random_pose(rng);
    const Point2 goal{uniform(rng, -5.0, 5.0), uniform(rng, -5.0, 5.0)};
    if (distance(start.position, goal) < 1e-6) continue;
    const ClosedLoopTrace trace = simulate_to_goal(start, goal, gains, dt, 60.0, 1e-2);

    // Convergence within the horizon.
    CHECK(trace.converged);
    CHECK(distance(trace.poses.back().position, goal) < 1e-2);

    // Distance to the goal is nonincreasing step to step.
    double prev_dist = distance(trace.poses.front().position, goal);
    bool aligned_seen = false;
    double prev_dy = 0.0;
    for (std::size_t k = 0; k < trace.poses.size(); ++k) {
      const Pose& p = trace.poses[k];
      const double d = distance(p.position, goal);
      CHECK(d <= prev_dist + 1e-8);
      prev_dist = d;

      const double align = goal_alignment(p, goal);
      const double dy = perpendicular_alignment_distance(p, goal);
      if (aligned_seen) {
        // Alignment persists and the perpendicular distance keeps shrinking.
        CHECK(align >= -1e-8);
        CHECK(dy <= prev_dy + 1e-8);
      }
      if (align >= 0.0) {
        aligned_seen = true;
        prev_dy = dy;
      }

      // Forward-only contract.
      const ControlInput u = forward_control(p, goal, gains);
      CHECK(u.v >= 0.0);
    }

    // Finite-time alignment: pointing at the goal by t = 1/k_omega.
    const std::size_t idx =
        static_cast<std::size_t>(std::llround(1.0 / (gains.k_omega * dt)));
    if (idx < trace.poses.size()) {
      CHECK(goal_alignment(trace.poses[idx], goal) > 0.0);
    }
  }
}

TEST_CASE("trajectory from the goal position stays put") {
  const ClosedLoopTrace trace =
      simulate_to_goal({{1, 2}, 0.3}, {1, 2}, ControlGains{}, 0.01, 10.0);
  CHECK(trace.converged);
  CHECK(trace.poses.size() == 1);
}
