#include <benchmark/benchmark.h>

#include "uninav/environment.hpp"
#include "uninav/navigation.hpp"
#include "uninav/prediction.hpp"

namespace {

using namespace uninav;

Environment make_env() {
  Environment env;
  env.workspace.vertices = {{0, 0}, {12, 0}, {12, 12}, {0, 12}};
  env.obstacles.push_back(Polygon{{{3, 3}, {5, 3}, {5, 5}, {3, 5}}});
  env.obstacles.push_back(Polygon{{{7, 6}, {9, 6}, {9, 9}, {7, 9}}});
  env.robot_radius = 0.4;
  return env;
}

const Pose kPose{{1.5, 1.5}, 0.4};
const Point2 kGoal{4.5, 1.2};

void bm_predict_ice_cream(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(predict_ice_cream(kPose, kGoal));
  }
}
BENCHMARK(bm_predict_ice_cream);

void bm_point_distance_ice_cream(benchmark::State& state) {
  const Region r = predict_ice_cream(kPose, kGoal);
  for (auto _ : state) {
    benchmark::DoNotOptimize(point_distance(r, Point2{6.0, 4.0}));
  }
}
BENCHMARK(bm_point_distance_ice_cream);

void bm_segment_distance_ice_cream(benchmark::State& state) {
  const Region r = predict_ice_cream(kPose, kGoal);
  const Segment s{{0.0, 6.0}, {12.0, 6.0}};
  for (auto _ : state) {
    benchmark::DoNotOptimize(segment_distance(r, s));
  }
}
BENCHMARK(bm_segment_distance_ice_cream);

void bm_region_clearance(benchmark::State& state) {
  const Environment env = make_env();
  const Region r = predict_ice_cream(kPose, kGoal);
  for (auto _ : state) {
    benchmark::DoNotOptimize(region_clearance(env, r, kPose.position));
  }
}
BENCHMARK(bm_region_clearance);

void bm_bounded_cone_clearance(benchmark::State& state) {
  const Environment env = make_env();
  const BoundedConePrediction bc = predict_bounded_cone(kPose, kGoal);
  const BallConeIntersection bci{bc.ball, *bc.cone};
  for (auto _ : state) {
    benchmark::DoNotOptimize(region_clearance(env, bci, kPose.position));
  }
}
BENCHMARK(bm_bounded_cone_clearance);

void bm_forward_sim_safety(benchmark::State& state) {
  const Environment env = make_env();
  const ControlGains gains;
  for (auto _ : state) {
    benchmark::DoNotOptimize(safety_level(env, PredictorKind::ForwardSim, kPose, kGoal,
                                          gains, 0.01, 60.0));
  }
}
BENCHMARK(bm_forward_sim_safety);

void bm_simulate_step(benchmark::State& state) {
  Scenario sc;
  sc.environment = make_env();
  sc.path = PathPolyline({{1.5, 1.5}, {10.5, 1.5}, {10.5, 10.5}});
  sc.initial_pose = kPose;
  sc.initial_governor = {1.5, 1.5};
  const NavState ns{kPose, {2.5, 1.5}, 0.0};
  for (auto _ : state) {
    benchmark::DoNotOptimize(coupled_derivative(ns, sc));
  }
}
BENCHMARK(bm_simulate_step);

}  // namespace

BENCHMARK_MAIN();
