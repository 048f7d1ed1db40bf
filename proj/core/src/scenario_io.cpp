#include "uninav/scenario_io.hpp"

#include <set>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "uninav/errors.hpp"

namespace uninav {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw ValidationError("scenario field '" + where + "': " + what);
}

void reject_unknown_keys(const json& obj, const std::string& where,
                         const std::set<std::string>& allowed) {
  for (const auto& item : obj.items()) {
    if (!allowed.count(item.key())) {
      fail(where, "unknown key '" + item.key() + "'");
    }
  }
}

double require_number(const json& obj, const std::string& where, const std::string& key) {
  if (!obj.contains(key)) fail(where, "missing required key '" + key + "'");
  const json& v = obj.at(key);
  if (!v.is_number()) fail(where + "." + key, "expected a number");
  return v.get<double>();
}

double optional_number(const json& obj, const std::string& where, const std::string& key,
                       double fallback) {
  if (!obj.contains(key)) return fallback;
  const json& v = obj.at(key);
  if (!v.is_number()) fail(where + "." + key, "expected a number");
  return v.get<double>();
}

Point2 parse_point(const json& v, const std::string& where) {
  if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number()) {
    fail(where, "expected a [x, y] pair of numbers");
  }
  return {v[0].get<double>(), v[1].get<double>()};
}

std::vector<Point2> parse_point_list(const json& v, const std::string& where) {
  if (!v.is_array()) fail(where, "expected an array of [x, y] pairs");
  std::vector<Point2> pts;
  pts.reserve(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    pts.push_back(parse_point(v[i], where + "[" + std::to_string(i) + "]"));
  }
  return pts;
}

Environment parse_environment(const json& v) {
  if (!v.is_object()) fail("environment", "expected an object");
  reject_unknown_keys(v, "environment", {"workspace", "obstacles", "robot_radius"});
  Environment env;
  if (!v.contains("workspace")) fail("environment", "missing required key 'workspace'");
  env.workspace.vertices = parse_point_list(v.at("workspace"), "environment.workspace");
  if (v.contains("obstacles")) {
    const json& obs = v.at("obstacles");
    if (!obs.is_array()) fail("environment.obstacles", "expected an array of polygons");
    for (std::size_t i = 0; i < obs.size(); ++i) {
      Polygon poly;
      poly.vertices = parse_point_list(
          obs[i], "environment.obstacles[" + std::to_string(i) + "]");
      env.obstacles.push_back(std::move(poly));
    }
  }
  env.robot_radius = require_number(v, "environment", "robot_radius");
  if (!(env.robot_radius > 0.0)) {
    fail("environment.robot_radius", "robot_radius must be positive");
  }
  return env;
}

}  // namespace

PredictorKind predictor_from_token(const std::string& token) {
  if (token == "ball") return PredictorKind::Ball;
  if (token == "bc") return PredictorKind::BoundedCone;
  if (token == "ic") return PredictorKind::IceCream;
  if (token == "tc") return PredictorKind::TruncatedIceCream;
  if (token == "fs") return PredictorKind::ForwardSim;
  throw ValidationError("unknown predictor '" + token +
                        "' (expected ball, bc, ic, tc, or fs)");
}

std::string predictor_token(PredictorKind kind) {
  switch (kind) {
    case PredictorKind::Ball: return "ball";
    case PredictorKind::BoundedCone: return "bc";
    case PredictorKind::IceCream: return "ic";
    case PredictorKind::TruncatedIceCream: return "tc";
    case PredictorKind::ForwardSim: return "fs";
  }
  return "ic";
}

ScenarioFile parse_scenario(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ValidationError(std::string("scenario is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ValidationError("scenario root must be a JSON object");
  reject_unknown_keys(doc, "scenario",
                      {"environment", "gains", "initial_pose", "initial_governor",
                       "path", "predictor", "integrator", "output"});

  ScenarioFile file;
  Scenario& sc = file.scenario;

  if (!doc.contains("environment")) {
    throw ValidationError("scenario field 'environment' is required");
  }
  sc.environment = parse_environment(doc.at("environment"));

  if (doc.contains("gains")) {
    const json& g = doc.at("gains");
    if (!g.is_object()) fail("gains", "expected an object");
    reject_unknown_keys(g, "gains", {"k_v", "k_omega", "k_path", "k_gov"});
    sc.gains.control.k_v = optional_number(g, "gains", "k_v", 1.0);
    sc.gains.control.k_omega = optional_number(g, "gains", "k_omega", 1.5);
    sc.gains.k_path = optional_number(g, "gains", "k_path", 1.0);
    sc.gains.k_gov = optional_number(g, "gains", "k_gov", 4.0);
  }

  if (!doc.contains("path")) throw ValidationError("scenario field 'path' is required");
  sc.path = PathPolyline(parse_point_list(doc.at("path"), "path"));

  if (!doc.contains("initial_pose")) {
    throw ValidationError("scenario field 'initial_pose' is required");
  }
  const json& pose = doc.at("initial_pose");
  if (!pose.is_object()) fail("initial_pose", "expected an object");
  reject_unknown_keys(pose, "initial_pose", {"x", "y", "theta"});
  sc.initial_pose.position.x = require_number(pose, "initial_pose", "x");
  sc.initial_pose.position.y = require_number(pose, "initial_pose", "y");
  sc.initial_pose.heading = wrap_angle(require_number(pose, "initial_pose", "theta"));

  if (doc.contains("initial_governor")) {
    const json& gov = doc.at("initial_governor");
    if (!gov.is_object()) fail("initial_governor", "expected an object");
    reject_unknown_keys(gov, "initial_governor", {"x", "y"});
    sc.initial_governor.x = require_number(gov, "initial_governor", "x");
    sc.initial_governor.y = require_number(gov, "initial_governor", "y");
  } else {
    sc.initial_governor = sc.path.waypoints().front();
  }

  if (doc.contains("predictor")) {
    const json& p = doc.at("predictor");
    if (!p.is_string()) fail("predictor", "expected a string");
    sc.predictor = predictor_from_token(p.get<std::string>());
  }

  if (doc.contains("integrator")) {
    const json& integ = doc.at("integrator");
    if (!integ.is_object()) fail("integrator", "expected an object");
    reject_unknown_keys(integ, "integrator", {"dt", "horizon"});
    sc.dt = optional_number(integ, "integrator", "dt", 0.01);
    sc.horizon = optional_number(integ, "integrator", "horizon", 120.0);
  }
  if (!(sc.dt > 0.0)) fail("integrator.dt", "dt must be positive");
  if (!(sc.horizon > 0.0)) fail("integrator.horizon", "horizon must be positive");

  if (doc.contains("output")) {
    const json& out = doc.at("output");
    if (!out.is_object()) fail("output", "expected an object");
    reject_unknown_keys(out, "output", {"snapshot_period"});
    file.output.snapshot_period = optional_number(out, "output", "snapshot_period", 0.5);
    if (!(file.output.snapshot_period > 0.0)) {
      fail("output.snapshot_period", "snapshot_period must be positive");
    }
  }

  // Load-time semantic checks (free-space rules, initial safety level).
  validate_scenario(sc);
  return file;
}

}  // namespace uninav
