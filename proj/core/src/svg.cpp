#include "uninav/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

namespace uninav {

namespace {

std::string num(double v) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.3f", v);
  return buf;
}

struct SceneFrame {
  double min_x = 0.0, min_y = 0.0, max_x = 1.0, max_y = 1.0;

  // SVG y grows downward; mirror within the workspace band so the viewBox
  // still equals the workspace bounding box.
  double flip(double y) const { return (min_y + max_y) - y; }
  std::string at(Point2 p) const { return num(p.x) + "," + num(flip(p.y)); }
};

void emit_polyline(std::ostringstream& out, const SceneFrame& f,
                   const std::vector<Point2>& pts, const std::string& style) {
  if (pts.empty()) return;
  out << "<polyline fill=\"none\" " << style << " points=\"";
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (i) out << ' ';
    out << f.at(pts[i]);
  }
  out << "\"/>\n";
}

void emit_polygon(std::ostringstream& out, const SceneFrame& f,
                  const std::vector<Point2>& pts, const std::string& style) {
  out << "<polygon " << style << " points=\"";
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (i) out << ' ';
    out << f.at(pts[i]);
  }
  out << "\"/>\n";
}

void emit_circle(std::ostringstream& out, const SceneFrame& f, Point2 c, double r,
                 const std::string& style) {
  out << "<circle cx=\"" << num(c.x) << "\" cy=\"" << num(f.flip(c.y)) << "\" r=\""
      << num(std::max(r, 1e-3)) << "\" " << style << "/>\n";
}

double positive_mod(double a, double m) {
  double r = std::fmod(a, m);
  if (r < 0.0) r += m;
  return r;
}

// Samples the circular arc from angle `from` to `to` that passes through
// `via` (all about center c, radius r).
std::vector<Point2> arc_points(Point2 c, double r, double from, double to, double via,
                               int n = 32) {
  const double two_pi = 2.0 * M_PI;
  const double ccw_total = positive_mod(to - from, two_pi);
  const double ccw_via = positive_mod(via - from, two_pi);
  const double sweep = (ccw_via <= ccw_total) ? ccw_total : ccw_total - two_pi;
  std::vector<Point2> pts;
  pts.reserve(n + 1);
  for (int k = 0; k <= n; ++k) {
    const double a = from + sweep * (static_cast<double>(k) / n);
    pts.push_back(c + Point2{r * std::cos(a), r * std::sin(a)});
  }
  return pts;
}

void emit_region_snapshot(std::ostringstream& out, const SceneFrame& f,
                          const Scenario& sc, const Pose& pose, Point2 governor) {
  const char* color = "#e0b400";
  switch (sc.predictor) {
    case PredictorKind::Ball: color = "#e0b400"; break;
    case PredictorKind::BoundedCone: color = "#e07000"; break;
    case PredictorKind::IceCream: color = "#2a9d2a"; break;
    case PredictorKind::TruncatedIceCream: color = "#cc2a2a"; break;
    case PredictorKind::ForwardSim: color = "#7a4fc2"; break;
  }
  const std::string outline =
      "stroke=\"" + std::string(color) + "\" stroke-width=\"0.04\" fill=\"none\" opacity=\"0.8\"";

  const auto draw_ball = [&](const Ball& b) { emit_circle(out, f, b.center, b.radius, outline); };

  switch (sc.predictor) {
    case PredictorKind::Ball: {
      draw_ball(std::get<Ball>(predict_ball(pose, governor)));
      break;
    }
    case PredictorKind::BoundedCone: {
      const BoundedConePrediction bc = predict_bounded_cone(pose, governor);
      draw_ball(bc.ball);
      if (bc.cone && bc.ball.radius > 0.0) {
        const Point2 axis = bc.cone->base - bc.cone->apex;
        const double len = norm(axis);
        if (len > 0.0) {
          const double beta = std::asin(std::clamp(bc.cone->base_clearance / len, 0.0, 1.0));
          for (const double sign : {1.0, -1.0}) {
            const Point2 e = rotated(axis / len, sign * beta);
            // The apex sits on the ball, so the edge leaves it at t = -2 e.(a-c).
            const double t_exit = -2.0 * dot(e, bc.cone->apex - bc.ball.center);
            if (t_exit > 0.0) {
              emit_polyline(out, f, {bc.cone->apex, bc.cone->apex + e * t_exit}, outline);
            }
          }
        }
      }
      break;
    }
    case PredictorKind::IceCream: {
      const Region r = predict_ice_cream(pose, governor);
      if (const auto* ic = std::get_if<IceCreamCone>(&r)) {
        const Point2 d = ic->base - ic->apex;
        const double len = norm(d);
        if (len > ic->base_radius && len > 0.0) {
          const Point2 u = d / len;
          const double beta = std::asin(std::clamp(ic->base_radius / len, 0.0, 1.0));
          const double tangent_len = std::sqrt(len * len - ic->base_radius * ic->base_radius);
          const Point2 tp = ic->apex + rotated(u, beta) * tangent_len;
          const Point2 tm = ic->apex + rotated(u, -beta) * tangent_len;
          std::vector<Point2> outline_pts{ic->apex, tp};
          const double phi_p = std::atan2(tp.y - ic->base.y, tp.x - ic->base.x);
          const double phi_m = std::atan2(tm.y - ic->base.y, tm.x - ic->base.x);
          const double phi_far = std::atan2(u.y, u.x);
          for (const Point2& q : arc_points(ic->base, ic->base_radius, phi_p, phi_m, phi_far)) {
            outline_pts.push_back(q);
          }
          outline_pts.push_back(ic->apex);
          emit_polyline(out, f, outline_pts, outline);
        } else {
          draw_ball(Ball{ic->base, ic->base_radius});
        }
      } else {
        draw_ball(std::get<Ball>(r));
      }
      break;
    }
    case PredictorKind::TruncatedIceCream: {
      const Region r = predict_truncated(pose, governor);
      if (const auto* tc = std::get_if<TruncatedIceCreamCone>(&r)) {
        const Triangle t = tc->triangle();
        emit_polygon(out, f, {t.a, t.b, t.c}, outline);
        const Ball cap = tc->cap();
        if (cap.radius > 0.0) draw_ball(cap);
      } else {
        draw_ball(std::get<Ball>(r));
      }
      break;
    }
    case PredictorKind::ForwardSim: {
      const ForwardSimPrediction fs =
          predict_forward_sim(pose, governor, sc.gains.control, sc.dt, sc.forward_sim_horizon);
      const PaddedPolyline slim = simplify_padded_polyline(fs.polyline, 0.01);
      const std::string band = "stroke=\"" + std::string(color) +
                               "\" stroke-width=\"" + num(std::max(2.0 * slim.pad, 0.02)) +
                               "\" stroke-linecap=\"round\" stroke-linejoin=\"round\" opacity=\"0.5\"";
      emit_polyline(out, f, slim.points, band);
      break;
    }
  }
}

}  // namespace

std::string render_scene_svg(const Scenario& scenario, const TrajectoryLog& log,
                             double snapshot_period) {
  SceneFrame f;
  f.min_x = f.min_y = std::numeric_limits<double>::infinity();
  f.max_x = f.max_y = -std::numeric_limits<double>::infinity();
  for (const Point2& v : scenario.environment.workspace.vertices) {
    f.min_x = std::min(f.min_x, v.x);
    f.min_y = std::min(f.min_y, v.y);
    f.max_x = std::max(f.max_x, v.x);
    f.max_y = std::max(f.max_y, v.y);
  }

  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << num(f.min_x) << ' '
      << num(f.min_y) << ' ' << num(f.max_x - f.min_x) << ' ' << num(f.max_y - f.min_y)
      << "\">\n";

  emit_polygon(out, f, scenario.environment.workspace.vertices,
               "fill=\"#ffffff\" stroke=\"#202020\" stroke-width=\"0.05\"");
  for (const Polygon& obs : scenario.environment.obstacles) {
    emit_polygon(out, f, obs.vertices, "fill=\"#9a9a9a\" stroke=\"#5a5a5a\" stroke-width=\"0.03\"");
  }

  emit_polyline(out, f, scenario.path.waypoints(),
                "stroke=\"#d04040\" stroke-width=\"0.05\" stroke-dasharray=\"0.2,0.15\"");

  if (!log.rows.empty() && snapshot_period > 0.0) {
    double next_snapshot = 0.0;
    for (const TrajectoryLog::Row& r : log.rows) {
      if (r.t + 1e-12 < next_snapshot) continue;
      next_snapshot += snapshot_period;
      emit_region_snapshot(out, f, scenario, Pose{{r.x, r.y}, r.theta}, {r.gx, r.gy});
    }
  }

  std::vector<Point2> robot_pts, governor_pts;
  robot_pts.reserve(log.rows.size());
  governor_pts.reserve(log.rows.size());
  for (const TrajectoryLog::Row& r : log.rows) {
    robot_pts.push_back({r.x, r.y});
    governor_pts.push_back({r.gx, r.gy});
  }
  emit_polyline(out, f, governor_pts, "stroke=\"#2a8a2a\" stroke-width=\"0.05\"");
  emit_polyline(out, f, robot_pts, "stroke=\"#2050c0\" stroke-width=\"0.05\"");

  if (!log.rows.empty()) {
    emit_circle(out, f, {log.rows.front().x, log.rows.front().y},
                scenario.environment.robot_radius,
                "fill=\"none\" stroke=\"#2050c0\" stroke-width=\"0.04\"");
    emit_circle(out, f, {log.rows.back().x, log.rows.back().y},
                scenario.environment.robot_radius,
                "fill=\"#2050c0\" opacity=\"0.4\" stroke=\"none\"");
  }
  emit_circle(out, f, scenario.path.end(), 0.08, "fill=\"#d04040\" stroke=\"none\"");

  out << "</svg>\n";
  return out.str();
}

std::string render_speed_svg(
    const std::vector<std::pair<std::string, const TrajectoryLog*>>& runs) {
  constexpr double kWidth = 720.0, kHeight = 420.0, kMargin = 60.0;
  double t_max = 1e-9, v_max = 1e-9;
  for (const auto& [label, log] : runs) {
    for (const TrajectoryLog::Row& r : log->rows) {
      t_max = std::max(t_max, r.t);
      v_max = std::max(v_max, r.v);
    }
  }
  v_max *= 1.05;

  const auto px = [&](double t) {
    return kMargin + (kWidth - 2.0 * kMargin) * (t / t_max);
  };
  const auto py = [&](double v) {
    return kHeight - kMargin - (kHeight - 2.0 * kMargin) * (v / v_max);
  };

  static const char* kPalette[] = {"#e0b400", "#e07000", "#2a9d2a", "#cc2a2a",
                                   "#7a4fc2", "#3a7ab0"};

  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " << num(kWidth) << ' '
      << num(kHeight) << "\">\n";
  out << "<rect x=\"0\" y=\"0\" width=\"" << num(kWidth) << "\" height=\"" << num(kHeight)
      << "\" fill=\"#ffffff\"/>\n";
  out << "<line x1=\"" << num(kMargin) << "\" y1=\"" << num(kHeight - kMargin) << "\" x2=\""
      << num(kWidth - kMargin) << "\" y2=\"" << num(kHeight - kMargin)
      << "\" stroke=\"#000000\" stroke-width=\"1\"/>\n";
  out << "<line x1=\"" << num(kMargin) << "\" y1=\"" << num(kMargin) << "\" x2=\""
      << num(kMargin) << "\" y2=\"" << num(kHeight - kMargin)
      << "\" stroke=\"#000000\" stroke-width=\"1\"/>\n";
  out << "<text x=\"" << num(kWidth / 2) << "\" y=\"" << num(kHeight - kMargin / 3)
      << "\" font-size=\"14\" text-anchor=\"middle\">time [s]</text>\n";
  out << "<text x=\"" << num(kMargin / 3) << "\" y=\"" << num(kHeight / 2)
      << "\" font-size=\"14\" text-anchor=\"middle\" transform=\"rotate(-90 "
      << num(kMargin / 3) << ' ' << num(kHeight / 2) << ")\">speed [m/s]</text>\n";
  for (int k = 0; k <= 4; ++k) {
    const double t = t_max * k / 4.0;
    const double v = v_max * k / 4.0;
    out << "<text x=\"" << num(px(t)) << "\" y=\"" << num(kHeight - kMargin + 18)
        << "\" font-size=\"11\" text-anchor=\"middle\">" << num(t) << "</text>\n";
    out << "<text x=\"" << num(kMargin - 8) << "\" y=\"" << num(py(v) + 4)
        << "\" font-size=\"11\" text-anchor=\"end\">" << num(v) << "</text>\n";
  }

  std::size_t idx = 0;
  for (const auto& [label, log] : runs) {
    const char* color = kPalette[idx % 6];
    out << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.5\" points=\"";
    bool first = true;
    for (const TrajectoryLog::Row& r : log->rows) {
      if (!first) out << ' ';
      first = false;
      out << num(px(r.t)) << ',' << num(py(r.v));
    }
    out << "\"/>\n";
    out << "<text x=\"" << num(kWidth - kMargin + 6) << "\" y=\""
        << num(kMargin + 16.0 * static_cast<double>(idx)) << "\" font-size=\"12\" fill=\""
        << color << "\">" << label << "</text>\n";
    ++idx;
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace uninav
