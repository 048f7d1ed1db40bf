#pragma once

#include <string>
#include <utility>
#include <vector>

#include "uninav/navigation.hpp"

namespace uninav {

// Scene plot: environment, reference path, robot and governor trajectories,
// and prediction-region snapshots at the given period. The viewBox matches
// the workspace bounding box.
std::string render_scene_svg(const Scenario& scenario, const TrajectoryLog& log,
                             double snapshot_period = 0.5);

// Speed-over-time profile for one or more labelled runs.
std::string render_speed_svg(
    const std::vector<std::pair<std::string, const TrajectoryLog*>>& runs);

}  // namespace uninav
