#pragma once

#include <iosfwd>
#include <vector>

#include "uninav/navigation.hpp"

namespace uninav {

// Columns: t,x,y,theta,gx,gy,sigma,v,omega; fixed-point with 9 decimals.
void write_trajectory_csv(std::ostream& out, const TrajectoryLog& log);

// Parses rows written by write_trajectory_csv. Throws ValidationError on a
// malformed header or row.
std::vector<TrajectoryLog::Row> read_trajectory_csv(std::istream& in);

}  // namespace uninav
