#include "uninav/trajectory_csv.hpp"

#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "uninav/errors.hpp"

namespace uninav {

namespace {

constexpr const char* kHeader = "t,x,y,theta,gx,gy,sigma,v,omega";

std::string fixed9(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.9f", v);
  return buf;
}

}  // namespace

void write_trajectory_csv(std::ostream& out, const TrajectoryLog& log) {
  out << kHeader << '\n';
  for (const TrajectoryLog::Row& r : log.rows) {
    out << fixed9(r.t) << ',' << fixed9(r.x) << ',' << fixed9(r.y) << ','
        << fixed9(r.theta) << ',' << fixed9(r.gx) << ',' << fixed9(r.gy) << ','
        << fixed9(r.sigma) << ',' << fixed9(r.v) << ',' << fixed9(r.omega) << '\n';
  }
}

std::vector<TrajectoryLog::Row> read_trajectory_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != kHeader) {
    throw ValidationError("trajectory csv: unexpected header");
  }
  std::vector<TrajectoryLog::Row> rows;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::istringstream ls(line);
    double vals[9];
    char sep = ',';
    for (int i = 0; i < 9; ++i) {
      if (i > 0 && (!(ls >> sep) || sep != ',')) {
        throw ValidationError("trajectory csv: malformed row at line " +
                              std::to_string(line_no));
      }
      if (!(ls >> vals[i])) {
        throw ValidationError("trajectory csv: malformed row at line " +
                              std::to_string(line_no));
      }
    }
    rows.push_back({vals[0], vals[1], vals[2], vals[3], vals[4], vals[5], vals[6],
                    vals[7], vals[8]});
  }
  return rows;
}

}  // namespace uninav
