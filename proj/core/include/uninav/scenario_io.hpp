#pragma once

#include <string>

#include "uninav/navigation.hpp"

namespace uninav {

struct OutputOptions {
  double snapshot_period = 0.5;  // seconds between prediction-region snapshots
};

struct ScenarioFile {
  Scenario scenario;
  OutputOptions output;
};

// Parses and fully validates a JSON scenario document. Unknown keys are
// rejected; missing optional fields get documented defaults (gains from the
// reference setup, dt = 0.01, horizon = 120, predictor "ic", governor at the
// first waypoint). Throws ValidationError with a field-addressed message.
ScenarioFile parse_scenario(const std::string& text);

// Token names used by scenario files and the CLI: ball, bc, ic, tc, fs.
PredictorKind predictor_from_token(const std::string& token);
std::string predictor_token(PredictorKind kind);

}  // namespace uninav
