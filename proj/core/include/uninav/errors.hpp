#pragma once

#include <stdexcept>
#include <string>

namespace uninav {

// Raised when a scenario, environment, or other input breaks a named rule.
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace uninav
