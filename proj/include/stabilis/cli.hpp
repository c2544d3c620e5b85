#pragma once

#include <string>
#include <vector>

#include "stabilis/json_io.hpp"

namespace stabilis::cli {

inline constexpr const char* kVersion = "0.1.0";

enum ExitCode { kAccepted = 0, kRejected = 1, kInconclusive = 2, kInputError = 3 };

struct Outcome {
  int exit_code = kInputError;
  json report;
  // Rendered output in the requested format.
  std::string output;
};

// args excludes the program name.
Outcome run(const std::vector<std::string>& args);

}  // namespace stabilis::cli
