#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "toric/json_io.hpp"

namespace toric::cli {

enum ExitCode : int {
    kOk = 0,
    kUsage = 1,
    kMismatch = 2,
};

/// Runs one command line (without the program name). JSON goes to `out`
/// unless --out is given, in which case the JSON is written there and an
/// aligned table goes to `out`. Diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Aligned plain-text rendering of a report.
std::string render_table(const Json& report);

}  // namespace toric::cli
