#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace diagramkit::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 2,
  kBudget = 3,
  kSingular = 4,
  kInfiniteTail = 5,
};

// Runs one command line (without the program name). Reports go to `out`,
// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

std::string version();

}  // namespace diagramkit::cli
