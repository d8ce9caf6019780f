#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "report.hpp"

namespace bgc::cli {

enum ExitCode : int { kOk = 0, kPropertyFailure = 1, kValidationFailure = 2, kParseError = 3 };

// Each command writes its report once, to c.output or `out`; diagnostics go to `err`.
int runAnalyze(const RunConfig& c, std::ostream& out, std::ostream& err);
int runTorus(const RunConfig& c, std::ostream& out, std::ostream& err);
int runVerify(const RunConfig& c, std::ostream& out, std::ostream& err);

/// Parses argv (argv[0] is the program name) and dispatches.
int runCli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bgc::cli
