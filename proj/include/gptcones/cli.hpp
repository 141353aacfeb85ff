#pragma once

// Command-line entry points, kept in the library so the handlers are
// directly testable. Exit-code contract: 0 ok, 1 refuted (a tested property
// is false), 2 inconclusive (budget or sampling limits), >= 3 error.

#include "gptcones/json_io.hpp"

#include <string>
#include <vector>

namespace gptcones {

struct CommandResult {
    int exit_code = 0;
    Json report;
};

constexpr int kExitOk = 0;
constexpr int kExitRefuted = 1;
constexpr int kExitInconclusive = 2;
constexpr int kExitError = 3;

// args excludes the program name.
CommandResult run_cli(const std::vector<std::string>& args);

}  // namespace gptcones
