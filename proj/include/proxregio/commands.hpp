#pragma once

#include <string>
#include <vector>

namespace proxregio {

struct CommandResult {
    std::string text;    // full report, UTF-8 plain text (or SVG echo note)
    int exit_code = 0;   // 0 holds/success, 1 relation does not hold, 2 usage/parse
};

// Executes one CLI invocation given the arguments after the program name.
// All report text is assembled before returning; identical arguments plus an
// identical PROXREGIO_SEED environment yield byte-identical text.
CommandResult run_command(const std::vector<std::string>& args);

} // namespace proxregio
