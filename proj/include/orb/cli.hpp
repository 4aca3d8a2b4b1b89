#pragma once

/**
 * @file cli.hpp
 * @brief Command dispatch: every module behind one executable with JSON
 *        output (TSV as a lossy projection) and stable error codes.
 */

#include <orb/jsonio.hpp>

#include <string>
#include <vector>

namespace orb {

struct CommandResult {
    int exit_code = 0;  // 0 ok, 1 domain error, 2 usage error
    Json payload;
    std::vector<std::string> diagnostics;
    bool tsv = false;
    std::string out_file;  // empty: stdout
    std::string raw_text;  // when nonempty (help), printed verbatim instead
};

CommandResult run(const std::vector<std::string>& args);

/// Payload as the CLI prints it: pretty JSON, or tab-separated when tsv.
std::string render_payload(const Json& payload, bool tsv);

} // namespace orb
