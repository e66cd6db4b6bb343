#ifndef SHIFTFLIP_TOOLS_CLI_HPP
#define SHIFTFLIP_TOOLS_CLI_HPP

#include <optional>
#include <string>
#include <vector>

#include "shiftflip/io.hpp"

namespace shiftflip::cli {

enum ExitCode : int { kPass = 0, kCheckFailed = 1, kUsageError = 2 };

struct Verdict {
    std::string check;
    bool passed = false;
    std::string summary;  // "valid", "pass", "none within bounds", ...
    std::string locator;  // identity name, link index or point witness; set on failure
    std::string detail;
};

struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
};

struct RunReport {
    std::string command;
    std::string inputs_digest;  // "sha256:<hex>" over the input bytes in argument order
    std::vector<Verdict> verdicts;
    std::optional<double> timing_ms;
    Json outputs = Json::object();
    std::optional<Table> table;
    std::string error;  // usage or input error text
};

struct CliOutcome {
    int exit_code = kPass;
    RunReport report;
    std::string rendered;  // stdout payload in the requested format
};

/// args excludes the program name.
CliOutcome run_cli(const std::vector<std::string>& args);

std::string render_json(const RunReport& report);
std::string render_plain(const RunReport& report);
std::string render_csv(const RunReport& report);

}  // namespace shiftflip::cli

#endif  // SHIFTFLIP_TOOLS_CLI_HPP
