#pragma once

#include "effalg/json_io.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

namespace effalg {

enum ExitCode : int { kPass = 0, kCheckFailed = 1, kUsageError = 2 };

struct RunConfig {
    std::string command;
    std::string input;
    std::optional<std::string> output;
    std::optional<int> n;
    std::uint64_t seed = 20261015;
    std::size_t guard_elements = kDefaultCatalogGuard;
    std::uint64_t guard_endos = 50'000'000;
};

struct CommandResult {
    Json report;
    int exit_code = kPass;
};

CommandResult cmd_validate(const RunConfig& config);
CommandResult cmd_analyze(const RunConfig& config);
CommandResult cmd_states(const RunConfig& config);
CommandResult cmd_operators(const RunConfig& config);
CommandResult cmd_duality(const RunConfig& config);
CommandResult cmd_paper_suite(const RunConfig& config);

/// Dispatches on config.command; input, guard and usage errors become an
/// {"error": ...} report with exit code 2.
CommandResult run_command(const RunConfig& config);

int run_cli(int argc, char** argv, std::ostream& out, std::ostream& err);

} // namespace effalg
