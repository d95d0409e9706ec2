#pragma once

#include <iosfwd>

#include <nlohmann/json.hpp>

#include "bdae/config.hpp"
#include "bdae/report.hpp"

namespace bdae::cli {

enum ExitCode : int {
    exit_ok = 0,
    exit_bad_flags = 1,
    exit_unreadable_image = 2,
    exit_solver_failure = 3,
};

/// Entry point shared by the executable and the tests. argv[0] is the program name.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Flat key/value view of a config; keys double as the CLI flag names.
nlohmann::json config_to_json(const SolverConfig& cfg);

nlohmann::json report_to_json(const DenoiseReport& report, const SolverConfig& cfg);

}  // namespace bdae::cli
