// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

namespace dirac::cli {

/// Exit codes: 0 ok, 1 config error, 2 numerical failure, 3 property violation / failed pass flag.
enum ExitCode { kOk = 0, kConfig = 1, kNumerical = 2, kProperty = 3 };

const std::vector<std::string>& commands();

/// Runs one command on a parsed config, writing outputs under `out`. Library errors propagate.
int run_command(const std::string& command, const nlohmann::json& config, const std::filesystem::path& out,
                std::uint64_t seed, std::ostream& log);

/// Full entry point: argument parsing, dispatch and error-to-exit-code mapping.
int main(int argc, char** argv);

}  // namespace dirac::cli
