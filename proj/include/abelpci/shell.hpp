#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "abelpci/pcidiagram.hpp"
#include "abelpci/verify.hpp"

namespace abelpci {

enum class OutputFormat { Json, Text, Dot };

struct RunConfig {
    std::string subcommand;  // pci | diagram | wedderburn | split | verify
    std::string group_spec;
    OutputFormat format = OutputFormat::Json;
    std::uint64_t max_order = kDefaultMaxOrder;
    CheckLevel check_level = CheckLevel::Full;
    bool alternate_order = false;
    std::optional<std::string> order;  // "s.j.a,..." override for primary specs
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitInvalidInput = 2;

struct RunResult {
    int exit_code = kExitOk;
    std::string output;
    std::string error;
};

RunResult run(const RunConfig& config);

// Parses argv (subcommand first) and runs it.
RunResult run_cli(int argc, const char* const* argv);

}  // namespace abelpci
