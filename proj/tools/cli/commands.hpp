#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "ar2/ar2_model.hpp"
#include "ar2/linear_process.hpp"
#include "output.hpp"

namespace ar2::cli {

enum ExitCode : int {
    exit_success = 0,
    exit_verification_failed = 1,
    exit_usage = 2,
    exit_domain = 3,
};

enum class GeneratorMode { Both, Recursive, Ma };

struct RunConfig {
    std::string command;
    std::vector<std::string> args;  // as given, for the header audit trail

    AR2Params params;
    std::size_t order = 10;
    std::size_t max_lag = 10;
    std::size_t length = 10000;
    std::uint64_t seed = 42;
    std::optional<std::size_t> burn_in;
    CoefficientMethod method = CoefficientMethod::Recursion;
    std::optional<double> tol;  // truncation tolerance, or check tolerance for verify
    bool exact = false;
    bool impulse = false;
    std::size_t grid = 9;
    GeneratorMode generator = GeneratorMode::Both;
    Format format = Format::Csv;
    int precision = 17;
    std::optional<std::string> out_path;
};

inline constexpr double default_truncation_tol = 1e-12;

[[nodiscard]] Report cmd_coeffs(const RunConfig& config);
[[nodiscard]] Report cmd_check(const RunConfig& config);
[[nodiscard]] Report cmd_acf(const RunConfig& config);
[[nodiscard]] Report cmd_simulate(const RunConfig& config);

struct VerifyOutcome {
    Report report;
    bool passed = true;
    std::vector<std::string> failures;  // one JSON record per failing check
};

[[nodiscard]] VerifyOutcome cmd_verify(const RunConfig& config);

/// "ar2 <args>" with shell quoting, recorded in every header.
[[nodiscard]] std::string invocation_text(const std::vector<std::string>& args);

/// Parses argv (without the program name), runs the command and writes its
/// output to --out or `out`. Diagnostics go to `err`. Returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ar2::cli
