#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "irratio/witness.hpp"

namespace irratio::cli {

enum ExitCode : int {
    ok = 0,
    invalid_input = 1,
    resource_cap = 2,
    internal_fault = 3,
};

/// Everything a single invocation needs, validated before any computation.
struct CliConfig {
    std::string command;    // "digits", "witness", "archimedes", "pascal", "cf", "check", "growth"
    std::string subcommand; // "pi2" | "e" | "sqrt" for witness, "identities" | "squeeze" for check
    std::string target;     // constant name, candidate "A/B", integer M, or h "P/Q"
    std::string method = "cos-root";
    unsigned digits = 20;
    unsigned doublings = 4;
    unsigned rows = 5;
    unsigned depth = 10;
    unsigned max_n = 10;
    std::optional<unsigned> n_override;
    bool json = false;
    WitnessLimits limits;
};

/// Runs one command. args[0] is the program name. Writes the report to
/// `out` and diagnostics to `err`; returns an ExitCode. A CONTRADICTION
/// verdict is a successful run.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Reads IRRATIO_MAX_DIGITS; throws InvalidInput if it is set but not a
/// positive integer.
unsigned max_digits_from_env();

} // namespace irratio::cli
