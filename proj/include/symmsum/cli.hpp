#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace symmsum::cli {

enum ExitCode : int { kSuccess = 0, kMathFailure = 1, kUsageError = 2 };

/// Parsed command line; `name` is the subcommand.
struct Command {
    std::string name;
    std::string target;  // verify identity or closed-form name
    std::string input, a_path, b_path, c_path, out_path;
    std::vector<std::string> inputs;
    std::optional<std::size_t> k, n, tuple_size, tau, r;
    std::vector<std::size_t> ks;
    std::optional<std::string> x;
    std::string method = "newton";
    std::string ring = "symmetric";
    unsigned m = 1;
    std::uint64_t trials = 100;
    bool trials_set = false;
    std::uint64_t seed = 0;
    int threads = 1;
    double tolerance = 1e-9;
    bool quick = false;
};

/// Returns the command, or an exit code when parsing ended the run (help
/// printed, or a usage error reported on `err`).
struct ParseOutcome {
    std::optional<Command> command;
    int exit_code = kSuccess;
};

ParseOutcome parse_args(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int run(const Command& cmd, std::ostream& out, std::ostream& err);

/// parse_args + run. `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace symmsum::cli
