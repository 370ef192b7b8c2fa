#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <qlogic/qlogic.hpp>

namespace qlogic::cli {

enum ExitCode : int {
    kOk = 0,
    kSuiteFailure = 1,
    kParseError = 2,
    kDimensionError = 3,
    kUnsupported = 4,
    kConfigError = 5,
};

struct EvalOptions {
    std::string formula_file;
    std::string registry_file;
    ConditionalKind conditional = ConditionalKind::Sasaki;
    Tolerance tol;
};

struct SelftestOptions {
    int dim_lo = 2;
    int dim_hi = 6;
    int trials = 50;
    std::uint64_t seed = 1;
    Tolerance tol;
};

struct OrderOptions {
    std::string x_file;
    std::string y_file;
    std::optional<std::string> psi_file;
    std::vector<ConditionalKind> conditionals{ConditionalKind::Sasaki, ConditionalKind::Contrapositive,
                                              ConditionalKind::Relevance};
    Tolerance tol;
};

/// Each command writes JSON lines to `out` and a human summary to `err`, returning the exit code.
int cmd_eval(const EvalOptions &opts, std::ostream &out, std::ostream &err);
int cmd_selftest(const SelftestOptions &opts, std::ostream &out, std::ostream &err);
int cmd_order(const OrderOptions &opts, std::ostream &out, std::ostream &err);

/// Maps a library or input exception to its exit code.
int exit_code_for(const std::exception &e);

/// Parses "lo..hi" or a single dimension. Throws ConfigError.
std::pair<int, int> parse_dims(const std::string &text);

/// Full command-line entry point; `args` excludes the program name.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

// Selftest internals, exposed for testing.
struct CheckSummary {
    std::string suite;
    std::string check;
    int dim = 0;
    int trials = 0;
    int failures = 0;
    double max_residual = 0.0;
};
std::vector<CheckSummary> run_selftest_suites(const SelftestOptions &opts);

}  // namespace qlogic::cli
