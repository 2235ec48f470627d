#ifndef CYCLOTRIG_TOOLS_CLI_HPP
#define CYCLOTRIG_TOOLS_CLI_HPP

#include <cstdint>
#include <string>
#include <variant>

#include "cyclotrig/sine_ratio.hpp"

namespace cyclotrig::cli {

enum class OutputFormat { Text, Json };

struct BasisCmd {
    std::uint64_t n = 1;
};
struct DecomposeCmd {
    std::uint64_t n = 1;
    std::int64_t t = 0;
};
struct SinRatioCmd {
    Rho rho;
    std::int64_t k = 0;
    std::int64_t m = 0;
};
struct CheckCmd {
    Rho rho;
    std::int64_t n = 2;
};
struct SweepCmd {
    std::uint64_t qmax = 3;
    std::uint64_t nmax = 2;
    unsigned jobs = 1;
};
struct VerifyBasisCmd {
    std::uint64_t nmax = 1;
    unsigned bits = 192;
};
struct FindRootCmd {
    std::int64_t n = 2;
    double a = 0;
    double b = 0;
    unsigned bits = 192;
};

using Command = std::variant<BasisCmd, DecomposeCmd, SinRatioCmd, CheckCmd, SweepCmd,
                             VerifyBasisCmd, FindRootCmd>;

struct RunResult {
    int exit_code = 0;
    std::string output;  // includes the trailing newline
};

// Executes one parsed command.  Exit codes: 0 success / no violations,
// 1 a verdict contradicting the expected non-existence, 2 usage error.
RunResult run(Command const& command, OutputFormat format);

}  // namespace cyclotrig::cli

#endif
