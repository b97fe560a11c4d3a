#ifndef SPARSEMULT_CLI_HPP
#define SPARSEMULT_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace sparsemult {

inline constexpr const char* kVersion = "0.3.0";

enum ExitCode : int {
    kOk = 0,
    kVerificationFailure = 1,
    kInvalidInput = 2,
    kHypothesisViolation = 3,
    kRetryBudgetExhausted = 4,
};

/// Runs one command. args excludes the program name. The JSON report goes
/// to `out` (or the --output file), progress and usage to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sparsemult

#endif  // SPARSEMULT_CLI_HPP
