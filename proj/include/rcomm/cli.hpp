#ifndef RCOMM_CLI_HPP
#define RCOMM_CLI_HPP

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "rcomm/report.hpp"

namespace rcomm {

struct RunConfig {
  /// Any of o2n, su11, racah, howe, reduction, oracle, all.
  std::vector<std::string> suites{"all"};
  int n = 3;
  int jobs = 1;
  std::uint64_t seed = 1;
  bool json = false;
  bool allow_large_n = false;
  /// Random trials per identity in the oracle suite; the composition check
  /// runs ten times as many.
  int trials = 100;
  /// Also print Q_{ij} and the reduced total Casimir.
  bool emit_operators = false;
};

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline constexpr int kExitPass = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

/// Throws UsageError for an unknown suite, n < 3, n > 5 without
/// allow_large_n, n beyond the supported maximum, jobs < 1 or trials < 1.
void validate(const RunConfig& config);

/// Small identities with known answers, run before every other suite.
std::vector<Identity> weyl_self_tests();

/// Runs the selected suites in order weyl, o2n, su11, howe, racah,
/// reduction, oracle; streams one line per entry and a summary line.
/// Returns kExitPass iff every entry passed, else kExitFailure.
int run(const RunConfig& config, std::ostream& out);

/// Parses argv, then runs. Usage errors go to `err` with kExitUsage.
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace rcomm

#endif  // RCOMM_CLI_HPP
