#ifndef TIGEN_TOOLS_CLI_HPP
#define TIGEN_TOOLS_CLI_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace tigen::cli {

enum class Mode { kCount, kGraph6, kSparse6, kParentList, kVerify };

enum ExitStatus : int {
  kExitOk = 0,
  kExitUsage = 1,
  kExitMismatch = 2,
  kExitIo = 3,
};

struct RunConfig {
  Mode mode = Mode::kCount;
  int n_max = 1;
  std::optional<int> max_degree;  // unbounded when empty
  unsigned threads = 1;
  bool deterministic = false;
  bool verify_against_oracle = false;
};

/// Parses the command line. On failure returns the exit status after
/// writing help or a diagnostic to the given streams.
std::variant<RunConfig, int> parse_args(int argc, const char* const* argv, std::ostream& out,
                                        std::ostream& err);

/// Checks the cross-field constraints; returns a message when violated.
std::optional<std::string> validate(const RunConfig& config);

struct OrderAgreement {
  int order = 0;
  std::uint64_t generated = 0;
  std::uint64_t expected = 0;
  bool match = false;
};

/// Compares, order by order, the canonical forms of the generator's output
/// with the oracle's transmission-irregular free trees of bounded degree.
std::vector<OrderAgreement> verify_against_oracle(int n_max, std::optional<int> max_degree,
                                                  unsigned threads);

/// Executes the configured mode, writing results to `out` and diagnostics
/// to `err`.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace tigen::cli

#endif  // TIGEN_TOOLS_CLI_HPP
