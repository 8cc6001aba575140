#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "burnloops/models.hpp"
#include "burnloops/verify.hpp"

namespace burnloops::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInternal = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitClaimFailure = 3;

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct CliConfig {
  std::string command;
  Family family = Family::B;
  std::vector<int> ns;
  Format format = Format::Text;
  std::uint64_t seed = 0;
  std::optional<std::string> out;
  std::size_t aut_bound = 64;
  std::size_t tuple_budget = 10'000'000;
  bool timings = false;
};

/// Parses `a` or `a..b`. C skips odd n inside a range and rejects an odd
/// single value. Throws UsageError.
std::vector<int> parse_n_range(const std::string& text, Family f);

/// Workers for verify sweeps: BURNLOOPS_THREADS if set and positive, else
/// the hardware concurrency, never more than `jobs`.
std::size_t worker_count(std::size_t jobs);

int cmd_construct(const CliConfig& config, std::ostream& out);
int cmd_invariants(const CliConfig& config, std::ostream& out);
int cmd_verify(const CliConfig& config, std::ostream& out);

/// Full command line (without the program name). Returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace burnloops::cli
