#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "burnloops/models.hpp"

namespace burnloops {

inline constexpr const char* kToolVersion = "burnloops 1.0.0";

enum class ClaimStatus { Pass, Fail, PaperAmbiguous };

std::string to_string(ClaimStatus s);
/// Throws std::invalid_argument for unknown names.
ClaimStatus parse_status(std::string_view text);

struct Claim {
  std::string id;
  std::string paper_anchor;
  std::string expected;
  std::string computed;
  ClaimStatus status = ClaimStatus::Fail;
  std::optional<std::string> witness;

  friend bool operator==(const Claim&, const Claim&) = default;
};

struct Report {
  Family family = Family::B;
  int n = 0;
  std::uint64_t seed = 0;
  std::vector<Claim> claims;
  std::map<std::string, std::int64_t> timings_ms;
  std::string version = kToolVersion;

  std::size_t failures() const;
  friend bool operator==(const Report&, const Report&) = default;
};

/// The fixed set of anchor strings a claim may cite.
const std::vector<std::string>& anchor_registry();
bool is_registered_anchor(std::string_view anchor);

struct VerifyOptions {
  std::uint64_t seed = 0;
  std::size_t aut_bound = 64;
  std::size_t tuple_budget = 10'000'000;
  bool timings = false;
};

Report verify_kernel_table(Family f, int n, const VerifyOptions& options = {});
Report verify_reflection_theorem(Family f, int n, const VerifyOptions& options = {});
Report verify_aut_theorem(Family f, int n, const VerifyOptions& options = {});
Report verify_gamma_theorem(Family f, int n, const VerifyOptions& options = {});
Report verify_foundational(Family f, int n, const VerifyOptions& options = {});
/// All five verifiers over one shared set of computed structures.
Report verify_all(Family f, int n, const VerifyOptions& options = {});

/// The automorphism group type listed for aut(L).
GroupSpec expected_aut_spec(Family f, int n);
/// Order, abelian invariants or centre order, and element-order spectrum.
std::string describe_group(const FiniteGroup& g);

enum class Format { Json, Csv, Text };
/// Throws std::invalid_argument for unknown names.
Format parse_format(std::string_view text);

std::string emit(const Report& report, Format format);
std::string emit(const std::vector<Report>& reports, Format format);
/// Inverse of emit(report, Format::Json). Throws std::invalid_argument.
Report parse_report_json(std::string_view text);

}  // namespace burnloops
