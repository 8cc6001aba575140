#include <algorithm>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "anchors.hpp"
#include "burnloops/verify.hpp"

namespace burnloops {

std::string to_string(ClaimStatus s) {
  switch (s) {
    case ClaimStatus::Pass:
      return "pass";
    case ClaimStatus::Fail:
      return "fail";
    case ClaimStatus::PaperAmbiguous:
      return "paper-ambiguous";
  }
  return "fail";
}

ClaimStatus parse_status(std::string_view text) {
  if (text == "pass") return ClaimStatus::Pass;
  if (text == "fail") return ClaimStatus::Fail;
  if (text == "paper-ambiguous") return ClaimStatus::PaperAmbiguous;
  throw std::invalid_argument("unknown claim status '" + std::string(text) + "'");
}

std::size_t Report::failures() const {
  return static_cast<std::size_t>(std::count_if(
      claims.begin(), claims.end(), [](const Claim& c) { return c.status == ClaimStatus::Fail; }));
}

const std::vector<std::string>& anchor_registry() {
  using namespace anchor;
  static const std::vector<std::string> registry{
      kConstruction, kUnitChoice,   kNucleusNormal, kGRightNormal, kQuotient,      kSquares,
      kKUnion,       kKernelInNucleus, kKongr,     kHs1,          kKerfi,         kCorollary,
      kEkvik,        kYorbit,       kAbelLam,       kReflections,  kNdef,          kKernelTable,
      kDecomposition, kSigmaAction, kB8Trivial,     kCenter,       kCore,          kCoreIdentities,
      kGensTable,    kLoopAut,      kPseudo,        kIsotopes,     kCentOdd,       kCentEven,
      kCentH,        kLambda0,      kOrbitP,        kMLemma,       kGamma,         kGammaReading,
      kGroupNet};
  return registry;
}

bool is_registered_anchor(std::string_view anchor) {
  const auto& r = anchor_registry();
  return std::find(r.begin(), r.end(), anchor) != r.end();
}

Format parse_format(std::string_view text) {
  if (text == "json") return Format::Json;
  if (text == "csv") return Format::Csv;
  if (text == "text") return Format::Text;
  throw std::invalid_argument("unknown format '" + std::string(text) + "' (expected json, csv or text)");
}

namespace {

using nlohmann::ordered_json;

ordered_json to_json(const Report& r) {
  ordered_json claims = ordered_json::array();
  for (const auto& c : r.claims) {
    ordered_json j;
    j["id"] = c.id;
    j["paper_anchor"] = c.paper_anchor;
    j["expected"] = c.expected;
    j["computed"] = c.computed;
    j["status"] = to_string(c.status);
    if (c.witness) j["witness"] = *c.witness;
    claims.push_back(std::move(j));
  }
  ordered_json j;
  j["family"] = std::string(1, family_letter(r.family));
  j["n"] = r.n;
  j["seed"] = r.seed;
  j["claims"] = std::move(claims);
  j["timings_ms"] = ordered_json::object();
  for (const auto& [phase, ms] : r.timings_ms) j["timings_ms"][phase] = ms;
  j["version"] = r.version;
  return j;
}

Report from_json(const ordered_json& j) {
  Report r;
  r.family = parse_family(j.at("family").get<std::string>());
  r.n = j.at("n").get<int>();
  r.seed = j.at("seed").get<std::uint64_t>();
  for (const auto& c : j.at("claims")) {
    Claim claim{c.at("id").get<std::string>(), c.at("paper_anchor").get<std::string>(),
                c.at("expected").get<std::string>(), c.at("computed").get<std::string>(),
                parse_status(c.at("status").get<std::string>()), std::nullopt};
    if (c.contains("witness")) claim.witness = c.at("witness").get<std::string>();
    r.claims.push_back(std::move(claim));
  }
  for (const auto& [phase, ms] : j.at("timings_ms").items()) r.timings_ms[phase] = ms.get<std::int64_t>();
  r.version = j.at("version").get<std::string>();
  return r;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

constexpr const char* kCsvHeader = "family,n,seed,id,paper_anchor,expected,computed,status,witness\n";

void csv_rows(const Report& r, std::ostringstream& out) {
  for (const auto& c : r.claims) {
    out << family_letter(r.family) << ',' << r.n << ',' << r.seed << ',' << csv_field(c.id) << ','
        << csv_field(c.paper_anchor) << ',' << csv_field(c.expected) << ','
        << csv_field(c.computed) << ',' << to_string(c.status) << ','
        << csv_field(c.witness.value_or("")) << '\n';
  }
}

void text_block(const Report& r, std::ostringstream& out) {
  std::size_t pass = 0, ambiguous = 0;
  for (const auto& c : r.claims) {
    pass += c.status == ClaimStatus::Pass;
    ambiguous += c.status == ClaimStatus::PaperAmbiguous;
  }
  out << family_letter(r.family) << "_" << 4 * r.n << " (n = " << r.n << ", seed " << r.seed << "): "
      << pass << " pass, " << r.failures() << " fail, " << ambiguous << " paper-ambiguous\n";
  std::size_t width = 0;
  for (const auto& c : r.claims) width = std::max(width, c.id.size());
  for (const auto& c : r.claims) {
    std::string tag = c.status == ClaimStatus::Pass ? "PASS" : c.status == ClaimStatus::Fail ? "FAIL" : "AMBG";
    out << "  [" << tag << "] " << c.id << std::string(width - c.id.size() + 2, ' ') << "expected "
        << c.expected << "; computed " << c.computed << '\n';
    if (c.witness) out << "         witness: " << *c.witness << '\n';
  }
  for (const auto& [phase, ms] : r.timings_ms) out << "  time " << phase << ": " << ms << " ms\n";
}

}  // namespace

std::string emit(const Report& report, Format format) {
  std::ostringstream out;
  switch (format) {
    case Format::Json:
      return to_json(report).dump(2) + "\n";
    case Format::Csv:
      out << kCsvHeader;
      csv_rows(report, out);
      break;
    case Format::Text:
      text_block(report, out);
      break;
  }
  return out.str();
}

std::string emit(const std::vector<Report>& reports, Format format) {
  if (reports.size() == 1) return emit(reports.front(), format);
  std::ostringstream out;
  switch (format) {
    case Format::Json: {
      ordered_json all = ordered_json::array();
      for (const auto& r : reports) all.push_back(to_json(r));
      return all.dump(2) + "\n";
    }
    case Format::Csv:
      out << kCsvHeader;
      for (const auto& r : reports) csv_rows(r, out);
      break;
    case Format::Text:
      for (const auto& r : reports) text_block(r, out);
      break;
  }
  return out.str();
}

Report parse_report_json(std::string_view text) {
  try {
    return from_json(ordered_json::parse(text));
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed report: ") + e.what());
  }
}

}  // namespace burnloops
