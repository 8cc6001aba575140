#include "burnloops/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <json.hpp>
#include <ostream>
#include <sstream>
#include <thread>

#include "burnloops/instance.hpp"

namespace burnloops::cli {

namespace {

using nlohmann::ordered_json;

int parse_int(const std::string& text, const std::string& what) {
  std::size_t used = 0;
  int value = 0;
  try {
    value = std::stoi(text, &used);
  } catch (const std::exception&) {
    throw UsageError("invalid " + what + ": '" + text + "'");
  }
  if (used != text.size()) throw UsageError("invalid " + what + ": '" + text + "'");
  return value;
}

std::string instance_name(Family f, int n) { return std::string(1, family_letter(f)) + "_" + std::to_string(4 * n); }

std::string flag(bool b) { return b ? "true" : "false"; }

void write_output(const CliConfig& config, const std::string& text, std::ostream& out) {
  if (!config.out) {
    out << text;
    return;
  }
  std::ofstream file(*config.out, std::ios::binary);
  if (!file) throw UsageError("cannot open output file '" + *config.out + "'");
  file << text;
  if (!file) throw std::runtime_error("failed writing '" + *config.out + "'");
}

// --- construct ---------------------------------------------------------------

struct Constructed {
  Family family;
  int n;
  Loop loop;
  IdentityFlags flags;
  Nuclei nuc;
};

Constructed construct_one(Family f, int n) {
  auto inst = make_instance(f, n);
  Loop loop = inst.loop();
  auto flags = check_identities(loop);
  auto nuc = nuclei(loop);
  return {f, n, std::move(loop), flags, std::move(nuc)};
}

std::string construct_text(const Constructed& c) {
  std::ostringstream out;
  out << write_cayley(c.loop);
  out << "# " << instance_name(c.family, c.n) << " order=" << c.loop.order() << " bol=" << flag(c.flags.left_bol)
      << " moufang=" << flag(c.flags.moufang) << " lcc=" << flag(c.flags.left_conjugacy_closed)
      << " lip=" << flag(c.flags.left_inverse_property) << '\n';
  out << "# nuclei left=" << c.nuc.left.size() << " middle=" << c.nuc.middle.size() << " right=" << c.nuc.right.size()
      << '\n';
  if (c.flags.sampled) out << "# identities checked on sampled triples\n";
  return out.str();
}

ordered_json construct_json(const Constructed& c) {
  ordered_json j;
  j["family"] = std::string(1, family_letter(c.family));
  j["n"] = c.n;
  j["order"] = c.loop.order();
  j["table"] = c.loop.rows();
  j["labels"] = c.loop.labels();
  j["properties"] = {{"bol", c.flags.left_bol},
                     {"moufang", c.flags.moufang},
                     {"lcc", c.flags.left_conjugacy_closed},
                     {"lip", c.flags.left_inverse_property},
                     {"sampled", c.flags.sampled}};
  j["nuclei"] = {{"left", c.nuc.left.size()}, {"middle", c.nuc.middle.size()}, {"right", c.nuc.right.size()}};
  return j;
}

// --- invariants --------------------------------------------------------------

struct Invariants {
  Family family;
  int n;
  std::vector<std::pair<std::string, ordered_json>> fields;
};

std::string kernel_type(const FiniteGroup& k) {
  const bool cyclic =
      std::any_of(k.elements().begin(), k.elements().end(), [&](const Perm& g) { return g.order() == k.order(); });
  return cyclic ? "C" + std::to_string(k.order()) : describe_group(k);
}

Invariants invariants_one(Family f, int n, const CliConfig& config) {
  const auto inst = make_instance(f, n);
  const auto refl = reflection_groups(inst.net);
  const auto kernel = ker_phi(inst.net, refl.n);
  const auto special = special_subgroups(inst, refl, config.aut_bound);
  const auto gamma = analyze_gamma(inst, special);
  const auto z = center(refl.nplus);
  const auto core = core_group(inst.loop());
  const auto orbits = net_orbits(inst.net, refl.n);
  const auto spec = expected_aut_spec(f, n);
  const auto aut_type = isomorphic(special.aut, make_reference(spec)) ? spec.name() : describe_group(special.aut);

  Invariants inv{f, n, {}};
  auto add = [&](const char* key, ordered_json value) { inv.fields.emplace_back(key, std::move(value)); };
  add("order", inst.loop().order());
  add("G", inst.gl().order());
  add("N", refl.n.order());
  add("Nplus", refl.nplus.order());
  add("kerPhi", kernel_type(kernel));
  add("yaxis_orbit", orbits.y_axis_orbit);
  add("center_Nplus", z.order());
  add("core", core.order());
  add("aut", aut_type);
  add("aut_order", special.aut.order());
  add("Gamma", gamma.gamma.order());
  add("P", gamma.orbit_p.size());
  return inv;
}

std::string json_scalar(const ordered_json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

// --- verify ------------------------------------------------------------------

std::vector<Report> run_reports(const CliConfig& config) {
  VerifyOptions options;
  options.seed = config.seed;
  options.aut_bound = config.aut_bound;
  options.tuple_budget = config.tuple_budget;
  options.timings = config.timings;

  const auto jobs = config.ns.size();
  std::vector<std::optional<Report>> results(jobs);
  std::vector<std::exception_ptr> errors(jobs);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < jobs; i = next++) {
      try {
        results[i] = verify_all(config.family, config.ns[i], options);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const auto workers = worker_count(jobs);
  if (workers <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < workers; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  std::vector<Report> reports;
  for (std::size_t i = 0; i < jobs; ++i) {
    if (errors[i]) std::rethrow_exception(errors[i]);
    reports.push_back(std::move(*results[i]));
  }
  return reports;
}

}  // namespace

std::vector<int> parse_n_range(const std::string& text, Family f) {
  std::vector<int> ns;
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    const int n = parse_int(text, "n");
    try {
      validate_instance(f, n);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
    return {n};
  }
  const int a = parse_int(text.substr(0, dots), "range start");
  const int b = parse_int(text.substr(dots + 2), "range end");
  if (a > b) throw UsageError("empty range " + text);
  if (a < 2) throw UsageError("n must be at least 2");
  for (int n = a; n <= b; ++n) {
    if (f == Family::C && n % 2 != 0) continue;
    try {
      validate_instance(f, n);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
    ns.push_back(n);
  }
  if (ns.empty()) throw UsageError("range " + text + " contains no valid n for family C");
  return ns;
}

std::size_t worker_count(std::size_t jobs) {
  std::size_t cap = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("BURNLOOPS_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) cap = static_cast<std::size_t>(v);
  }
  return std::max<std::size_t>(1, std::min(cap, jobs));
}

int cmd_construct(const CliConfig& config, std::ostream& out) {
  std::vector<Constructed> loops;
  for (int n : config.ns) loops.push_back(construct_one(config.family, n));
  std::ostringstream text;
  switch (config.format) {
    case Format::Text:
      for (std::size_t i = 0; i < loops.size(); ++i) text << (i ? "\n" : "") << construct_text(loops[i]);
      break;
    case Format::Json: {
      if (loops.size() == 1) {
        text << construct_json(loops.front()).dump(2) << '\n';
      } else {
        ordered_json all = ordered_json::array();
        for (const auto& c : loops) all.push_back(construct_json(c));
        text << all.dump(2) << '\n';
      }
      break;
    }
    case Format::Csv:
      text << "family,n,x,y,product\n";
      for (const auto& c : loops) {
        for (std::size_t x = 0; x < c.loop.order(); ++x) {
          for (std::size_t y = 0; y < c.loop.order(); ++y) {
            text << family_letter(c.family) << ',' << c.n << ',' << x << ',' << y << ',' << c.loop.mul(x, y) << '\n';
          }
        }
      }
      break;
  }
  write_output(config, text.str(), out);
  return kExitOk;
}

int cmd_invariants(const CliConfig& config, std::ostream& out) {
  std::vector<Invariants> all;
  for (int n : config.ns) all.push_back(invariants_one(config.family, n, config));
  std::ostringstream text;
  auto to_json = [](const Invariants& inv) {
    ordered_json j;
    j["family"] = std::string(1, family_letter(inv.family));
    j["n"] = inv.n;
    for (const auto& [key, value] : inv.fields) j[key] = value;
    return j;
  };
  switch (config.format) {
    case Format::Text:
      for (const auto& inv : all) {
        text << instance_name(inv.family, inv.n) << " (n = " << inv.n << ")\n";
        for (const auto& [key, value] : inv.fields) text << "  " << key << ": " << json_scalar(value) << '\n';
      }
      break;
    case Format::Json:
      if (all.size() == 1) {
        text << to_json(all.front()).dump(2) << '\n';
      } else {
        ordered_json arr = ordered_json::array();
        for (const auto& inv : all) arr.push_back(to_json(inv));
        text << arr.dump(2) << '\n';
      }
      break;
    case Format::Csv:
      text << "family,n";
      for (const auto& field : all.front().fields) text << ',' << field.first;
      text << '\n';
      for (const auto& inv : all) {
        text << family_letter(inv.family) << ',' << inv.n;
        for (const auto& field : inv.fields) text << ',' << csv_field(json_scalar(field.second));
        text << '\n';
      }
      break;
  }
  write_output(config, text.str(), out);
  return kExitOk;
}

int cmd_verify(const CliConfig& config, std::ostream& out) {
  const auto reports = run_reports(config);
  write_output(config, emit(reports, config.format), out);
  const bool failed =
      std::any_of(reports.begin(), reports.end(), [](const Report& r) { return r.failures() > 0; });
  return failed ? kExitClaimFailure : kExitOk;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Burn loops B_4n and C_4n: construction, invariants and verification", "burnloops"};
  app.set_version_flag("--version", std::string(kToolVersion));
  app.require_subcommand(1);

  std::string family, n_text, format = "text", out_path;
  std::uint64_t seed = 0;
  long long aut_bound = 64, tuple_budget = 10'000'000;
  bool timings = false;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--family", family, "Loop family: B or C")->required();
    sub->add_option("--n", n_text, "n or an inclusive range a..b")->required();
    sub->add_option("--format", format, "json, csv or text")->capture_default_str();
    sub->add_option("--seed", seed, "Seed for sampled checks")->capture_default_str();
    sub->add_option("--out", out_path, "Write output to this file instead of stdout");
    sub->add_option("--aut-bound", aut_bound, "Largest loop order for automorphism searches")->capture_default_str();
    sub->add_option("--tuple-budget", tuple_budget, "Largest number of tuples enumerated for H_k")
        ->capture_default_str();
  };
  auto* construct = app.add_subcommand("construct", "Print the Cayley table with property flags");
  auto* invariants = app.add_subcommand("invariants", "Print the group invariants");
  auto* verify = app.add_subcommand("verify", "Check every claim and emit reports");
  for (auto* sub : {construct, invariants, verify}) common(sub);
  verify->add_flag("--timings", timings, "Record per-phase timings in reports");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    CliConfig config;
    try {
      config.family = parse_family(family);
      config.format = parse_format(format);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
    config.ns = parse_n_range(n_text, config.family);
    if (aut_bound <= 0) throw UsageError("--aut-bound must be positive");
    if (tuple_budget <= 0) throw UsageError("--tuple-budget must be positive");
    config.seed = seed;
    config.aut_bound = static_cast<std::size_t>(aut_bound);
    config.tuple_budget = static_cast<std::size_t>(tuple_budget);
    config.timings = timings;
    if (!out_path.empty()) config.out = out_path;

    if (construct->parsed()) {
      config.command = "construct";
      return cmd_construct(config, out);
    }
    if (invariants->parsed()) {
      config.command = "invariants";
      return cmd_invariants(config, out);
    }
    config.command = "verify";
    return cmd_verify(config, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
}

}  // namespace burnloops::cli
