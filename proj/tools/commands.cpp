#include "commands.hpp"

#include <filesystem>
#include <fstream>
#include <ostream>
#include <set>
#include <vector>

#include "patch_contact/cones.hpp"
#include "patch_contact/oracle.hpp"
#include "patch_contact/random.hpp"
#include "patch_contact/signorini.hpp"
#include "records.hpp"
#include "scenario.hpp"
#include "svg.hpp"

namespace patch_contact::cli {

namespace {

double resolve_tol(const Scenario& s, const Options& opts) {
  if (opts.tol) return *opts.tol;
  if (s.tol) return *s.tol;
  return kDefaultTol;
}

std::optional<Scenario> load_or_report(const std::string& file, std::ostream& err) {
  try {
    return load_scenario(file);
  } catch (const ScenarioError& e) {
    err << "error: " << e.what() << "\n";
    return std::nullopt;
  }
}

std::string file_stem_for(const std::string& name) {
  std::string out;
  for (char c : name) {
    const bool keep = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '-' ||
                      c == '_' || c == '.';
    out += keep ? c : '_';
  }
  if (out.empty() || out.front() == '.') out = "_" + out;
  return out;
}

}  // namespace

int cmd_check(const std::string& scenario_file, const Options& opts, std::ostream& out, std::ostream& err) {
  const auto scenario = load_or_report(scenario_file, err);
  if (!scenario) return kExitInputError;
  const double tol = resolve_tol(*scenario, opts);
  const PatchCone cone(scenario->patch);
  bool all = true;
  for (const ScenarioCase& c : scenario->cases) {
    const Verdict v = check(cone, c.wrench, c.twist, tol);
    all = all && v.satisfied;
    out << (opts.format == OutputFormat::records ? verdict_record(c.name, v) + "\n" : verdict_pretty(c.name, v));
  }
  return all ? kExitOk : kExitUnsatisfied;
}

int cmd_classify(const std::string& scenario_file, const Options& opts, std::ostream& out, std::ostream& err) {
  const auto scenario = load_or_report(scenario_file, err);
  if (!scenario) return kExitInputError;
  const double tol = resolve_tol(*scenario, opts);
  const PatchCone cone(scenario->patch);
  bool all = true;
  for (const ScenarioCase& c : scenario->cases) {
    const Verdict v = check(cone, c.wrench, c.twist, tol);
    all = all && v.satisfied;
    out << (opts.format == OutputFormat::records ? regime_record(c.name, v) + "\n" : regime_pretty(c.name, v));
  }
  return all ? kExitOk : kExitUnsatisfied;
}

int cmd_synthesize(const std::string& scenario_file, const Options& opts, std::ostream& out, std::ostream& err) {
  const auto scenario = load_or_report(scenario_file, err);
  if (!scenario) return kExitInputError;
  const double tol = resolve_tol(*scenario, opts);
  bool all = true;
  for (const ScenarioCase& c : scenario->cases) {
    ForceDistribution dist;
    std::string error;
    try {
      dist = synthesize_distribution(scenario->patch, c.wrench, c.twist, tol);
    } catch (const NotComplementary&) {
      error = "not_complementary";
    } catch (const SynthesisFailure&) {
      error = "synthesis_failure";
    }
    all = all && error.empty();
    out << (opts.format == OutputFormat::records ? synthesis_record(c.name, dist, error) + "\n"
                                                 : synthesis_pretty(c.name, dist, error));
  }
  return all ? kExitOk : kExitUnsatisfied;
}

int cmd_render(const std::string& scenario_file, const Options& opts, std::ostream& out, std::ostream& err) {
  const auto scenario = load_or_report(scenario_file, err);
  if (!scenario) return kExitInputError;
  const double tol = resolve_tol(*scenario, opts);

  namespace fs = std::filesystem;
  std::error_code ec;
  fs::create_directories(opts.out_dir, ec);
  if (ec || !fs::is_directory(opts.out_dir)) {
    err << "error: cannot create output directory " << opts.out_dir << "\n";
    return kExitInputError;
  }

  const PatchCone cone(scenario->patch);
  std::set<std::string> used;
  bool all = true;
  for (std::size_t i = 0; i < scenario->cases.size(); ++i) {
    const ScenarioCase& c = scenario->cases[i];
    const Verdict v = check(cone, c.wrench, c.twist, tol);
    all = all && v.satisfied;
    std::string stem = file_stem_for(c.name);
    if (!used.insert(stem).second) {
      stem += "_" + std::to_string(i);
      used.insert(stem);
    }
    const fs::path path = fs::path(opts.out_dir) / (stem + ".svg");
    std::ofstream file(path, std::ios::binary);
    file << render_svg(c.name, scenario->patch, c.wrench, v);
    if (!file) {
      err << "error: cannot write " << path.string() << "\n";
      return kExitInputError;
    }
    out << path.string() << "\n";
  }
  return all ? kExitOk : kExitUnsatisfied;
}

int cmd_oracle(const std::string& patch_file, const Options& opts, std::ostream& out, std::ostream& err) {
  if (opts.count < 1) {
    err << "error: --count must be at least 1\n";
    return kExitInputError;
  }
  std::vector<Patch> patches;
  if (!patch_file.empty()) {
    try {
      patches.push_back(load_patch(patch_file));
    } catch (const ScenarioError& e) {
      err << "error: " << e.what() << "\n";
      return kExitInputError;
    }
  } else {
    patches.push_back(oracle::random_convex_polygon(derive_seed(opts.seed, 0)));
    patches.push_back(oracle::random_convex_polygon(derive_seed(opts.seed, 1)));
    patches.push_back(oracle::random_star_polygon(derive_seed(opts.seed, 2)));
    patches.push_back(oracle::random_ellipse(derive_seed(opts.seed, 3)));
  }
  const double tol = opts.tol.value_or(kDefaultTol);

  bool all = true;
  for (std::size_t i = 0; i < patches.size(); ++i) {
    const auto summary = oracle::run_property_suite(patches[i], derive_seed(opts.seed, 100 + i), opts.count, tol);
    all = all && summary.all_passed();
    for (const auto& p : summary.properties) {
      if (opts.format == OutputFormat::records) {
        out << "{\"patch\":" << i << ",\"property\":\"" << p.name << "\",\"passed\":" << p.passed
            << ",\"failed\":" << p.failed << ",\"worst\":" << format_number(p.worst) << "}\n";
      } else {
        char line[160];
        std::snprintf(line, sizeof line, "patch %zu  %-28s passed %6zu  failed %6zu  worst %.3e\n", i,
                      p.name.c_str(), p.passed, p.failed, p.worst);
        out << line;
      }
    }
  }
  if (opts.format == OutputFormat::pretty) out << (all ? "all properties passed\n" : "some properties FAILED\n");
  return all ? kExitOk : kExitUnsatisfied;
}

}  // namespace patch_contact::cli
