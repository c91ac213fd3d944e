#include <iostream>
#include <map>

#include "CLI11.hpp"
#include "commands.hpp"

using patch_contact::cli::OutputFormat;

int main(int argc, char** argv) {
  CLI::App app{"Planar contact patches: Signorini checks, regimes, extended center of pressure"};
  app.require_subcommand(1);

  patch_contact::cli::Options opts;
  double tol = 0.0;
  std::string scenario_file;
  std::string patch_file;
  const std::map<std::string, OutputFormat> formats{{"records", OutputFormat::records},
                                                    {"pretty", OutputFormat::pretty}};

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--tol", tol, "Relative tolerance (default 1e-9, or the scenario's tol)")
        ->check(CLI::NonNegativeNumber);
    sub->add_option("--format", opts.format, "Output format: records or pretty")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
  };

  auto* check = app.add_subcommand("check", "Evaluate the planar Signorini condition for each case");
  check->add_option("scenario", scenario_file, "Scenario file")->required();
  add_common(check);

  auto* classify = app.add_subcommand("classify", "Report the contact regime of each case");
  classify->add_option("scenario", scenario_file, "Scenario file")->required();
  add_common(classify);

  auto* synthesize = app.add_subcommand("synthesize", "Emit a compatible normal force distribution per case");
  synthesize->add_option("scenario", scenario_file, "Scenario file")->required();
  add_common(synthesize);

  auto* render = app.add_subcommand("render", "Write one SVG figure per case");
  render->add_option("scenario", scenario_file, "Scenario file")->required();
  render->add_option("--out", opts.out_dir, "Output directory")->required();
  add_common(render);

  auto* oracle = app.add_subcommand("oracle", "Run the pointwise equivalence property suite");
  oracle->add_option("patch", patch_file, "File with a \"patch\" member; random patches when omitted");
  oracle->add_option("--seed", opts.seed, "Base seed");
  oracle->add_option("--count", opts.count, "Instances per property");
  add_common(oracle);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : patch_contact::cli::kExitInputError;
  }

  for (auto* sub : app.get_subcommands()) {
    if (sub->count("--tol") > 0) opts.tol = tol;
  }

  if (*check) return patch_contact::cli::cmd_check(scenario_file, opts, std::cout, std::cerr);
  if (*classify) return patch_contact::cli::cmd_classify(scenario_file, opts, std::cout, std::cerr);
  if (*synthesize) return patch_contact::cli::cmd_synthesize(scenario_file, opts, std::cout, std::cerr);
  if (*render) return patch_contact::cli::cmd_render(scenario_file, opts, std::cout, std::cerr);
  if (*oracle) return patch_contact::cli::cmd_oracle(patch_file, opts, std::cout, std::cerr);
  return patch_contact::cli::kExitInputError;
}
