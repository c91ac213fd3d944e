#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

namespace patch_contact::cli {

enum class OutputFormat { records, pretty };

/// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUnsatisfied = 1;
inline constexpr int kExitInputError = 2;

struct Options {
  std::optional<double> tol;  // overrides the scenario tolerance when set
  std::uint64_t seed = 0;
  std::size_t count = 1000;
  std::string out_dir = ".";
  OutputFormat format = OutputFormat::records;
};

int cmd_check(const std::string& scenario_file, const Options& opts, std::ostream& out, std::ostream& err);
int cmd_classify(const std::string& scenario_file, const Options& opts, std::ostream& out, std::ostream& err);
int cmd_synthesize(const std::string& scenario_file, const Options& opts, std::ostream& out, std::ostream& err);
/// Writes <out_dir>/<case name>.svg per case.
int cmd_render(const std::string& scenario_file, const Options& opts, std::ostream& out, std::ostream& err);
/// Property suite on the given patch file, or on seeded random patches when
/// patch_file is empty.
int cmd_oracle(const std::string& patch_file, const Options& opts, std::ostream& out, std::ostream& err);

}  // namespace patch_contact::cli
