#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "xbow/codebook.hpp"
#include "xbow/preprocess.hpp"
#include "xbow/quantize.hpp"
#include "xbow/text.hpp"
#include "xbow/windowing.hpp"

namespace xbow {

struct ActivityFilter {
  int feature_class = 1;
  std::size_t dim = 0;
  double threshold = 0.0;

  bool operator==(const ActivityFilter&) const = default;
};

struct SvqConfig {
  std::size_t block_count = 1;
  std::size_t block_size = 1;

  bool operator==(const SvqConfig&) const = default;
};

inline constexpr std::size_t kDefaultCodebookSize = 500;

struct RunConfig {
  std::string input_path;
  std::string output_path;
  std::string labels_path;
  std::string attribute_spec;
  std::optional<WindowingConfig> windowing;
  ScalingMode scaling = ScalingMode::none;
  std::optional<ActivityFilter> activity;

  std::size_t codebook_size = kDefaultCodebookSize;
  GenerationMethod method = GenerationMethod::random_pp;
  bool supervised = false;
  std::optional<SvqConfig> svq;
  std::uint64_t seed = 0;

  std::string write_codebook_path;  // -B
  std::string read_codebook_path;   // -b

  QuantizationConfig quantization;
  TextConfig text;
  bool log = false;
  bool idf = false;
  bool normalize = false;

  bool apply_mode() const { return !read_codebook_path.empty(); }

  bool operator==(const RunConfig&) const = default;
};

struct EvalConfig {
  std::string gold_path;
  std::string pred_path;
  std::string metric;  // "ccc", "wa", "ua", or empty for automatic

  bool operator==(const EvalConfig&) const = default;
};

struct ParsedArgs {
  enum class Action { help, run, eval };

  Action action = Action::help;
  RunConfig run;
  EvalConfig eval;
};

struct FlagInfo {
  std::string_view name;
  std::size_t arity;
  std::string_view arguments;
  std::string_view help;
};

/// Every recognized flag, in help-text order.
std::span<const FlagInfo> flag_table();

std::string help_text();

/// Order-independent. No arguments or -h select help. Throws UsageError.
ParsedArgs parse_args(std::span<const std::string> args);

/// Runs the whole pipeline. Throws Error subclasses, with messages prefixed
/// by the failing stage.
void run_pipeline(const RunConfig& config, std::ostream& log);

/// Prints the requested metrics to out.
void run_eval(const EvalConfig& config, std::ostream& out);

/// Exit codes.
inline constexpr int kExitSuccess = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitData = 2;
inline constexpr int kExitInternal = 3;

/// Entry point behind the openxbow executable; returns the exit code.
int cli_main(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace xbow
