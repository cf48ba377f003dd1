#pragma once

#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "xbow/postprocess.hpp"
#include "xbow/preprocess.hpp"
#include "xbow/quantize.hpp"
#include "xbow/text.hpp"

namespace xbow {

struct TextModel {
  Dictionary dictionary;
  TextConfig config;  // settings used at training time; informational

  bool operator==(const TextModel&) const = default;
};

/// Everything a training run learns and an apply run reuses.
struct Codebook {
  ScalingParams scaling;
  WeightingState weighting;
  bool normalize = false;
  std::map<int, NumericQuantizer> numeric;  // feature class -> quantizer
  std::optional<TextModel> text;

  /// Sub-bag sizes in bag order: numeric classes ascending, then text.
  BagLayout layout() const;
  std::size_t bag_size() const;

  bool operator==(const Codebook&) const = default;
};

inline constexpr std::string_view kCodebookFormatVersion = "v1";

/// Line-oriented text format:
///
///   openxbow-codebook v1
///   [scaling]      mode, then "class <k> <dims>" with offset and scale lines
///   [weighting]    log/idf/norm flags, n and the df table
///   [codebook <k>] one numeric quantizer: header lines, then one centroid per line
///   [text]         n-gram settings and one dictionary term per line
///   [end]
///
/// Numbers use the shortest round-trip decimal form, so a reloaded codebook
/// reproduces its bags bit for bit.
void save_codebook(const Codebook& cb, std::ostream& out);
void save_codebook(const Codebook& cb, const std::filesystem::path& path);

Codebook load_codebook(std::istream& in);
Codebook load_codebook(const std::filesystem::path& path);

}  // namespace xbow
