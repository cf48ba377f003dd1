#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "xbow/dataset.hpp"

namespace xbow {

struct WeightingState {
  bool log = false;
  bool idf = false;
  std::vector<std::size_t> df;  // per bag dimension, only with idf
  std::size_t n = 0;            // training bag count, only with idf

  bool operator==(const WeightingState&) const = default;
};

/// Sizes of the consecutive sub-bags that make up a bag.
using BagLayout = std::vector<std::size_t>;

/// x -> log10(x + 1). Throws on negative entries.
std::vector<double> apply_log_tf(std::span<const double> tf);

/// Document frequencies over training bags; sets idf and n.
WeightingState fit_idf(std::span<const Bag> bags);

/// x -> x * log10(n / df); dimensions never seen in training map to 0.
std::vector<double> apply_idf(std::span<const double> tf, const WeightingState& state);

/// Divides each sub-bag by its L1 mass; zero sub-bags stay zero.
std::vector<double> normalize_bag(std::span<const double> tf, const BagLayout& layout);

/// log (if set), then idf (if set), then normalize (if requested).
std::vector<double> postprocess(std::span<const double> tf, const WeightingState& state,
                                bool normalize, const BagLayout& layout);

}  // namespace xbow
