#pragma once

#include <cstddef>
#include <limits>
#include <map>
#include <string_view>
#include <vector>

#include "xbow/dataset.hpp"

namespace xbow {

enum class ScalingMode { none, standardize, normalize };

std::string_view to_string(ScalingMode mode);
ScalingMode parse_scaling_mode(std::string_view text);

/// x -> (x - offset) / scale, per feature class and dimension.
/// standardize: offset = mean, scale = population standard deviation.
/// normalize:   offset = min,  scale = max - min.
/// A zero scale is stored as 1 so constant features map to 0.
struct ScalingParams {
  ScalingMode mode = ScalingMode::none;
  std::map<int, std::vector<double>> offset;
  std::map<int, std::vector<double>> scale;

  bool operator==(const ScalingParams&) const = default;
};

/// Keeps the frames whose raw value at (feature_class, dim) is >= threshold.
Dataset filter_activity(const Dataset& ds, int feature_class, std::size_t dim,
                        double threshold = -std::numeric_limits<double>::infinity());

ScalingParams fit_scaling(const Dataset& ds, ScalingMode mode);

Dataset apply_scaling(const Dataset& ds, const ScalingParams& params);

}  // namespace xbow
