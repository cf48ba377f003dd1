#include "xbow/preprocess.hpp"

#include <algorithm>
#include <cmath>

#include "xbow/error.hpp"

namespace xbow {

std::string_view to_string(ScalingMode mode) {
  switch (mode) {
    case ScalingMode::none: return "none";
    case ScalingMode::standardize: return "standardize";
    case ScalingMode::normalize: return "normalize";
  }
  return "none";
}

ScalingMode parse_scaling_mode(std::string_view text) {
  if (text == "none") return ScalingMode::none;
  if (text == "standardize") return ScalingMode::standardize;
  if (text == "normalize") return ScalingMode::normalize;
  throw DataError("unknown scaling mode '" + std::string(text) + "'");
}

Dataset filter_activity(const Dataset& ds, int feature_class, std::size_t dim, double threshold) {
  const auto it = ds.dims.find(feature_class);
  if (it == ds.dims.end())
    throw DataError("activity filter: no numeric feature class " + std::to_string(feature_class));
  if (dim >= it->second)
    throw DataError("activity filter: dimension " + std::to_string(dim) + " out of range for class " +
                    std::to_string(feature_class) + " with " + std::to_string(it->second) + " dimensions");
  Dataset out = ds;
  out.frames.clear();
  for (const Frame& f : ds.frames)
    if (f.numeric.at(feature_class)[dim] >= threshold) out.frames.push_back(f);
  return out;
}

ScalingParams fit_scaling(const Dataset& ds, ScalingMode mode) {
  ScalingParams p;
  p.mode = mode;
  if (mode == ScalingMode::none) return p;
  for (const auto& [k, dims] : ds.dims) {
    if (ds.frames.empty())
      throw DataError("cannot fit scaling: no frames for feature class " + std::to_string(k));
    std::vector<double> offset(dims, 0.0);
    std::vector<double> scale(dims, 0.0);
    const double n = static_cast<double>(ds.frames.size());
    if (mode == ScalingMode::standardize) {
      for (const Frame& f : ds.frames) {
        const auto& x = f.numeric.at(k);
        for (std::size_t d = 0; d < dims; ++d) offset[d] += x[d];
      }
      for (auto& m : offset) m /= n;
      for (const Frame& f : ds.frames) {
        const auto& x = f.numeric.at(k);
        for (std::size_t d = 0; d < dims; ++d) {
          const double c = x[d] - offset[d];
          scale[d] += c * c;
        }
      }
      for (auto& s : scale) s = std::sqrt(s / n);
    } else {
      std::vector<double> hi(dims, -HUGE_VAL);
      std::fill(offset.begin(), offset.end(), HUGE_VAL);
      for (const Frame& f : ds.frames) {
        const auto& x = f.numeric.at(k);
        for (std::size_t d = 0; d < dims; ++d) {
          offset[d] = std::min(offset[d], x[d]);
          hi[d] = std::max(hi[d], x[d]);
        }
      }
      for (std::size_t d = 0; d < dims; ++d) scale[d] = hi[d] - offset[d];
    }
    for (auto& s : scale)
      if (s == 0.0) s = 1.0;
    p.offset[k] = std::move(offset);
    p.scale[k] = std::move(scale);
  }
  return p;
}

Dataset apply_scaling(const Dataset& ds, const ScalingParams& params) {
  if (params.mode == ScalingMode::none) return ds;
  for (const auto& [k, dims] : ds.dims) {
    const auto o = params.offset.find(k);
    const auto s = params.scale.find(k);
    if (o == params.offset.end() || s == params.scale.end())
      throw DataError("scaling parameters missing for feature class " + std::to_string(k));
    if (o->second.size() != dims || s->second.size() != dims)
      throw DataError("scaling parameters for feature class " + std::to_string(k) + " have " +
                      std::to_string(o->second.size()) + " dimensions, data has " + std::to_string(dims));
  }
  Dataset out = ds;
  for (Frame& f : out.frames) {
    for (auto& [k, x] : f.numeric) {
      const auto& offset = params.offset.at(k);
      const auto& scale = params.scale.at(k);
      for (std::size_t d = 0; d < x.size(); ++d) x[d] = (x[d] - offset[d]) / scale[d];
    }
  }
  return out;
}

}  // namespace xbow
