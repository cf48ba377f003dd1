#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "xbow/matrix.hpp"

namespace xbow {

/// One input row.
struct Frame {
  std::string name;
  std::optional<double> time;
  std::optional<std::string> label;
  std::map<int, std::vector<double>> numeric;  // feature class -> values
  std::optional<std::string> text;

  bool operator==(const Frame&) const = default;
};

struct Dataset {
  std::vector<Frame> frames;
  std::map<int, std::size_t> dims;  // feature class -> dimensionality
  bool has_time = false;
  bool has_label = false;
  bool has_text = false;

  bool empty() const { return frames.empty(); }

  /// Half-open [begin, end) ranges of frames sharing a name, in order.
  std::vector<std::pair<std::size_t, std::size_t>> instance_ranges() const;

  /// All frames' vectors for one feature class, one row per frame.
  Matrix feature_matrix(int feature_class) const;

  bool operator==(const Dataset&) const = default;
};

/// Groups frames by name in order of first appearance and sorts each group
/// by time (stable), establishing the Dataset ordering invariant.
void group_frames(Dataset& ds);

/// Checks per-class dimensionality and the grouping invariant.
void validate_dataset(const Dataset& ds);

/// One output instance.
struct Bag {
  std::string name;
  std::optional<double> time;
  std::optional<std::string> label;
  std::vector<double> tf;

  bool operator==(const Bag&) const = default;
};

}  // namespace xbow
