#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "xbow/dataset.hpp"
#include "xbow/labels.hpp"

namespace xbow {

struct WindowingConfig {
  double width = 0.0;
  double hop = 0.0;

  bool operator==(const WindowingConfig&) const = default;
};

struct Window {
  std::string name;
  std::optional<double> center;
  std::optional<std::string> label;
  std::vector<std::size_t> frames;  // indices into Dataset::frames

  bool operator==(const Window&) const = default;
};

/// Windowed mode: per instance, centers t_k = k * hop for k = 0, 1, ...
/// while t_k does not exceed the instance's last frame time. Window k holds
/// the frames with time in [t_k - width/2, t_k + width/2). With a label
/// table, every (name, t_k) must have a label.
///
/// Without windowing, each instance is one window. Its label comes from the
/// table keyed by name when a table is given, else from the first frame.
std::vector<Window> segment_windows(const Dataset& ds, const std::optional<WindowingConfig>& windowing,
                                    const LabelTable* labels);

/// Text class key used when assembling bags; numeric classes are 1..9.
inline constexpr int kTextClass = 0;

struct SubBag {
  int feature_class = kTextClass;
  std::vector<double> tf;
};

/// Concatenates sub-bags: numeric classes ascending, then text. Every
/// declared class must be present exactly once.
Bag assemble_bag(std::vector<SubBag> parts, const std::vector<int>& declared_classes,
                 std::string name, std::optional<double> time, std::optional<std::string> label);

}  // namespace xbow
