#include "xbow/windowing.hpp"

#include <algorithm>
#include <cmath>

#include "xbow/error.hpp"
#include "xbow/number_format.hpp"

namespace xbow {
namespace {

// Absorbs representation error of decimal times such as k * 0.8.
constexpr double kTimeEpsilon = 1e-9;

int order_key(int feature_class) { return feature_class == kTextClass ? 10 : feature_class; }

}  // namespace

std::vector<Window> segment_windows(const Dataset& ds, const std::optional<WindowingConfig>& windowing,
                                    const LabelTable* labels) {
  std::vector<Window> windows;
  const auto ranges = ds.instance_ranges();

  if (!windowing) {
    for (const auto& [begin, end] : ranges) {
      Window w;
      w.name = ds.frames[begin].name;
      for (std::size_t i = begin; i < end; ++i) w.frames.push_back(i);
      if (labels) {
        const std::string* label = labels->find(w.name, std::nullopt);
        if (!label) throw DataError("no label for instance '" + w.name + "'");
        w.label = *label;
      } else {
        w.label = ds.frames[begin].label;
      }
      windows.push_back(std::move(w));
    }
    return windows;
  }

  const double width = windowing->width;
  const double hop = windowing->hop;
  if (!(width > 0.0) || !(hop > 0.0)) throw DataError("window width and hop must be positive");
  for (std::size_t i = 0; i < ds.frames.size(); ++i)
    if (!ds.frames[i].time) throw DataError("windowing needs a time for every frame; frame " + std::to_string(i) + " has none");

  for (const auto& [begin, end] : ranges) {
    const std::string& name = ds.frames[begin].name;
    const double last = *ds.frames[end - 1].time;
    std::size_t first_in = begin;
    std::size_t past_end = begin;
    for (std::size_t k = 0;; ++k) {
      const double center = static_cast<double>(k) * hop;
      if (center > last + kTimeEpsilon) break;
      const double lo = center - width / 2.0 - kTimeEpsilon;
      const double hi = center + width / 2.0 - kTimeEpsilon;
      while (first_in < end && *ds.frames[first_in].time < lo) ++first_in;
      past_end = std::max(past_end, first_in);
      while (past_end < end && *ds.frames[past_end].time < hi) ++past_end;

      Window w;
      w.name = name;
      w.center = center;
      for (std::size_t i = first_in; i < past_end; ++i) w.frames.push_back(i);
      if (labels) {
        const std::string* label = labels->find(name, center);
        if (!label)
          throw DataError("no label for instance '" + name + "' at time " +
                          format_number(static_cast<double>(LabelTable::quantize_time(center)) / 1000.0) + " s");
        w.label = *label;
      }
      windows.push_back(std::move(w));
    }
  }
  return windows;
}

Bag assemble_bag(std::vector<SubBag> parts, const std::vector<int>& declared_classes, std::string name,
                 std::optional<double> time, std::optional<std::string> label) {
  std::vector<int> expected = declared_classes;
  std::sort(expected.begin(), expected.end(), [](int a, int b) { return order_key(a) < order_key(b); });
  std::stable_sort(parts.begin(), parts.end(),
                   [](const SubBag& a, const SubBag& b) { return order_key(a.feature_class) < order_key(b.feature_class); });

  const auto describe = [](int k) { return k == kTextClass ? std::string("text") : "feature class " + std::to_string(k); };
  for (const int k : expected) {
    const auto n = std::count_if(parts.begin(), parts.end(), [&](const SubBag& p) { return p.feature_class == k; });
    if (n == 0) throw DataError("missing sub-bag for " + describe(k));
    if (n > 1) throw DataError("more than one sub-bag for " + describe(k));
  }
  for (const auto& p : parts)
    if (std::find(expected.begin(), expected.end(), p.feature_class) == expected.end())
      throw DataError("unexpected sub-bag for " + describe(p.feature_class));

  Bag bag;
  bag.name = std::move(name);
  bag.time = time;
  bag.label = std::move(label);
  for (const auto& p : parts) bag.tf.insert(bag.tf.end(), p.tf.begin(), p.tf.end());
  return bag;
}

}  // namespace xbow
