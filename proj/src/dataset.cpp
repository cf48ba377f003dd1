#include "xbow/dataset.hpp"

#include <algorithm>
#include <set>
#include <unordered_map>

#include "xbow/error.hpp"

namespace xbow {

std::vector<std::pair<std::size_t, std::size_t>> Dataset::instance_ranges() const {
  std::vector<std::pair<std::size_t, std::size_t>> ranges;
  std::size_t begin = 0;
  for (std::size_t i = 1; i <= frames.size(); ++i) {
    if (i == frames.size() || frames[i].name != frames[begin].name) {
      ranges.emplace_back(begin, i);
      begin = i;
    }
  }
  return ranges;
}

Matrix Dataset::feature_matrix(int feature_class) const {
  const auto it = dims.find(feature_class);
  if (it == dims.end())
    throw DataError("dataset has no numeric feature class " + std::to_string(feature_class));
  Matrix m(0, 0);
  for (const auto& f : frames) m.append_row(f.numeric.at(feature_class));
  if (m.empty()) m = Matrix(0, it->second);
  return m;
}

void group_frames(Dataset& ds) {
  std::unordered_map<std::string, std::size_t> group_of;
  std::vector<std::size_t> keys;
  keys.reserve(ds.frames.size());
  for (const auto& f : ds.frames) {
    const auto [it, inserted] = group_of.try_emplace(f.name, group_of.size());
    keys.push_back(it->second);
  }
  std::vector<std::size_t> order(ds.frames.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (keys[a] != keys[b]) return keys[a] < keys[b];
    const auto& ta = ds.frames[a].time;
    const auto& tb = ds.frames[b].time;
    if (ta && tb) return *ta < *tb;
    return false;
  });
  std::vector<Frame> sorted;
  sorted.reserve(ds.frames.size());
  for (const auto i : order) sorted.push_back(std::move(ds.frames[i]));
  ds.frames = std::move(sorted);
}

void validate_dataset(const Dataset& ds) {
  std::set<std::string> finished;
  for (std::size_t i = 0; i < ds.frames.size(); ++i) {
    const Frame& f = ds.frames[i];
    for (const auto& [k, d] : ds.dims) {
      const auto it = f.numeric.find(k);
      if (it == f.numeric.end() || it->second.size() != d)
        throw DataError("frame " + std::to_string(i) + " has wrong dimensionality for feature class " +
                        std::to_string(k));
    }
    if (i > 0) {
      const Frame& prev = ds.frames[i - 1];
      if (prev.name != f.name) {
        finished.insert(prev.name);
        if (finished.count(f.name))
          throw DataError("frames of instance '" + f.name + "' are not contiguous");
      } else if (prev.time && f.time && *f.time < *prev.time) {
        throw DataError("frames of instance '" + f.name + "' are not sorted by time");
      }
    }
  }
}

}  // namespace xbow
