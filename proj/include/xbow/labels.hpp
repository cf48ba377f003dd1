#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

namespace xbow {

/// Target values keyed by (instance name, time quantized to 1 ms). Entries
/// without a time are keyed by name alone and serve non-windowed data.
class LabelTable {
 public:
  static std::int64_t quantize_time(double seconds);

  /// Throws DataError on a duplicate key.
  void insert(const std::string& name, std::optional<double> time, std::string label);

  const std::string* find(const std::string& name, std::optional<double> time) const;

  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }

 private:
  using Key = std::pair<std::string, std::optional<std::int64_t>>;
  std::map<Key, std::string> entries_;
};

/// Reads "name;time;label" rows, or "name;label" rows for non-windowed data.
/// A first row whose first field is "name", or whose time does not parse,
/// is a header.
LabelTable read_labels(const std::filesystem::path& path);
LabelTable parse_labels(std::string_view text);

}  // namespace xbow
