#include "xbow/labels.hpp"

#include <cmath>

#include "xbow/csv.hpp"
#include "xbow/error.hpp"
#include "xbow/number_format.hpp"

namespace xbow {

std::int64_t LabelTable::quantize_time(double seconds) {
  return static_cast<std::int64_t>(std::llround(seconds * 1000.0));
}

void LabelTable::insert(const std::string& name, std::optional<double> time, std::string label) {
  Key key{name, time ? std::optional<std::int64_t>(quantize_time(*time)) : std::nullopt};
  const auto [it, inserted] = entries_.emplace(std::move(key), std::move(label));
  if (!inserted)
    throw DataError("duplicate label for instance '" + name + "'" +
                    (time ? " at time " + format_number(*time) : std::string()));
}

const std::string* LabelTable::find(const std::string& name, std::optional<double> time) const {
  const Key key{name, time ? std::optional<std::int64_t>(quantize_time(*time)) : std::nullopt};
  const auto it = entries_.find(key);
  return it == entries_.end() ? nullptr : &it->second;
}

LabelTable parse_labels(std::string_view text) {
  LabelTable table;
  const auto records = parse_csv(text);
  for (std::size_t i = 0; i < records.size(); ++i) {
    const CsvRecord& rec = records[i];
    const auto& f = rec.fields;
    if (f.size() != 2 && f.size() != 3)
      throw DataError("labels line " + std::to_string(rec.line) +
                      ": expected name;time;label or name;label, found " + std::to_string(f.size()) +
                      " fields");
    if (i == 0 && (f[0] == "name" || (f.size() == 3 && !parse_number(f[1])))) continue;
    if (f.size() == 2) {
      table.insert(f[0], std::nullopt, f[1]);
      continue;
    }
    const auto time = parse_number(f[1]);
    if (!time || !std::isfinite(*time))
      throw DataError("labels line " + std::to_string(rec.line) + ": malformed time '" + f[1] + "'");
    try {
      table.insert(f[0], *time, f[2]);
    } catch (const DataError& e) {
      throw DataError("labels line " + std::to_string(rec.line) + ": " + e.what());
    }
  }
  return table;
}

LabelTable read_labels(const std::filesystem::path& path) { return parse_labels(read_text_file(path)); }

}  // namespace xbow
