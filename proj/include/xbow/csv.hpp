#pragma once

#include <cstddef>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "xbow/attribute_spec.hpp"
#include "xbow/dataset.hpp"

namespace xbow {

struct CsvRecord {
  std::size_t line = 0;  // 1-based line where the record starts
  std::vector<std::string> fields;
};

/// Splits CSV text into records. Fields may be double-quoted, a doubled
/// quote inside quotes is a literal quote, and quoted fields may contain
/// separators and line breaks. Blank lines are skipped; "\r\n" is accepted.
std::vector<CsvRecord> parse_csv(std::string_view text, char separator = ';');

/// Renders one record, quoting only the fields that need it.
std::string render_csv_record(const std::vector<std::string>& fields, char separator = ';');

std::string read_text_file(const std::filesystem::path& path);

/// Field count of the first record; 0 for an empty file.
std::size_t csv_column_count(const std::filesystem::path& path);

/// Reads a semicolon-separated input file. The first record is taken as a
/// header when one of its time or numeric fields does not parse as a
/// number, or when its name field is literally "name".
Dataset read_csv(const std::filesystem::path& path, const AttributeSpec& spec);

/// Same as read_csv, on in-memory text.
Dataset parse_csv_dataset(std::string_view text, const AttributeSpec& spec);

namespace detail {
/// Turns already split fields into a frame according to spec. Throws
/// DataError mentioning line when a numeric field does not parse.
Frame make_frame(const std::vector<std::string>& fields, const AttributeSpec& spec,
                 std::size_t line);
/// Builds a Dataset from frames: records dims and flags, groups by name.
Dataset make_dataset(std::vector<Frame> frames, const AttributeSpec& spec);
}  // namespace detail

}  // namespace xbow
