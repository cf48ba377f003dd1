#include "xbow/csv.hpp"

#include <fstream>
#include <sstream>

#include "xbow/error.hpp"
#include "xbow/number_format.hpp"

namespace xbow {

std::vector<CsvRecord> parse_csv(std::string_view text, char separator) {
  std::vector<CsvRecord> records;
  std::size_t pos = 0;
  std::size_t line = 1;
  const std::size_t n = text.size();

  const auto at_eol = [&](std::size_t p) {
    return p >= n || text[p] == '\n' || (text[p] == '\r' && p + 1 < n && text[p + 1] == '\n') ||
           (text[p] == '\r' && p + 1 == n);
  };
  const auto skip_eol = [&](std::size_t& p) {
    if (p < n && text[p] == '\r') ++p;
    if (p < n && text[p] == '\n') ++p;
    ++line;
  };

  while (pos < n) {
    if (at_eol(pos)) {  // blank line
      skip_eol(pos);
      continue;
    }
    CsvRecord record;
    record.line = line;
    while (true) {
      std::string field;
      if (text[pos] == '"') {
        const std::size_t quote_line = line;
        ++pos;
        while (true) {
          if (pos >= n)
            throw DataError("line " + std::to_string(quote_line) + ": unterminated quoted field");
          const char c = text[pos];
          if (c == '"') {
            if (pos + 1 < n && text[pos + 1] == '"') {
              field.push_back('"');
              pos += 2;
              continue;
            }
            ++pos;
            break;
          }
          if (c == '\n') ++line;
          field.push_back(c);
          ++pos;
        }
      }
      while (!at_eol(pos) && text[pos] != separator) field.push_back(text[pos++]);
      record.fields.push_back(std::move(field));
      if (at_eol(pos)) break;
      ++pos;  // separator
    }
    records.push_back(std::move(record));
    if (pos < n) skip_eol(pos);
  }
  return records;
}

std::string render_csv_record(const std::vector<std::string>& fields, char separator) {
  std::string out;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i > 0) out.push_back(separator);
    const std::string& f = fields[i];
    const bool quote = f.find_first_of(std::string{separator, '"', '\n', '\r'}) != std::string::npos ||
                       (fields.size() == 1 && f.empty());
    if (!quote) {
      out += f;
      continue;
    }
    out.push_back('"');
    for (const char c : f) {
      if (c == '"') out.push_back('"');
      out.push_back(c);
    }
    out.push_back('"');
  }
  return out;
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::size_t csv_column_count(const std::filesystem::path& path) {
  const auto records = parse_csv(read_text_file(path));
  return records.empty() ? 0 : records.front().fields.size();
}

namespace detail {

Frame make_frame(const std::vector<std::string>& fields, const AttributeSpec& spec, std::size_t line) {
  Frame frame;
  for (std::size_t c = 0; c < spec.roles.size(); ++c) {
    const ColumnRole& role = spec.roles[c];
    const std::string& value = fields[c];
    switch (role.role) {
      case Role::name: frame.name = value; break;
      case Role::label: frame.label = value; break;
      case Role::remove: break;
      case Role::text:
        if (frame.text) {
          *frame.text += ' ';
          *frame.text += value;
        } else {
          frame.text = value;
        }
        break;
      case Role::time:
      case Role::numeric: {
        const auto number = parse_number(value);
        if (!number)
          throw DataError("line " + std::to_string(line) + ", column " + std::to_string(c + 1) +
                          ": '" + value + "' is not a number");
        if (role.role == Role::time)
          frame.time = *number;
        else
          frame.numeric[role.feature_class].push_back(*number);
        break;
      }
    }
  }
  return frame;
}

Dataset make_dataset(std::vector<Frame> frames, const AttributeSpec& spec) {
  Dataset ds;
  ds.frames = std::move(frames);
  for (const int k : spec.feature_classes()) ds.dims[k] = spec.dims(k);
  ds.has_time = spec.has(Role::time);
  ds.has_label = spec.has(Role::label);
  ds.has_text = spec.has_text();
  group_frames(ds);
  validate_dataset(ds);
  return ds;
}

}  // namespace detail

namespace {

bool looks_like_header(const std::vector<std::string>& fields, const AttributeSpec& spec) {
  for (std::size_t c = 0; c < spec.roles.size() && c < fields.size(); ++c) {
    const Role r = spec.roles[c].role;
    if ((r == Role::time || r == Role::numeric) && !parse_number(fields[c])) return true;
    if (r == Role::name && fields[c] == "name") return true;
  }
  return false;
}

}  // namespace

Dataset parse_csv_dataset(std::string_view text, const AttributeSpec& spec) {
  const auto records = parse_csv(text);
  std::vector<Frame> frames;
  frames.reserve(records.size());
  for (std::size_t i = 0; i < records.size(); ++i) {
    const CsvRecord& rec = records[i];
    if (rec.fields.size() != spec.size())
      throw DataError("line " + std::to_string(rec.line) + ": expected " + std::to_string(spec.size()) +
                      " fields, found " + std::to_string(rec.fields.size()));
    if (i == 0 && looks_like_header(rec.fields, spec)) continue;
    frames.push_back(detail::make_frame(rec.fields, spec, rec.line));
  }
  return detail::make_dataset(std::move(frames), spec);
}

Dataset read_csv(const std::filesystem::path& path, const AttributeSpec& spec) {
  return parse_csv_dataset(read_text_file(path), spec);
}

}  // namespace xbow
