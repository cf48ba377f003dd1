#include "xbow/arff.hpp"

#include <algorithm>
#include <cctype>

#include "xbow/csv.hpp"
#include "xbow/error.hpp"
#include "xbow/number_format.hpp"

namespace xbow {
namespace {

std::string lower(std::string_view s) {
  std::string out(s);
  for (auto& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

bool starts_with_keyword(std::string_view line, std::string_view keyword) {
  if (line.size() < keyword.size()) return false;
  if (lower(line.substr(0, keyword.size())) != keyword) return false;
  return line.size() == keyword.size() || std::isspace(static_cast<unsigned char>(line[keyword.size()]));
}

DataError arff_error(std::size_t line, const std::string& what) {
  return DataError("ARFF line " + std::to_string(line) + ": " + what);
}

// Reads one possibly quoted token starting at pos; advances pos past it.
std::string read_token(std::string_view s, std::size_t& pos, std::size_t line, std::string_view stops) {
  while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  std::string out;
  if (pos < s.size() && (s[pos] == '\'' || s[pos] == '"')) {
    const char q = s[pos++];
    while (true) {
      if (pos >= s.size()) throw arff_error(line, "unterminated quote");
      char c = s[pos++];
      if (c == '\\' && pos < s.size()) {
        c = s[pos++];
      } else if (c == q) {
        break;
      }
      out.push_back(c);
    }
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    return out;
  }
  const std::size_t begin = pos;
  while (pos < s.size() && stops.find(s[pos]) == std::string_view::npos) ++pos;
  return std::string(trim(s.substr(begin, pos - begin)));
}

std::vector<std::string> split_data_row(std::string_view s, std::size_t line) {
  std::vector<std::string> fields;
  std::size_t pos = 0;
  while (true) {
    fields.push_back(read_token(s, pos, line, ","));
    if (pos >= s.size()) break;
    if (s[pos] != ',') throw arff_error(line, "unexpected character after quoted value");
    ++pos;
  }
  return fields;
}

ArffAttribute parse_attribute(std::string_view rest, std::size_t line) {
  ArffAttribute attr;
  std::size_t pos = 0;
  attr.name = read_token(rest, pos, line, " \t{");
  if (attr.name.empty()) throw arff_error(line, "attribute without a name");
  while (pos < rest.size() && std::isspace(static_cast<unsigned char>(rest[pos]))) ++pos;
  const std::string_view type = trim(rest.substr(pos));
  if (!type.empty() && type.front() == '{') {
    const auto close = type.rfind('}');
    if (close == std::string_view::npos) throw arff_error(line, "unterminated nominal value list");
    attr.type = ArffAttribute::Type::nominal;
    const auto inner = type.substr(1, close - 1);
    if (!trim(inner).empty()) attr.nominal_values = split_data_row(inner, line);
    return attr;
  }
  const std::string t = lower(type.substr(0, type.find_first_of(" \t")));
  if (t == "numeric" || t == "real" || t == "integer") {
    attr.type = ArffAttribute::Type::numeric;
  } else if (t == "string" || t == "date") {
    attr.type = ArffAttribute::Type::string;
  } else {
    throw arff_error(line, "unsupported attribute type '" + std::string(type) + "'");
  }
  return attr;
}

}  // namespace

ArffFile parse_arff(std::string_view text) {
  ArffFile file;
  bool in_data = false;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto end = std::min(text.find('\n', pos), text.size());
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    line = trim(line);
    if (line.empty() || line.front() == '%') {
      if (end == text.size()) break;
      continue;
    }
    if (in_data) {
      if (line.front() == '{') throw arff_error(line_no, "sparse ARFF rows are not supported");
      auto fields = split_data_row(line, line_no);
      if (fields.size() != file.attributes.size())
        throw arff_error(line_no, "expected " + std::to_string(file.attributes.size()) + " values, found " +
                                      std::to_string(fields.size()));
      file.rows.push_back(std::move(fields));
      file.row_lines.push_back(line_no);
    } else if (starts_with_keyword(line, "@relation")) {
      std::size_t p = 9;
      file.relation = read_token(line, p, line_no, "");
    } else if (starts_with_keyword(line, "@attribute")) {
      file.attributes.push_back(parse_attribute(line.substr(10), line_no));
    } else if (starts_with_keyword(line, "@data")) {
      in_data = true;
    } else {
      throw arff_error(line_no, "unexpected content before @data");
    }
    if (end == text.size()) break;
  }
  if (!in_data) throw DataError("ARFF: missing @data section");
  return file;
}

AttributeSpec infer_arff_spec(const std::vector<ArffAttribute>& attributes) {
  AttributeSpec spec;
  std::optional<std::size_t> label;
  bool have_name = false;
  bool have_time = false;
  for (std::size_t i = 0; i < attributes.size(); ++i) {
    const ArffAttribute& a = attributes[i];
    const std::string name = lower(a.name);
    ColumnRole role{Role::remove, 0};
    if (!have_name && name == "name" && a.type != ArffAttribute::Type::numeric) {
      role = {Role::name, 0};
      have_name = true;
    } else if (!have_time && (name == "frametime" || name == "time") && a.type == ArffAttribute::Type::numeric) {
      role = {Role::time, 0};
      have_time = true;
    } else if (name == "class" || name == "label" || a.type == ArffAttribute::Type::nominal) {
      if (label) spec.roles[*label] = {Role::remove, 0};
      label = i;
      role = {Role::label, 0};
    } else if (a.type == ArffAttribute::Type::string) {
      role = {Role::text, 0};
    } else {
      role = {Role::numeric, 1};
    }
    spec.roles.push_back(role);
  }
  return spec;
}

std::pair<Dataset, AttributeSpec> parse_arff_dataset(std::string_view text,
                                                     const std::optional<AttributeSpec>& spec) {
  const ArffFile file = parse_arff(text);
  AttributeSpec roles = spec ? *spec : infer_arff_spec(file.attributes);
  if (roles.size() != file.attributes.size())
    throw DataError("ARFF declares " + std::to_string(file.attributes.size()) +
                    " attributes but the attribute spec has " + std::to_string(roles.size()));
  if (!spec) roles = parse_attribute_spec(roles.to_string());  // validates the inferred layout
  std::vector<Frame> frames;
  frames.reserve(file.rows.size());
  for (std::size_t r = 0; r < file.rows.size(); ++r)
    frames.push_back(detail::make_frame(file.rows[r], roles, file.row_lines[r]));
  return {detail::make_dataset(std::move(frames), roles), roles};
}

std::pair<Dataset, AttributeSpec> read_arff(const std::filesystem::path& path,
                                            const std::optional<AttributeSpec>& spec) {
  return parse_arff_dataset(read_text_file(path), spec);
}

}  // namespace xbow
