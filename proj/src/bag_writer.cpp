#include "xbow/bag_writer.hpp"

#include <algorithm>
#include <map>
#include <ostream>

#include "xbow/csv.hpp"
#include "xbow/error.hpp"
#include "xbow/file_util.hpp"
#include "xbow/number_format.hpp"

namespace xbow {
namespace {

struct Columns {
  bool name = false;
  bool time = false;
  bool label = false;
  bool numeric_label = true;
  std::vector<std::string> label_values;  // first-appearance order
  std::size_t width = 0;
};

Columns inspect(std::span<const Bag> bags) {
  if (bags.empty()) throw DataError("nothing to write: no bags");
  Columns c;
  c.width = bags.front().tf.size();
  for (const Bag& b : bags) {
    if (b.tf.size() != c.width)
      throw DataError("inconsistent bag lengths: " + std::to_string(b.tf.size()) + " vs " +
                      std::to_string(c.width));
    c.name = c.name || !b.name.empty();
    c.time = c.time || b.time.has_value();
    if (b.label) {
      c.label = true;
      if (!parse_number(*b.label)) c.numeric_label = false;
      if (std::find(c.label_values.begin(), c.label_values.end(), *b.label) == c.label_values.end())
        c.label_values.push_back(*b.label);
    }
  }
  return c;
}

std::string arff_quote(const std::string& s) {
  std::string out = "'";
  for (const char ch : s) {
    if (ch == '\'' || ch == '\\') out.push_back('\\');
    out.push_back(ch);
  }
  out.push_back('\'');
  return out;
}

std::string arff_nominal(const std::string& s) {
  const bool plain = !s.empty() && s.find_first_of(" \t,{}'\"%\\") == std::string::npos && s != "?";
  return plain ? s : arff_quote(s);
}

void write_arff(std::span<const Bag> bags, const Columns& c, std::ostream& out) {
  out << "@relation openXBOW\n\n";
  if (c.name) out << "@attribute name string\n";
  if (c.time) out << "@attribute frameTime numeric\n";
  for (std::size_t i = 0; i < c.width; ++i) out << "@attribute tf_" << i << " numeric\n";
  if (c.label) {
    out << "@attribute class ";
    if (c.numeric_label) {
      out << "numeric\n";
    } else {
      out << '{';
      for (std::size_t i = 0; i < c.label_values.size(); ++i)
        out << (i ? "," : "") << arff_nominal(c.label_values[i]);
      out << "}\n";
    }
  }
  out << "\n@data\n";
  for (const Bag& b : bags) {
    std::string line;
    const auto add = [&](const std::string& v) {
      if (!line.empty()) line.push_back(',');
      line += v;
    };
    if (c.name) add(arff_quote(b.name));
    if (c.time) add(b.time ? format_number(*b.time) : "?");
    for (const double v : b.tf) add(format_number(v));
    if (c.label) add(!b.label ? "?" : c.numeric_label ? *b.label : arff_nominal(*b.label));
    out << line << '\n';
  }
}

void write_csv(std::span<const Bag> bags, const Columns& c, std::ostream& out) {
  std::vector<std::string> header;
  if (c.name) header.emplace_back("name");
  if (c.time) header.emplace_back("frameTime");
  for (std::size_t i = 0; i < c.width; ++i) header.push_back("tf_" + std::to_string(i));
  if (c.label) header.emplace_back("class");
  out << render_csv_record(header) << '\n';
  for (const Bag& b : bags) {
    std::vector<std::string> row;
    row.reserve(header.size());
    if (c.name) row.push_back(b.name);
    if (c.time) row.push_back(b.time ? format_number(*b.time) : "");
    for (const double v : b.tf) row.push_back(format_number(v));
    if (c.label) row.push_back(b.label.value_or(""));
    out << render_csv_record(row) << '\n';
  }
}

void write_libsvm(std::span<const Bag> bags, const Columns& c, std::ostream& out) {
  std::map<std::string, std::size_t> class_index;
  for (std::size_t i = 0; i < c.label_values.size(); ++i) class_index[c.label_values[i]] = i;
  for (const Bag& b : bags) {
    if (!b.label)
      out << '0';
    else if (c.numeric_label)
      out << format_number(*parse_number(*b.label));
    else
      out << class_index.at(*b.label);
    for (std::size_t i = 0; i < b.tf.size(); ++i)
      if (b.tf[i] != 0.0) out << ' ' << (i + 1) << ':' << format_number(b.tf[i]);
    out << '\n';
  }
}

}  // namespace

OutputFormat format_from_extension(const std::filesystem::path& path) {
  std::string ext = path.extension().string();
  std::transform(ext.begin(), ext.end(), ext.begin(), [](unsigned char ch) { return std::tolower(ch); });
  if (ext == ".arff") return OutputFormat::arff;
  if (ext == ".csv") return OutputFormat::csv;
  if (ext == ".libsvm" || ext == ".svm" || ext == ".txt") return OutputFormat::libsvm;
  throw UsageError("cannot infer output format from '" + path.string() +
                   "' (use .arff, .csv or .libsvm)");
}

void write_bags(std::span<const Bag> bags, OutputFormat format, std::ostream& out) {
  const Columns c = inspect(bags);
  switch (format) {
    case OutputFormat::arff: write_arff(bags, c, out); break;
    case OutputFormat::csv: write_csv(bags, c, out); break;
    case OutputFormat::libsvm: write_libsvm(bags, c, out); break;
  }
}

void write_bags(std::span<const Bag> bags, OutputFormat format, const std::filesystem::path& path) {
  inspect(bags);
  write_file_atomically(path, [&](std::ostream& out) { write_bags(bags, format, out); });
}

}  // namespace xbow
