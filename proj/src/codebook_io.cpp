#include <fstream>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>

#include "xbow/error.hpp"
#include "xbow/file_util.hpp"
#include "xbow/model.hpp"
#include "xbow/number_format.hpp"

namespace xbow {

BagLayout Codebook::layout() const {
  BagLayout layout;
  for (const auto& [k, q] : numeric) layout.push_back(quantizer_size(q));
  if (text) layout.push_back(text->dictionary.size());
  return layout;
}

std::size_t Codebook::bag_size() const {
  const auto l = layout();
  return std::accumulate(l.begin(), l.end(), std::size_t{0});
}

namespace {

constexpr std::string_view kMagic = "openxbow-codebook";

void write_values(std::ostream& out, std::string_view key, std::span<const double> values) {
  out << key;
  for (const double v : values) out << ' ' << format_number(v);
  out << '\n';
}

void write_sub_codebook(std::ostream& out, const SubCodebook& cb) {
  out << "method " << to_string(cb.method) << '\n';
  out << "size " << cb.size() << '\n';
  out << "dims " << cb.dims() << '\n';
  out << "boundaries " << cb.class_boundaries.size() << '\n';
  for (const auto& b : cb.class_boundaries) {
    if (b.label.find_first_of("\r\n") != std::string::npos)
      throw DataError("class label with a line break cannot be stored in a codebook");
    out << "label " << b.start << ' ' << b.count << ' ' << b.label << '\n';
  }
  for (std::size_t r = 0; r < cb.size(); ++r) {
    const auto row = cb.centroids.row(r);
    for (std::size_t c = 0; c < row.size(); ++c) out << (c ? " " : "") << format_number(row[c]);
    out << '\n';
  }
}

class Reader {
 public:
  explicit Reader(std::istream& in) : in_(in) {}

  std::size_t line() const { return line_; }

  std::string next() {
    std::string s;
    if (!std::getline(in_, s)) throw fail("unexpected end of file (truncated codebook?)");
    ++line_;
    if (!s.empty() && s.back() == '\r') s.pop_back();
    return s;
  }

  // Reads "<key> <rest>" and returns rest.
  std::string field(std::string_view key) {
    const std::string s = next();
    if (s.compare(0, key.size(), key) != 0 || (s.size() > key.size() && s[key.size()] != ' '))
      throw fail("expected '" + std::string(key) + "', found '" + s + "'");
    return s.size() > key.size() ? s.substr(key.size() + 1) : std::string();
  }

  std::size_t count(std::string_view key) {
    const std::string v = field(key);
    const auto n = parse_count(v);
    if (!n) throw fail("'" + v + "' is not a count");
    return *n;
  }

  std::vector<double> numbers(std::string_view text, std::size_t expected) {
    std::vector<double> values;
    std::istringstream ss{std::string(text)};
    std::string tok;
    while (ss >> tok) {
      const auto v = parse_number(tok);
      if (!v) throw fail("'" + tok + "' is not a number");
      values.push_back(*v);
    }
    if (values.size() != expected)
      throw fail("expected " + std::to_string(expected) + " values, found " + std::to_string(values.size()));
    return values;
  }

  DataError fail(const std::string& what) const {
    return DataError("codebook line " + std::to_string(line_) + ": " + what);
  }

 private:
  std::istream& in_;
  std::size_t line_ = 0;
};

SubCodebook read_sub_codebook(Reader& r, int feature_class) {
  SubCodebook cb;
  cb.feature_class = feature_class;
  try {
    cb.method = parse_generation_method(r.field("method"));
  } catch (const UsageError& e) {
    throw r.fail(e.what());
  }
  const std::size_t size = r.count("size");
  const std::size_t dims = r.count("dims");
  const std::size_t nb = r.count("boundaries");
  for (std::size_t i = 0; i < nb; ++i) {
    const std::string rest = r.field("label");
    std::istringstream ss(rest);
    ClassBoundary b;
    if (!(ss >> b.start >> b.count)) throw r.fail("malformed class boundary");
    ss.get();
    std::getline(ss, b.label);
    cb.class_boundaries.push_back(std::move(b));
  }
  if (size == 0 || dims == 0) throw r.fail("empty codebook");
  cb.centroids = Matrix(size, dims);
  for (std::size_t i = 0; i < size; ++i) {
    const auto row = r.numbers(r.next(), dims);
    std::copy(row.begin(), row.end(), cb.centroids.row(i).begin());
  }
  return cb;
}

}  // namespace

void save_codebook(const Codebook& cb, std::ostream& out) {
  out << kMagic << ' ' << kCodebookFormatVersion << '\n';

  out << "[scaling]\n";
  out << "mode " << to_string(cb.scaling.mode) << '\n';
  out << "classes " << cb.scaling.offset.size() << '\n';
  for (const auto& [k, offset] : cb.scaling.offset) {
    out << "class " << k << ' ' << offset.size() << '\n';
    write_values(out, "offset", offset);
    write_values(out, "scale", cb.scaling.scale.at(k));
  }

  out << "[weighting]\n";
  out << "log " << int{cb.weighting.log} << '\n';
  out << "idf " << int{cb.weighting.idf} << '\n';
  out << "norm " << int{cb.normalize} << '\n';
  out << "n " << cb.weighting.n << '\n';
  out << "df " << cb.weighting.df.size();
  for (const auto d : cb.weighting.df) out << ' ' << d;
  out << '\n';

  for (const auto& [k, q] : cb.numeric) {
    out << "[codebook " << k << "]\n";
    if (const auto* svq = std::get_if<SvqStructure>(&q)) {
      out << "type svq\n";
      out << "blocks " << svq->block_count() << '\n';
      for (std::size_t b = 0; b < svq->block_count(); ++b) {
        out << "block " << svq->block_offsets[b] << ' ' << svq->block_dims[b] << '\n';
        write_sub_codebook(out, svq->block_codebooks[b]);
      }
      out << "top\n";
      write_sub_codebook(out, svq->top);
    } else {
      out << "type plain\n";
      write_sub_codebook(out, std::get<SubCodebook>(q));
    }
  }

  if (cb.text) {
    const TextModel& t = *cb.text;
    out << "[text]\n";
    out << "ngram " << t.config.n_gram << '\n';
    out << "nchargram " << t.config.n_char_gram << '\n';
    out << "mintermfreq " << t.config.min_term_freq << '\n';
    out << "maxtermfreq " << t.config.max_term_freq << '\n';
    out << "terms " << t.dictionary.size() << '\n';
    for (const auto& term : t.dictionary.terms()) out << term << '\n';
  }
  out << "[end]\n";
}

void save_codebook(const Codebook& cb, const std::filesystem::path& path) {
  write_file_atomically(path, [&](std::ostream& out) { save_codebook(cb, out); });
}

Codebook load_codebook(std::istream& in) {
  Reader r(in);
  Codebook cb;

  {
    const std::string header = r.next();
    if (header.compare(0, kMagic.size(), kMagic) != 0) throw r.fail("not an openXBOW codebook file");
    const std::string version = header.size() > kMagic.size() + 1 ? header.substr(kMagic.size() + 1) : "";
    if (version != kCodebookFormatVersion)
      throw r.fail("unsupported codebook version '" + version + "' (this build reads " +
                   std::string(kCodebookFormatVersion) + ")");
  }

  if (r.next() != "[scaling]") throw r.fail("expected [scaling]");
  try {
    cb.scaling.mode = parse_scaling_mode(r.field("mode"));
  } catch (const DataError& e) {
    throw r.fail(e.what());
  }
  const std::size_t classes = r.count("classes");
  for (std::size_t i = 0; i < classes; ++i) {
    std::istringstream ss(r.field("class"));
    int k = 0;
    std::size_t dims = 0;
    if (!(ss >> k >> dims)) throw r.fail("malformed class line");
    cb.scaling.offset[k] = r.numbers(r.field("offset"), dims);
    cb.scaling.scale[k] = r.numbers(r.field("scale"), dims);
  }

  if (r.next() != "[weighting]") throw r.fail("expected [weighting]");
  cb.weighting.log = r.count("log") != 0;
  cb.weighting.idf = r.count("idf") != 0;
  cb.normalize = r.count("norm") != 0;
  cb.weighting.n = r.count("n");
  {
    std::istringstream ss(r.field("df"));
    std::size_t size = 0;
    if (!(ss >> size)) throw r.fail("malformed df table");
    cb.weighting.df.resize(size);
    for (auto& d : cb.weighting.df)
      if (!(ss >> d)) throw r.fail("df table shorter than declared");
  }

  while (true) {
    const std::string section = r.next();
    if (section == "[end]") break;
    if (section.rfind("[codebook ", 0) == 0 && section.back() == ']') {
      const auto k = parse_count(section.substr(10, section.size() - 11));
      if (!k || *k < 1 || *k > 9) throw r.fail("bad feature class in '" + section + "'");
      const int feature_class = static_cast<int>(*k);
      const std::string type = r.field("type");
      if (type == "plain") {
        cb.numeric[feature_class] = read_sub_codebook(r, feature_class);
      } else if (type == "svq") {
        SvqStructure svq;
        const std::size_t blocks = r.count("blocks");
        for (std::size_t b = 0; b < blocks; ++b) {
          std::istringstream ss(r.field("block"));
          std::size_t offset = 0, dims = 0;
          if (!(ss >> offset >> dims)) throw r.fail("malformed block line");
          svq.block_offsets.push_back(offset);
          svq.block_dims.push_back(dims);
          svq.block_codebooks.push_back(read_sub_codebook(r, feature_class));
        }
        if (r.next() != "top") throw r.fail("expected 'top'");
        svq.top = read_sub_codebook(r, feature_class);
        cb.numeric[feature_class] = std::move(svq);
      } else {
        throw r.fail("unknown codebook type '" + type + "'");
      }
    } else if (section == "[text]") {
      TextModel t;
      t.config.n_gram = r.count("ngram");
      t.config.n_char_gram = r.count("nchargram");
      t.config.min_term_freq = r.count("mintermfreq");
      t.config.max_term_freq = r.count("maxtermfreq");
      const std::size_t n = r.count("terms");
      std::vector<std::string> terms;
      terms.reserve(n);
      for (std::size_t i = 0; i < n; ++i) terms.push_back(r.next());
      try {
        t.dictionary = Dictionary(std::move(terms));
      } catch (const DataError& e) {
        throw r.fail(e.what());
      }
      cb.text = std::move(t);
    } else {
      throw r.fail("unknown section '" + section + "'");
    }
  }

  if (cb.weighting.idf && cb.weighting.df.size() != cb.bag_size())
    throw DataError("codebook: df table has " + std::to_string(cb.weighting.df.size()) +
                    " entries but the bag has " + std::to_string(cb.bag_size()) + " dimensions");
  return cb;
}

Codebook load_codebook(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open codebook '" + path.string() + "'");
  return load_codebook(in);
}

}  // namespace xbow
