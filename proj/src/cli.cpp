#include "xbow/cli.hpp"

#include <algorithm>
#include <array>
#include <iomanip>
#include <ostream>
#include <set>
#include <sstream>

#include "xbow/attribute_spec.hpp"
#include "xbow/csv.hpp"
#include "xbow/error.hpp"
#include "xbow/metrics.hpp"
#include "xbow/number_format.hpp"

namespace xbow {
namespace {

constexpr std::array<FlagInfo, 25> kFlags{{
    {"-i", 1, "<file>", "Input file (.csv with ';' separator, or .arff)."},
    {"-o", 1, "<file>", "Output file; format from extension: .arff, .csv, .libsvm."},
    {"-l", 1, "<file>", "Labels file, rows 'name;time;label' (or 'name;label' without -t)."},
    {"-attributes", 1, "<spec>",
     "Column roles: n=name t=time c=label r=remove 0=text 1-9=numeric class; X[m] repeats X m times. "
     "Default: name, time, then numeric class 1."},
    {"-t", 2, "<width> <hop>", "Window width and hop in seconds; windows are centered on k*hop."},
    {"-standardizeInput", 0, "", "Standardize numeric features (mean 0, standard deviation 1)."},
    {"-normalizeInput", 0, "", "Normalize numeric features to [0, 1]."},
    {"-activity", 3, "<class> <dim> <threshold>",
     "Drop frames whose raw value of feature class <class>, dimension <dim> (0-based) is below <threshold>."},
    {"-size", 1, "<n>", "Codebook size per numeric feature class (per label with -supervised). Default 500."},
    {"-c", 1, "<method>", "Codebook method: random, random++, kmeans, kmeans++. Default random++."},
    {"-supervised", 0, "", "Learn one codebook per class label and concatenate them."},
    {"-svq", 2, "<blocks> <size>", "Split vector quantization with <blocks> blocks of <size> words each."},
    {"-seed", 1, "<n>", "Random seed. Default 0."},
    {"-B", 1, "<file>", "Write the learned codebook to <file>."},
    {"-b", 1, "<file>", "Read a codebook from <file> (apply mode); scaling and weighting come from it."},
    {"-a", 1, "<n>", "Assign each frame to its <n> closest words. Default 1."},
    {"-gaussian", 1, "<sigma>", "Gaussian encoding: weight assignments by exp(-d^2/(2 sigma^2))."},
    {"-log", 0, "", "Logarithmic term frequency weighting lg(TF+1)."},
    {"-idf", 0, "", "Inverse document frequency weighting TF*lg(N/DF)."},
    {"-norm", 0, "", "Normalize every sub-bag by its L1 mass."},
    {"-nGram", 1, "<n>", "Text: use word m-grams for m = 1..n. Must be repeated in apply mode. Default 1."},
    {"-nCharGram", 1, "<n>", "Text: additionally use character n-grams (n >= 2)."},
    {"-minTermFreq", 1, "<n>", "Text: drop terms occurring fewer than <n> times in training."},
    {"-maxTermFreq", 1, "<n>", "Text: drop terms occurring more than <n> times in training."},
    {"-h", 0, "", "Show this help."},
}};

const FlagInfo* find_flag(std::string_view name) {
  for (const auto& f : kFlags)
    if (f.name == name) return &f;
  return nullptr;
}

double number_arg(std::string_view flag, const std::string& v) {
  const auto n = parse_number(v);
  if (!n) throw UsageError(std::string(flag) + ": '" + v + "' is not a number");
  return *n;
}

std::size_t count_arg(std::string_view flag, const std::string& v, std::size_t min = 0) {
  const auto n = parse_count(v);
  if (!n) throw UsageError(std::string(flag) + ": '" + v + "' is not a non-negative integer");
  if (*n < min) throw UsageError(std::string(flag) + ": must be at least " + std::to_string(min));
  return *n;
}

EvalConfig parse_eval(std::span<const std::string> args) {
  EvalConfig cfg;
  std::vector<std::string> positional;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "-metric") {
      if (i + 1 >= args.size()) throw UsageError("eval: -metric needs a value");
      cfg.metric = args[++i];
      if (cfg.metric != "ccc" && cfg.metric != "wa" && cfg.metric != "ua")
        throw UsageError("eval: unknown metric '" + cfg.metric + "' (expected ccc, wa or ua)");
    } else {
      positional.push_back(args[i]);
    }
  }
  if (positional.size() != 2) throw UsageError("eval: expected <gold.csv> <pred.csv>");
  cfg.gold_path = positional[0];
  cfg.pred_path = positional[1];
  return cfg;
}

// Last column of every row; a first row whose first field is "name", or
// whose last field is the only non-numeric one, is a header.
std::vector<std::string> read_value_column(const std::string& path) {
  const auto records = parse_csv(read_text_file(path));
  std::vector<std::string> values;
  for (const auto& r : records) values.push_back(r.fields.back());
  if (!records.empty()) {
    const bool named_header = records.front().fields.front() == "name";
    const bool numeric_rest = values.size() > 1 && std::all_of(values.begin() + 1, values.end(), [](const auto& v) {
                                return parse_number(v).has_value();
                              });
    if (named_header || (numeric_rest && !parse_number(values.front()))) values.erase(values.begin());
  }
  return values;
}

}  // namespace

std::span<const FlagInfo> flag_table() { return kFlags; }

std::string help_text() {
  std::ostringstream out;
  out << "openxbow: crossmodal bag-of-words feature extraction\n\n"
         "Usage:\n"
         "  openxbow -i <input> -o <output> [options]\n"
         "  openxbow eval <gold.csv> <pred.csv> [-metric ccc|wa|ua]\n\n"
         "Options (order does not matter):\n";
  for (const auto& f : kFlags) {
    std::string lhs = std::string(f.name);
    if (!f.arguments.empty()) lhs += " " + std::string(f.arguments);
    out << "  " << std::left << std::setw(34) << lhs << ' ' << f.help << '\n';
  }
  out << "\nTrain mode learns scaling, codebooks, dictionary and weighting (saved with -B).\n"
         "Apply mode (-b) reuses them; -a, -gaussian and text options must be restated.\n";
  return out.str();
}

ParsedArgs parse_args(std::span<const std::string> args) {
  ParsedArgs parsed;
  if (args.empty() || std::find(args.begin(), args.end(), "-h") != args.end()) return parsed;
  if (args.front() == "eval") {
    parsed.action = ParsedArgs::Action::eval;
    parsed.eval = parse_eval(args.subspan(1));
    return parsed;
  }

  parsed.action = ParsedArgs::Action::run;
  RunConfig& cfg = parsed.run;
  std::set<std::string_view> seen;
  for (std::size_t i = 0; i < args.size();) {
    const FlagInfo* flag = find_flag(args[i]);
    if (!flag) throw UsageError("unknown option '" + args[i] + "'");
    if (!seen.insert(flag->name).second) throw UsageError(std::string(flag->name) + " given more than once");
    if (i + flag->arity >= args.size())
      throw UsageError(std::string(flag->name) + " needs " + std::to_string(flag->arity) + " argument(s)");
    const auto v = args.subspan(i + 1, flag->arity);
    const std::string_view name = flag->name;
    i += 1 + flag->arity;

    if (name == "-i") {
      cfg.input_path = v[0];
    } else if (name == "-o") {
      cfg.output_path = v[0];
    } else if (name == "-l") {
      cfg.labels_path = v[0];
    } else if (name == "-attributes") {
      try {
        parse_attribute_spec(v[0]);
      } catch (const DataError& e) {
        throw UsageError(std::string("-attributes: ") + e.what());
      }
      cfg.attribute_spec = v[0];
    } else if (name == "-t") {
      const double width = number_arg(name, v[0]);
      const double hop = number_arg(name, v[1]);
      if (!(width > 0.0) || !(hop > 0.0)) throw UsageError("-t: width and hop must be positive");
      cfg.windowing = WindowingConfig{width, hop};
    } else if (name == "-standardizeInput") {
      cfg.scaling = ScalingMode::standardize;
    } else if (name == "-normalizeInput") {
      cfg.scaling = ScalingMode::normalize;
    } else if (name == "-activity") {
      ActivityFilter a;
      const std::size_t k = count_arg(name, v[0], 1);
      if (k > 9) throw UsageError("-activity: feature class must be 1..9");
      a.feature_class = static_cast<int>(k);
      a.dim = count_arg(name, v[1]);
      a.threshold = number_arg(name, v[2]);
      cfg.activity = a;
    } else if (name == "-size") {
      cfg.codebook_size = count_arg(name, v[0], 1);
    } else if (name == "-c") {
      cfg.method = parse_generation_method(v[0]);
    } else if (name == "-supervised") {
      cfg.supervised = true;
    } else if (name == "-svq") {
      cfg.svq = SvqConfig{count_arg(name, v[0], 1), count_arg(name, v[1], 1)};
    } else if (name == "-seed") {
      cfg.seed = count_arg(name, v[0]);
    } else if (name == "-B") {
      cfg.write_codebook_path = v[0];
    } else if (name == "-b") {
      cfg.read_codebook_path = v[0];
    } else if (name == "-a") {
      cfg.quantization.num_assignments = count_arg(name, v[0], 1);
    } else if (name == "-gaussian") {
      const double sigma = number_arg(name, v[0]);
      if (!(sigma > 0.0)) throw UsageError("-gaussian: sigma must be positive");
      cfg.quantization.gaussian = true;
      cfg.quantization.sigma = sigma;
    } else if (name == "-log") {
      cfg.log = true;
    } else if (name == "-idf") {
      cfg.idf = true;
    } else if (name == "-norm") {
      cfg.normalize = true;
    } else if (name == "-nGram") {
      cfg.text.n_gram = count_arg(name, v[0], 1);
    } else if (name == "-nCharGram") {
      cfg.text.n_char_gram = count_arg(name, v[0]);
      if (cfg.text.n_char_gram == 1) throw UsageError("-nCharGram: must be 0 (off) or at least 2");
    } else if (name == "-minTermFreq") {
      cfg.text.min_term_freq = count_arg(name, v[0]);
    } else if (name == "-maxTermFreq") {
      cfg.text.max_term_freq = count_arg(name, v[0]);
    }
  }

  if (cfg.input_path.empty()) throw UsageError("missing input file (-i)");
  if (seen.count("-standardizeInput") && seen.count("-normalizeInput"))
    throw UsageError("-standardizeInput and -normalizeInput are mutually exclusive");
  if (cfg.text.min_term_freq > cfg.text.max_term_freq)
    throw UsageError("-minTermFreq exceeds -maxTermFreq");
  if (cfg.apply_mode()) {
    if (!cfg.write_codebook_path.empty()) throw UsageError("-b (read codebook) conflicts with -B (write codebook)");
    for (const std::string_view learning : {"-size", "-c", "-supervised", "-svq", "-minTermFreq", "-maxTermFreq"})
      if (seen.count(learning))
        throw UsageError("-b (apply mode) conflicts with codebook learning option " + std::string(learning));
  }
  if (cfg.supervised && cfg.svq) throw UsageError("-supervised and -svq cannot be combined");
  return parsed;
}

void run_eval(const EvalConfig& config, std::ostream& out) {
  const auto gold = read_value_column(config.gold_path);
  const auto pred = read_value_column(config.pred_path);
  if (gold.size() != pred.size())
    throw DataError("gold has " + std::to_string(gold.size()) + " values, prediction has " +
                    std::to_string(pred.size()));
  const auto numeric = [](const std::vector<std::string>& v) {
    return std::all_of(v.begin(), v.end(), [](const auto& s) { return parse_number(s).has_value(); });
  };
  std::string metric = config.metric;
  if (metric.empty()) metric = numeric(gold) && numeric(pred) ? "ccc" : "wa";

  if (metric == "ccc") {
    if (!numeric(gold) || !numeric(pred)) throw DataError("CCC needs numeric values");
    std::vector<double> g, p;
    for (const auto& s : gold) g.push_back(*parse_number(s));
    for (const auto& s : pred) p.push_back(*parse_number(s));
    out << "CCC: " << format_number(ccc(g, p)) << '\n';
    return;
  }
  if (config.metric.empty() || metric == "wa") out << "WA: " << format_number(weighted_accuracy(gold, pred)) << '\n';
  if (config.metric.empty() || metric == "ua") out << "UA: " << format_number(unweighted_accuracy(gold, pred)) << '\n';
}

int cli_main(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  try {
    const ParsedArgs parsed = parse_args(args);
    switch (parsed.action) {
      case ParsedArgs::Action::help: out << help_text(); return kExitSuccess;
      case ParsedArgs::Action::eval: run_eval(parsed.eval, out); return kExitSuccess;
      case ParsedArgs::Action::run: run_pipeline(parsed.run, out); return kExitSuccess;
    }
  } catch (const UsageError& e) {
    err << "openxbow: " << e.what() << "\n(run 'openxbow -h' for help)\n";
    return kExitUsage;
  } catch (const DataError& e) {
    err << "openxbow: " << e.what() << '\n';
    return kExitData;
  } catch (const std::exception& e) {
    err << "openxbow: internal error: " << e.what() << '\n';
    return kExitInternal;
  }
  return kExitInternal;
}

}  // namespace xbow
