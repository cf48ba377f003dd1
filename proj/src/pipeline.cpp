#include <algorithm>
#include <ostream>
#include <utility>

#include "xbow/arff.hpp"
#include "xbow/bag_writer.hpp"
#include "xbow/cli.hpp"
#include "xbow/csv.hpp"
#include "xbow/error.hpp"
#include "xbow/labels.hpp"
#include "xbow/model.hpp"

namespace xbow {
namespace {

// Runs one pipeline stage, prefixing any error with the stage name.
template <typename F>
auto stage(std::string_view name, F&& f) {
  const auto prefix = [&](const std::exception& e) { return std::string(name) + ": " + e.what(); };
  try {
    return f();
  } catch (const UsageError& e) {
    throw UsageError(prefix(e));
  } catch (const DataError& e) {
    throw DataError(prefix(e));
  } catch (const std::bad_alloc&) {
    throw;
  } catch (const std::exception& e) {
    throw Error(prefix(e));
  }
}

bool is_arff(const std::string& path) {
  std::string ext = std::filesystem::path(path).extension().string();
  std::transform(ext.begin(), ext.end(), ext.begin(), [](unsigned char c) { return std::tolower(c); });
  return ext == ".arff";
}

Dataset read_input(const RunConfig& cfg) {
  std::optional<AttributeSpec> spec;
  if (!cfg.attribute_spec.empty()) spec = parse_attribute_spec(cfg.attribute_spec);
  if (is_arff(cfg.input_path)) return read_arff(cfg.input_path, spec).first;
  if (!spec) spec = default_attribute_spec(csv_column_count(cfg.input_path));
  return read_csv(cfg.input_path, *spec);
}

void check_compatible(const Dataset& ds, const Codebook& cb) {
  for (const auto& [k, dims] : ds.dims) {
    const auto it = cb.numeric.find(k);
    if (it == cb.numeric.end())
      throw DataError("input has numeric feature class " + std::to_string(k) + " but the codebook has none");
    if (quantizer_dims(it->second) != dims)
      throw DataError("dimension mismatch for feature class " + std::to_string(k) + ": input has " +
                      std::to_string(dims) + " dimensions, codebook expects " +
                      std::to_string(quantizer_dims(it->second)));
  }
  for (const auto& [k, q] : cb.numeric)
    if (!ds.dims.count(k))
      throw DataError("codebook has feature class " + std::to_string(k) + " but the input does not");
  if (ds.has_text != cb.text.has_value())
    throw DataError(ds.has_text ? "input has text but the codebook has no dictionary"
                                : "codebook has a dictionary but the input has no text column");
}

NumericQuantizer learn_quantizer(const Dataset& ds, int k, const RunConfig& cfg) {
  const RngStream rng = RngStream(cfg.seed).derive(static_cast<std::uint64_t>(k));
  if (cfg.supervised) return generate_supervised(ds, k, cfg.codebook_size, cfg.method, rng);
  const Matrix vectors = ds.feature_matrix(k);
  if (cfg.svq) {
    SvqStructure svq =
        build_svq(vectors, cfg.svq->block_count, cfg.svq->block_size, cfg.codebook_size, cfg.method, rng);
    for (auto& b : svq.block_codebooks) b.feature_class = k;
    svq.top.feature_class = k;
    return svq;
  }
  RngStream stream = rng;
  SubCodebook cb = learn_codebook(vectors, cfg.codebook_size, cfg.method, stream);
  cb.feature_class = k;
  return cb;
}

std::vector<std::vector<std::string>> tokenize_frames(const Dataset& ds, const TextConfig& text) {
  std::vector<std::vector<std::string>> tokens;
  tokens.reserve(ds.frames.size());
  for (const Frame& f : ds.frames) tokens.push_back(tokenize(f.text.value_or(""), text));
  return tokens;
}

}  // namespace

void run_pipeline(const RunConfig& cfg, std::ostream& log) {
  const bool apply = cfg.apply_mode();
  std::optional<OutputFormat> format;
  if (!cfg.output_path.empty()) format = stage("output", [&] { return format_from_extension(cfg.output_path); });

  Dataset ds = stage("input", [&] { return read_input(cfg); });

  Codebook cb;
  if (apply) {
    cb = stage("codebook", [&] { return load_codebook(std::filesystem::path(cfg.read_codebook_path)); });
    stage("codebook", [&] {
      check_compatible(ds, cb);
      if (cfg.scaling != ScalingMode::none && cfg.scaling != cb.scaling.mode)
        throw UsageError("scaling option conflicts with the codebook's stored scaling mode '" +
                         std::string(to_string(cb.scaling.mode)) + "'");
      if (cfg.idf && !cb.weighting.idf) throw UsageError("-idf given but the codebook has no IDF table");
      return 0;
    });
  }

  ds = stage("preprocess", [&] {
    Dataset out = std::move(ds);
    if (cfg.activity) out = filter_activity(out, cfg.activity->feature_class, cfg.activity->dim, cfg.activity->threshold);
    if (!apply) cb.scaling = fit_scaling(out, cfg.scaling);
    return apply_scaling(out, cb.scaling);
  });

  if (!apply) {
    stage("codebook", [&] {
      if (ds.empty()) throw DataError("no frames to learn a codebook from");
      for (const auto& [k, dims] : ds.dims) cb.numeric[k] = learn_quantizer(ds, k, cfg);
      if (ds.has_text) cb.text = TextModel{build_dictionary(tokenize_frames(ds, cfg.text), cfg.text), cfg.text};
      return 0;
    });
  }

  std::vector<Bag> bags = stage("bagging", [&] {
    for (const auto& [k, q] : cb.numeric)
      if (cfg.quantization.num_assignments > quantizer_size(q))
        throw UsageError("-a " + std::to_string(cfg.quantization.num_assignments) + " exceeds the size " +
                         std::to_string(quantizer_size(q)) + " of codebook " + std::to_string(k));

    std::optional<LabelTable> labels;
    if (!cfg.labels_path.empty()) labels = read_labels(cfg.labels_path);
    const auto windows = segment_windows(ds, cfg.windowing, labels ? &*labels : nullptr);

    // Each frame is quantized once; windows then sum the cached assignments.
    std::map<int, std::vector<std::vector<Assignment>>> assignments;
    for (const auto& [k, q] : cb.numeric) {
      auto& per_frame = assignments[k];
      per_frame.reserve(ds.frames.size());
      for (const Frame& f : ds.frames) per_frame.push_back(assign_frame(f.numeric.at(k), q, cfg.quantization));
    }
    std::vector<std::vector<std::size_t>> term_ids;
    if (cb.text) {
      for (const auto& tokens : tokenize_frames(ds, cfg.text)) {
        auto& ids = term_ids.emplace_back();
        for (const auto& t : tokens)
          if (const auto i = cb.text->dictionary.index_of(t)) ids.push_back(*i);
      }
    }

    std::vector<int> declared;
    for (const auto& [k, q] : cb.numeric) declared.push_back(k);
    if (cb.text) declared.push_back(kTextClass);

    std::vector<Bag> out;
    out.reserve(windows.size());
    for (const Window& w : windows) {
      std::vector<SubBag> parts;
      for (const auto& [k, q] : cb.numeric) {
        SubBag part{k, std::vector<double>(quantizer_size(q), 0.0)};
        for (const auto i : w.frames) accumulate(assignments.at(k)[i], part.tf);
        parts.push_back(std::move(part));
      }
      if (cb.text) {
        SubBag part{kTextClass, std::vector<double>(cb.text->dictionary.size(), 0.0)};
        for (const auto i : w.frames)
          for (const auto id : term_ids[i]) part.tf[id] += 1.0;
        parts.push_back(std::move(part));
      }
      out.push_back(assemble_bag(std::move(parts), declared, w.name, w.center, w.label));
    }
    return out;
  });

  stage("postprocess", [&] {
    if (!apply) {
      cb.weighting = cfg.idf ? fit_idf(bags) : WeightingState{};
      cb.weighting.log = cfg.log;
      cb.normalize = cfg.normalize;
    }
    WeightingState state = cb.weighting;
    state.log = state.log || cfg.log;
    const bool normalize = cb.normalize || cfg.normalize;
    const BagLayout layout = cb.layout();
    for (Bag& b : bags) b.tf = postprocess(b.tf, state, normalize, layout);
    return 0;
  });

  if (format) stage("output", [&] {
      write_bags(bags, *format, std::filesystem::path(cfg.output_path));
      return 0;
    });
  if (!cfg.write_codebook_path.empty())
    stage("codebook", [&] {
      save_codebook(cb, std::filesystem::path(cfg.write_codebook_path));
      return 0;
    });

  log << "openxbow: " << ds.frames.size() << " frames, " << bags.size() << " bags of " << cb.bag_size()
      << " dimensions" << (apply ? " (apply mode)" : "") << '\n';
}

}  // namespace xbow
