#include "xbow/codebook.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "xbow/error.hpp"

namespace xbow {
namespace {

void check_size(const Matrix& vectors, std::size_t size) {
  if (size == 0) throw DataError("codebook size must be at least 1");
  if (size > vectors.rows())
    throw DataError("codebook size " + std::to_string(size) + " exceeds the " +
                    std::to_string(vectors.rows()) + " available vectors");
}

SubCodebook from_indices(const Matrix& vectors, const std::vector<std::size_t>& picks,
                         GenerationMethod method) {
  SubCodebook cb;
  cb.method = method;
  cb.centroids = Matrix(0, 0);
  for (const auto i : picks) cb.centroids.append_row(vectors.row(i));
  return cb;
}

Matrix columns(const Matrix& m, std::size_t offset, std::size_t count) {
  Matrix out(m.rows(), count);
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < count; ++c) out(r, c) = m(r, offset + c);
  return out;
}

}  // namespace

std::string_view to_string(GenerationMethod method) {
  switch (method) {
    case GenerationMethod::random: return "random";
    case GenerationMethod::random_pp: return "random++";
    case GenerationMethod::kmeans: return "kmeans";
    case GenerationMethod::kmeans_pp: return "kmeans++";
  }
  return "random";
}

GenerationMethod parse_generation_method(std::string_view text) {
  if (text == "random") return GenerationMethod::random;
  if (text == "random++") return GenerationMethod::random_pp;
  if (text == "kmeans") return GenerationMethod::kmeans;
  if (text == "kmeans++") return GenerationMethod::kmeans_pp;
  throw UsageError("unknown codebook method '" + std::string(text) +
                   "' (expected random, random++, kmeans or kmeans++)");
}

std::size_t SvqStructure::dims() const {
  return std::accumulate(block_dims.begin(), block_dims.end(), std::size_t{0});
}

SubCodebook generate_random(const Matrix& vectors, std::size_t size, RngStream& rng) {
  check_size(vectors, size);
  std::vector<std::size_t> idx(vectors.rows());
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  // Partial Fisher-Yates shuffle.
  for (std::size_t i = 0; i < size; ++i) std::swap(idx[i], idx[i + rng.uniform_index(idx.size() - i)]);
  idx.resize(size);
  return from_indices(vectors, idx, GenerationMethod::random);
}

SubCodebook generate_random_pp(const Matrix& vectors, std::size_t size, RngStream& rng) {
  check_size(vectors, size);
  const std::size_t first = rng.uniform_index(vectors.rows());
  return generate_random_pp(vectors, size, rng, first);
}

SubCodebook generate_random_pp(const Matrix& vectors, std::size_t size, RngStream& rng,
                               std::size_t first_index) {
  check_size(vectors, size);
  const std::size_t n = vectors.rows();
  if (first_index >= n) throw DataError("first pick index out of range");

  std::vector<std::size_t> picks{first_index};
  std::vector<char> chosen(n, 0);
  chosen[first_index] = 1;
  std::vector<double> d2(n);
  for (std::size_t i = 0; i < n; ++i) d2[i] = chosen[i] ? 0.0 : squared_distance(vectors.row(i), vectors.row(first_index));

  while (picks.size() < size) {
    double total = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      if (!chosen[i]) total += d2[i];

    std::size_t pick = n;
    if (total > 0.0) {
      const double target = rng.uniform01() * total;
      double cumulative = 0.0;
      std::size_t last_positive = n;
      for (std::size_t i = 0; i < n; ++i) {
        if (chosen[i] || d2[i] <= 0.0) continue;
        last_positive = i;
        cumulative += d2[i];
        if (target < cumulative) {
          pick = i;
          break;
        }
      }
      if (pick == n) pick = last_positive;  // rounding at the top end
    } else {
      // Every remaining point coincides with a chosen one.
      std::size_t r = rng.uniform_index(n - picks.size());
      for (std::size_t i = 0; i < n; ++i) {
        if (chosen[i]) continue;
        if (r == 0) {
          pick = i;
          break;
        }
        --r;
      }
    }

    chosen[pick] = 1;
    picks.push_back(pick);
    d2[pick] = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      if (!chosen[i]) d2[i] = std::min(d2[i], squared_distance(vectors.row(i), vectors.row(pick)));
  }
  return from_indices(vectors, picks, GenerationMethod::random_pp);
}

KMeansResult run_kmeans(const Matrix& vectors, std::size_t size, KMeansInit init,
                        std::size_t max_updates, RngStream& rng) {
  KMeansResult result;
  result.codebook = init == KMeansInit::random ? generate_random(vectors, size, rng)
                                               : generate_random_pp(vectors, size, rng);
  result.codebook.method = init == KMeansInit::random ? GenerationMethod::kmeans : GenerationMethod::kmeans_pp;
  Matrix& centroids = result.codebook.centroids;

  const std::size_t n = vectors.rows();
  const std::size_t dims = vectors.cols();
  constexpr std::size_t kUnassigned = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> assignment(n, kUnassigned);
  std::vector<double> dist(n, 0.0);

  while (true) {
    bool changed = false;
    double inertia = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const auto x = vectors.row(i);
      std::size_t best = 0;
      double best_d = std::numeric_limits<double>::infinity();
      for (std::size_t c = 0; c < size; ++c) {
        const double d = squared_distance(x, centroids.row(c));
        if (d < best_d) {
          best_d = d;
          best = c;
        }
      }
      if (assignment[i] != best) {
        assignment[i] = best;
        changed = true;
      }
      dist[i] = best_d;
      inertia += best_d;
    }
    result.inertia.push_back(inertia);
    if (!changed) {
      result.converged = true;
      break;
    }
    if (result.updates == max_updates) break;

    Matrix sums(size, dims, 0.0);
    std::vector<std::size_t> counts(size, 0);
    for (std::size_t i = 0; i < n; ++i) {
      auto s = sums.row(assignment[i]);
      const auto x = vectors.row(i);
      for (std::size_t d = 0; d < dims; ++d) s[d] += x[d];
      ++counts[assignment[i]];
    }
    std::vector<char> reseeded(n, 0);
    for (std::size_t c = 0; c < size; ++c) {
      auto target = centroids.row(c);
      if (counts[c] > 0) {
        const auto s = sums.row(c);
        for (std::size_t d = 0; d < dims; ++d) target[d] = s[d] / static_cast<double>(counts[c]);
        continue;
      }
      std::size_t far = n;
      for (std::size_t i = 0; i < n; ++i)
        if (!reseeded[i] && (far == n || dist[i] > dist[far])) far = i;
      reseeded[far] = 1;
      const auto x = vectors.row(far);
      std::copy(x.begin(), x.end(), target.begin());
    }
    ++result.updates;
  }
  return result;
}

SubCodebook learn_codebook(const Matrix& vectors, std::size_t size, GenerationMethod method,
                           RngStream& rng) {
  switch (method) {
    case GenerationMethod::random: return generate_random(vectors, size, rng);
    case GenerationMethod::random_pp: return generate_random_pp(vectors, size, rng);
    case GenerationMethod::kmeans:
      return run_kmeans(vectors, size, KMeansInit::random, kDefaultKMeansIterations, rng).codebook;
    case GenerationMethod::kmeans_pp:
      return run_kmeans(vectors, size, KMeansInit::random_pp, kDefaultKMeansIterations, rng).codebook;
  }
  throw Error("unreachable generation method");
}

SubCodebook generate_supervised(const Dataset& ds, int feature_class, std::size_t per_class_size,
                                GenerationMethod method, const RngStream& rng,
                                std::span<const std::string> expected_labels) {
  if (!ds.dims.count(feature_class))
    throw DataError("supervised codebook: no numeric feature class " + std::to_string(feature_class));
  std::vector<std::string> labels;
  std::vector<Matrix> per_label;
  for (std::size_t i = 0; i < ds.frames.size(); ++i) {
    const Frame& f = ds.frames[i];
    if (!f.label) throw DataError("supervised codebook: frame " + std::to_string(i) + " has no label");
    auto it = std::find(labels.begin(), labels.end(), *f.label);
    if (it == labels.end()) {
      labels.push_back(*f.label);
      per_label.emplace_back(0, 0);
      it = labels.end() - 1;
    }
    per_label[static_cast<std::size_t>(it - labels.begin())].append_row(f.numeric.at(feature_class));
  }
  for (const auto& expected : expected_labels)
    if (std::find(labels.begin(), labels.end(), expected) == labels.end())
      throw DataError("supervised codebook: label '" + expected + "' has no frames");
  if (labels.empty()) throw DataError("supervised codebook: no frames");

  SubCodebook result;
  result.feature_class = feature_class;
  result.method = method;
  result.centroids = Matrix(0, 0);
  for (std::size_t l = 0; l < labels.size(); ++l) {
    if (per_label[l].rows() < per_class_size)
      throw DataError("supervised codebook: label '" + labels[l] + "' has " +
                      std::to_string(per_label[l].rows()) + " frames, fewer than the per-class size " +
                      std::to_string(per_class_size));
    RngStream label_rng = rng.derive(l);
    const SubCodebook part = learn_codebook(per_label[l], per_class_size, method, label_rng);
    result.class_boundaries.push_back({labels[l], result.centroids.rows(), part.size()});
    for (std::size_t r = 0; r < part.size(); ++r) result.centroids.append_row(part.centroids.row(r));
  }
  return result;
}

std::vector<std::pair<std::size_t, std::size_t>> svq_blocks(std::size_t dims, std::size_t block_count) {
  if (block_count == 0) throw DataError("SVQ needs at least one block");
  if (block_count > dims)
    throw DataError("SVQ block count " + std::to_string(block_count) + " exceeds dimensionality " +
                    std::to_string(dims));
  const std::size_t base = dims / block_count;
  std::vector<std::pair<std::size_t, std::size_t>> blocks;
  for (std::size_t b = 0; b < block_count; ++b) {
    const std::size_t width = b + 1 == block_count ? dims - base * (block_count - 1) : base;
    blocks.emplace_back(b * base, width);
  }
  return blocks;
}

SvqStructure build_svq(const Matrix& vectors, std::size_t block_count, std::size_t block_size,
                       std::size_t top_size, GenerationMethod method, const RngStream& rng) {
  SvqStructure svq;
  for (const auto& [offset, width] : svq_blocks(vectors.cols(), block_count)) {
    RngStream block_rng = rng.derive(svq.block_count());
    SubCodebook cb = learn_codebook(columns(vectors, offset, width), block_size, method, block_rng);
    svq.block_offsets.push_back(offset);
    svq.block_dims.push_back(width);
    svq.block_codebooks.push_back(std::move(cb));
  }
  Matrix indices(vectors.rows(), block_count);
  for (std::size_t r = 0; r < vectors.rows(); ++r) {
    const auto idx = svq_index_vector(svq, vectors.row(r));
    std::copy(idx.begin(), idx.end(), indices.row(r).begin());
  }
  RngStream top_rng = rng.derive(block_count);
  svq.top = learn_codebook(indices, top_size, method, top_rng);
  return svq;
}

std::vector<double> svq_index_vector(const SvqStructure& svq, std::span<const double> x) {
  if (x.size() != svq.dims())
    throw DataError("vector of dimension " + std::to_string(x.size()) + " does not match SVQ dimension " +
                    std::to_string(svq.dims()));
  std::vector<double> out(svq.block_count());
  for (std::size_t b = 0; b < svq.block_count(); ++b)
    out[b] = static_cast<double>(
        nearest_row(svq.block_codebooks[b].centroids, x.subspan(svq.block_offsets[b], svq.block_dims[b])));
  return out;
}

}  // namespace xbow
