#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "xbow/dataset.hpp"
#include "xbow/matrix.hpp"
#include "xbow/rng.hpp"

namespace xbow {

enum class GenerationMethod { random, random_pp, kmeans, kmeans_pp };

std::string_view to_string(GenerationMethod method);
/// Accepts "random", "random++", "kmeans", "kmeans++".
GenerationMethod parse_generation_method(std::string_view text);

/// Layout of one label's words inside a supervised super-codebook.
struct ClassBoundary {
  std::string label;
  std::size_t start = 0;
  std::size_t count = 0;

  bool operator==(const ClassBoundary&) const = default;
};

struct SubCodebook {
  int feature_class = 1;
  Matrix centroids;
  GenerationMethod method = GenerationMethod::random;
  std::vector<ClassBoundary> class_boundaries;  // empty unless supervised

  std::size_t size() const { return centroids.rows(); }
  std::size_t dims() const { return centroids.cols(); }

  bool operator==(const SubCodebook&) const = default;
};

/// Split vector quantizer: each contiguous block of dimensions has its own
/// codebook; the vector of nearest block indices is then quantized by the
/// top codebook, whose words are the bag dimensions.
struct SvqStructure {
  std::vector<std::size_t> block_offsets;
  std::vector<std::size_t> block_dims;
  std::vector<SubCodebook> block_codebooks;
  SubCodebook top;

  std::size_t block_count() const { return block_dims.size(); }
  std::size_t dims() const;
  std::size_t size() const { return top.size(); }

  bool operator==(const SvqStructure&) const = default;
};

/// `size` distinct rows drawn uniformly without replacement.
SubCodebook generate_random(const Matrix& vectors, std::size_t size, RngStream& rng);

/// kmeans++ seeding: first row uniform, each further row drawn with
/// probability proportional to its squared distance to the nearest chosen
/// row. All-zero weights fall back to a uniform draw among unchosen rows.
SubCodebook generate_random_pp(const Matrix& vectors, std::size_t size, RngStream& rng);

/// Same, with the first pick fixed to row first_index.
SubCodebook generate_random_pp(const Matrix& vectors, std::size_t size, RngStream& rng,
                               std::size_t first_index);

enum class KMeansInit { random, random_pp };

struct KMeansResult {
  SubCodebook codebook;
  std::vector<double> inertia;    // within-cluster sum of squares after each assignment step
  std::size_t updates = 0;        // centroid updates executed
  bool converged = false;         // assignments stopped changing
};

inline constexpr std::size_t kDefaultKMeansIterations = 500;

/// Lloyd's algorithm. Stops when an assignment step changes nothing or
/// after max_updates centroid updates. An emptied cluster is reseeded with
/// the point farthest from its assigned centroid.
KMeansResult run_kmeans(const Matrix& vectors, std::size_t size, KMeansInit init,
                        std::size_t max_updates, RngStream& rng);

/// Dispatches on method; kmeans uses random init, kmeans++ uses random++ init.
SubCodebook learn_codebook(const Matrix& vectors, std::size_t size, GenerationMethod method,
                           RngStream& rng);

/// One codebook of per_class_size words per distinct label (first-appearance
/// order), concatenated. Label i is learned with rng.derive(i). Any label
/// in expected_labels without frames is an error.
SubCodebook generate_supervised(const Dataset& ds, int feature_class, std::size_t per_class_size,
                                GenerationMethod method, const RngStream& rng,
                                std::span<const std::string> expected_labels = {});

/// Contiguous near-equal blocks; the last block absorbs the remainder.
/// Returns (offset, dims) per block.
std::vector<std::pair<std::size_t, std::size_t>> svq_blocks(std::size_t dims,
                                                            std::size_t block_count);

/// Block b is learned with rng.derive(b), the top codebook with
/// rng.derive(block_count).
SvqStructure build_svq(const Matrix& vectors, std::size_t block_count, std::size_t block_size,
                       std::size_t top_size, GenerationMethod method, const RngStream& rng);

/// Nearest block-codeword index per block, as reals.
std::vector<double> svq_index_vector(const SvqStructure& svq, std::span<const double> x);

}  // namespace xbow
