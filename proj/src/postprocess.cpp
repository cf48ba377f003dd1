#include "xbow/postprocess.hpp"

#include <cmath>
#include <numeric>

#include "xbow/error.hpp"

namespace xbow {

std::vector<double> apply_log_tf(std::span<const double> tf) {
  std::vector<double> out(tf.size());
  for (std::size_t i = 0; i < tf.size(); ++i) {
    if (tf[i] < 0.0) throw DataError("log TF weighting needs non-negative term frequencies");
    out[i] = std::log10(tf[i] + 1.0);
  }
  return out;
}

WeightingState fit_idf(std::span<const Bag> bags) {
  if (bags.empty()) throw DataError("IDF weighting needs at least one training bag");
  WeightingState state;
  state.idf = true;
  state.n = bags.size();
  state.df.assign(bags.front().tf.size(), 0);
  for (const Bag& b : bags) {
    if (b.tf.size() != state.df.size()) throw DataError("IDF fit: bags differ in length");
    for (std::size_t i = 0; i < b.tf.size(); ++i)
      if (b.tf[i] > 0.0) ++state.df[i];
  }
  return state;
}

std::vector<double> apply_idf(std::span<const double> tf, const WeightingState& state) {
  if (tf.size() != state.df.size())
    throw DataError("IDF table has " + std::to_string(state.df.size()) + " entries, bag has " +
                    std::to_string(tf.size()));
  std::vector<double> out(tf.size());
  const double n = static_cast<double>(state.n);
  for (std::size_t i = 0; i < tf.size(); ++i)
    out[i] = state.df[i] == 0 ? 0.0 : tf[i] * std::log10(n / static_cast<double>(state.df[i]));
  return out;
}

std::vector<double> normalize_bag(std::span<const double> tf, const BagLayout& layout) {
  if (std::accumulate(layout.begin(), layout.end(), std::size_t{0}) != tf.size())
    throw DataError("bag layout does not match bag length");
  std::vector<double> out(tf.begin(), tf.end());
  std::size_t offset = 0;
  for (const std::size_t width : layout) {
    double mass = 0.0;
    for (std::size_t i = offset; i < offset + width; ++i) {
      if (!std::isfinite(out[i])) throw DataError("cannot normalize a bag with non-finite entries");
      mass += std::abs(out[i]);
    }
    if (mass > 0.0)
      for (std::size_t i = offset; i < offset + width; ++i) out[i] /= mass;
    offset += width;
  }
  return out;
}

std::vector<double> postprocess(std::span<const double> tf, const WeightingState& state, bool normalize,
                                const BagLayout& layout) {
  std::vector<double> out(tf.begin(), tf.end());
  if (state.log) out = apply_log_tf(out);
  if (state.idf) out = apply_idf(out, state);
  if (normalize) out = normalize_bag(out, layout);
  return out;
}

}  // namespace xbow
