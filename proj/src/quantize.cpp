#include "xbow/quantize.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "xbow/error.hpp"

namespace xbow {

std::size_t quantizer_size(const NumericQuantizer& q) {
  return std::visit([](const auto& v) { return v.size(); }, q);
}

std::size_t quantizer_dims(const NumericQuantizer& q) {
  return std::visit([](const auto& v) { return v.dims(); }, q);
}

std::vector<Assignment> assign_vector(std::span<const double> x, const SubCodebook& cb,
                                      const QuantizationConfig& q) {
  if (x.size() != cb.dims())
    throw DataError("vector of dimension " + std::to_string(x.size()) + " does not match codebook dimension " +
                    std::to_string(cb.dims()));
  if (q.num_assignments == 0) throw DataError("number of assignments must be at least 1");
  if (q.num_assignments > cb.size())
    throw DataError("number of assignments " + std::to_string(q.num_assignments) + " exceeds codebook size " +
                    std::to_string(cb.size()));

  const std::size_t n = cb.size();
  std::vector<double> d2(n);
  for (std::size_t i = 0; i < n; ++i) d2[i] = squared_distance(x, cb.centroids.row(i));

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  const auto closer = [&](std::size_t a, std::size_t b) { return d2[a] < d2[b] || (d2[a] == d2[b] && a < b); };
  const auto mid = order.begin() + static_cast<std::ptrdiff_t>(q.num_assignments);
  std::partial_sort(order.begin(), mid, order.end(), closer);

  std::vector<Assignment> out;
  out.reserve(q.num_assignments);
  const double denom = 2.0 * q.sigma * q.sigma;
  for (auto it = order.begin(); it != mid; ++it)
    out.push_back({*it, q.gaussian ? std::exp(-d2[*it] / denom) : 1.0});
  return out;
}

std::vector<Assignment> assign_frame(std::span<const double> x, const NumericQuantizer& quantizer,
                                     const QuantizationConfig& q) {
  if (const auto* svq = std::get_if<SvqStructure>(&quantizer)) {
    const auto idx = svq_index_vector(*svq, x);
    return assign_vector(idx, svq->top, q);
  }
  return assign_vector(x, std::get<SubCodebook>(quantizer), q);
}

void accumulate(std::span<const Assignment> assignments, std::span<double> tf) {
  for (const auto& a : assignments) tf[a.index] += a.weight;
}

std::vector<double> bag_numeric_window(const Matrix& frames, const NumericQuantizer& quantizer,
                                       const QuantizationConfig& q) {
  std::vector<double> tf(quantizer_size(quantizer), 0.0);
  for (std::size_t r = 0; r < frames.rows(); ++r) accumulate(assign_frame(frames.row(r), quantizer, q), tf);
  return tf;
}

}  // namespace xbow
