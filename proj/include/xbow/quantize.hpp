#pragma once

#include <cstddef>
#include <span>
#include <variant>
#include <vector>

#include "xbow/codebook.hpp"
#include "xbow/matrix.hpp"

namespace xbow {

struct QuantizationConfig {
  std::size_t num_assignments = 1;
  bool gaussian = false;
  double sigma = 1.0;

  bool operator==(const QuantizationConfig&) const = default;
};

struct Assignment {
  std::size_t index = 0;
  double weight = 1.0;

  bool operator==(const Assignment&) const = default;
};

/// Numeric codebook of one feature class: plain or split.
using NumericQuantizer = std::variant<SubCodebook, SvqStructure>;

std::size_t quantizer_size(const NumericQuantizer& q);
std::size_t quantizer_dims(const NumericQuantizer& q);

/// The num_assignments nearest centroids, closest first, ties to the lower
/// index. Weight is 1, or exp(-d^2 / (2 sigma^2)) with Gaussian encoding.
std::vector<Assignment> assign_vector(std::span<const double> x, const SubCodebook& cb,
                                      const QuantizationConfig& q);

/// Assignments for one frame through either quantizer type.
std::vector<Assignment> assign_frame(std::span<const double> x, const NumericQuantizer& quantizer,
                                     const QuantizationConfig& q);

void accumulate(std::span<const Assignment> assignments, std::span<double> tf);

/// Histogram of all frames (rows) of one window.
std::vector<double> bag_numeric_window(const Matrix& frames, const NumericQuantizer& quantizer,
                                       const QuantizationConfig& q);

}  // namespace xbow
