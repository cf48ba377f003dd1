#pragma once

#include <span>
#include <string>

namespace xbow {

/// Concordance correlation coefficient with population moments.
double ccc(std::span<const double> gold, std::span<const double> pred);

double pearson(std::span<const double> gold, std::span<const double> pred);

/// Overall fraction of correct predictions.
double weighted_accuracy(std::span<const std::string> gold, std::span<const std::string> pred);

/// Mean per-class recall over the classes present in gold.
double unweighted_accuracy(std::span<const std::string> gold, std::span<const std::string> pred);

}  // namespace xbow
