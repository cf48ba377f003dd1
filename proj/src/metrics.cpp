#include "xbow/metrics.hpp"

#include <cmath>
#include <map>

#include "xbow/error.hpp"

namespace xbow {
namespace {

struct Moments {
  double mean_g = 0, mean_p = 0, var_g = 0, var_p = 0, cov = 0;
};

Moments moments(std::span<const double> g, std::span<const double> p) {
  if (g.size() != p.size()) throw DataError("gold and prediction series differ in length");
  if (g.size() < 2) throw DataError("correlation needs at least two values");
  Moments m;
  const double n = static_cast<double>(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (!std::isfinite(g[i]) || !std::isfinite(p[i])) throw DataError("non-finite value in series");
    m.mean_g += g[i];
    m.mean_p += p[i];
  }
  m.mean_g /= n;
  m.mean_p /= n;
  for (std::size_t i = 0; i < g.size(); ++i) {
    const double dg = g[i] - m.mean_g;
    const double dp = p[i] - m.mean_p;
    m.var_g += dg * dg;
    m.var_p += dp * dp;
    m.cov += dg * dp;
  }
  m.var_g /= n;
  m.var_p /= n;
  m.cov /= n;
  return m;
}

void check_labels(std::span<const std::string> gold, std::span<const std::string> pred) {
  if (gold.size() != pred.size()) throw DataError("gold and prediction label lists differ in length");
  if (gold.empty()) throw DataError("accuracy of an empty label list is undefined");
}

}  // namespace

double ccc(std::span<const double> gold, std::span<const double> pred) {
  const Moments m = moments(gold, pred);
  const double gap = m.mean_g - m.mean_p;
  const double denom = m.var_g + m.var_p + gap * gap;
  if (m.var_g == 0.0 && m.var_p == 0.0) throw DataError("CCC is undefined when both series are constant");
  return 2.0 * m.cov / denom;
}

double pearson(std::span<const double> gold, std::span<const double> pred) {
  const Moments m = moments(gold, pred);
  if (m.var_g == 0.0 || m.var_p == 0.0) throw DataError("Pearson correlation is undefined for a constant series");
  return m.cov / std::sqrt(m.var_g * m.var_p);
}

double weighted_accuracy(std::span<const std::string> gold, std::span<const std::string> pred) {
  check_labels(gold, pred);
  std::size_t correct = 0;
  for (std::size_t i = 0; i < gold.size(); ++i) correct += gold[i] == pred[i];
  return static_cast<double>(correct) / static_cast<double>(gold.size());
}

double unweighted_accuracy(std::span<const std::string> gold, std::span<const std::string> pred) {
  check_labels(gold, pred);
  std::map<std::string, std::pair<std::size_t, std::size_t>> per_class;  // correct, total
  for (std::size_t i = 0; i < gold.size(); ++i) {
    auto& [correct, total] = per_class[gold[i]];
    ++total;
    correct += gold[i] == pred[i];
  }
  double sum = 0.0;
  for (const auto& [label, counts] : per_class)
    sum += static_cast<double>(counts.first) / static_cast<double>(counts.second);
  return sum / static_cast<double>(per_class.size());
}

}  // namespace xbow
