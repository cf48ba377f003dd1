#include "xbow/metrics.hpp"

#include <gtest/gtest.h>

#include <cmath>

#include "test_util.hpp"
#include "xbow/error.hpp"

namespace xbow {
namespace {

using Vec = std::vector<double>;
using Labels = std::vector<std::string>;

// Direct evaluation of the concordance formula with population moments.
double ccc_oracle(const Vec& g, const Vec& p) {
  const double n = static_cast<double>(g.size());
  double mg = 0, mp = 0;
  for (std::size_t i = 0; i < g.size(); ++i) {
    mg += g[i] / n;
    mp += p[i] / n;
  }
  double vg = 0, vp = 0, cov = 0;
  for (std::size_t i = 0; i < g.size(); ++i) {
    vg += (g[i] - mg) * (g[i] - mg) / n;
    vp += (p[i] - mp) * (p[i] - mp) / n;
    cov += (g[i] - mg) * (p[i] - mp) / n;
  }
  return 2 * cov / (vg + vp + (mg - mp) * (mg - mp));
}

TEST(CccTest, Examples) {
  EXPECT_NEAR(ccc(Vec{1, 2, 3}, Vec{1, 2, 3}), 1.0, 1e-15);
  EXPECT_NEAR(ccc(Vec{1, 2, 3}, Vec{3, 2, 1}), -1.0, 1e-15);
  EXPECT_NEAR(ccc(Vec{1, 2, 3}, Vec{2, 3, 4}), 4.0 / 7.0, 1e-15);
  EXPECT_NEAR(ccc_oracle(Vec{1, 2, 3}, Vec{2, 3, 4}), 4.0 / 7.0, 1e-15);
}

TEST(CccTest, Errors) {
  EXPECT_THROW(ccc(Vec{1, 1}, Vec{2, 2}), DataError);
  EXPECT_THROW(ccc(Vec{1}, Vec{2}), DataError);
  EXPECT_THROW(ccc(Vec{1, 2}, Vec{2}), DataError);
  EXPECT_NO_THROW(ccc(Vec{1, 1}, Vec{2, 3}));
}

TEST(CccTest, Properties) {
  RngStream rng(50);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 2 + rng.uniform_index(40);
    Vec g(n), p(n);
    for (std::size_t i = 0; i < n; ++i) {
      g[i] = testing::noise(rng);
      p[i] = 0.5 * g[i] + testing::noise(rng);
    }
    const double c = ccc(g, p);
    EXPECT_NEAR(c, ccc_oracle(g, p), 1e-12);
    EXPECT_NEAR(ccc(g, g), 1.0, 1e-12);
    EXPECT_NEAR(c, ccc(p, g), 1e-12);
    EXPECT_LE(std::abs(c), std::abs(pearson(g, p)) + 1e-12);
    Vec shifted = g;
    const double shift = 0.5 + rng.uniform01();
    for (double& v : shifted) v += shift;
    EXPECT_LT(ccc(g, shifted), 1.0);
    EXPECT_NEAR(pearson(g, shifted), 1.0, 1e-12);
  }
}

TEST(AccuracyTest, Examples) {
  EXPECT_EQ(weighted_accuracy(Labels{"A", "B"}, Labels{"A", "B"}), 1.0);
  EXPECT_EQ(unweighted_accuracy(Labels{"A", "B"}, Labels{"A", "B"}), 1.0);
  const Labels gold{"A", "A", "A", "B"}, pred{"A", "A", "A", "A"};
  EXPECT_EQ(weighted_accuracy(gold, pred), 0.75);
  EXPECT_EQ(unweighted_accuracy(gold, pred), 0.5);
  EXPECT_THROW(weighted_accuracy(Labels{}, Labels{}), DataError);
  EXPECT_THROW(unweighted_accuracy(Labels{"A"}, Labels{}), DataError);
}

TEST(AccuracyTest, BalancedGoldAgrees) {
  RngStream rng(51);
  const Labels classes{"neg", "neu", "pos"};
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t per = 1 + rng.uniform_index(10);
    Labels gold, pred;
    for (const auto& c : classes)
      for (std::size_t i = 0; i < per; ++i) {
        gold.push_back(c);
        pred.push_back(classes[rng.uniform_index(3)]);
      }
    EXPECT_NEAR(weighted_accuracy(gold, pred), unweighted_accuracy(gold, pred), 1e-15);
  }
}

}  // namespace
}  // namespace xbow
