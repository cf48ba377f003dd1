#include "xbow/windowing.hpp"

#include <gtest/gtest.h>

#include <cmath>

#include "xbow/error.hpp"

namespace xbow {
namespace {

Dataset timed(const std::vector<std::string>& names, double duration, double step) {
  Dataset ds;
  ds.has_time = true;
  ds.dims[1] = 1;
  for (const auto& name : names)
    for (std::size_t i = 0; static_cast<double>(i) * step <= duration + 1e-9; ++i)
      ds.frames.push_back(Frame{name, static_cast<double>(i) * step, {}, {{1, {0.0}}}, {}});
  return ds;
}

std::vector<double> times_of(const Dataset& ds, const Window& w) {
  std::vector<double> t;
  for (const auto i : w.frames) t.push_back(*ds.frames[i].time);
  return t;
}

TEST(SegmentWindowsTest, CenteredHalfOpenIntervals) {
  const Dataset ds = timed({"A"}, 3.5, 0.5);
  const auto w = segment_windows(ds, WindowingConfig{2, 1}, nullptr);
  ASSERT_EQ(w.size(), 4u);
  for (std::size_t k = 0; k < 4; ++k) EXPECT_EQ(w[k].center, static_cast<double>(k));
  EXPECT_EQ(times_of(ds, w[1]), (std::vector<double>{0, 0.5, 1.0, 1.5}));
  EXPECT_EQ(times_of(ds, w[0]), (std::vector<double>{0, 0.5}));
  EXPECT_EQ(times_of(ds, w[3]), (std::vector<double>{2, 2.5, 3, 3.5}));
}

TEST(SegmentWindowsTest, LongRecordingWindowCount) {
  const Dataset ds = timed({"rec"}, 300, 0.01);
  const auto w = segment_windows(ds, WindowingConfig{8.0, 0.8}, nullptr);
  // Enumerate centers k*0.8 not exceeding the last frame time.
  std::size_t oracle = 0;
  while (static_cast<double>(oracle) * 0.8 <= 300.0 + 1e-9) ++oracle;
  EXPECT_EQ(oracle, static_cast<std::size_t>(std::floor(300 / 0.8)) + 1);
  EXPECT_EQ(w.size(), oracle);
  EXPECT_EQ(w.size(), 376u);
}

TEST(SegmentWindowsTest, LabelsAtCenters) {
  const Dataset ds = timed({"A", "B"}, 1.0, 0.25);
  LabelTable labels;
  for (const std::string name : {"A", "B"})
    for (int k = 0; k <= 2; ++k) labels.insert(name, k * 0.5, name + std::to_string(k));
  const auto w = segment_windows(ds, WindowingConfig{1, 0.5}, &labels);
  ASSERT_EQ(w.size(), 6u);
  EXPECT_EQ(w[4].name, "B");
  EXPECT_EQ(w[4].label, "B1");
}

TEST(SegmentWindowsTest, MissingLabelNamesInstant) {
  const Dataset ds = timed({"A"}, 1.0, 0.25);
  LabelTable labels;
  labels.insert("A", 0.0, "x");
  try {
    segment_windows(ds, WindowingConfig{1, 0.5}, &labels);
    FAIL();
  } catch (const DataError& e) {
    EXPECT_NE(std::string(e.what()).find("0.5"), std::string::npos) << e.what();
  }
}

TEST(SegmentWindowsTest, NonWindowedWholeInstances) {
  Dataset ds = timed({"A", "B"}, 1, 0.5);
  for (auto& f : ds.frames) f.time.reset();
  LabelTable labels;
  labels.insert("A", std::nullopt, "pos");
  labels.insert("B", std::nullopt, "neg");
  const auto w = segment_windows(ds, std::nullopt, &labels);
  ASSERT_EQ(w.size(), 2u);
  EXPECT_EQ(w[0].frames.size(), 3u);
  EXPECT_EQ(w[1].label, "neg");
  EXPECT_FALSE(w[0].center);
  EXPECT_THROW(segment_windows(ds, WindowingConfig{1, 1}, nullptr), DataError);
}

TEST(SegmentWindowsTest, MembershipProperty) {
  for (const auto& [width, hop] : std::vector<std::pair<double, double>>{{2, 1}, {8, 0.8}, {1, 0.3}, {0.5, 1}}) {
    const Dataset ds = timed({"A"}, 20, 0.1);
    const auto windows = segment_windows(ds, WindowingConfig{width, hop}, nullptr);
    std::vector<std::size_t> membership(ds.frames.size(), 0);
    for (const auto& w : windows)
      for (const auto i : w.frames) {
        ++membership[i];
        const double t = *ds.frames[i].time;
        EXPECT_GE(t, *w.center - width / 2 - 1e-9);
        EXPECT_LT(t, *w.center + width / 2);
      }
    const auto cap = static_cast<std::size_t>(std::ceil(width / hop));
    for (const auto m : membership) EXPECT_LE(m, cap);
  }
}

TEST(AssembleBagTest, Concatenation) {
  const auto bag = assemble_bag({{kTextClass, {0, 2}}, {1, {1, 0}}}, {1, kTextClass}, "A", 0.5, "x");
  EXPECT_EQ(bag.tf, (std::vector<double>{1, 0, 0, 2}));
  EXPECT_EQ(bag.name, "A");
  EXPECT_EQ(bag.time, 0.5);
  EXPECT_EQ(assemble_bag({{3, {4, 5}}}, {3}, "A", {}, {}).tf, (std::vector<double>{4, 5}));
  EXPECT_EQ(assemble_bag({{2, {2}}, {1, {1}}}, {2, 1}, "A", {}, {}).tf, (std::vector<double>{1, 2}));
}

TEST(AssembleBagTest, Errors) {
  EXPECT_THROW(assemble_bag({{1, {1}}}, {1, 2}, "A", {}, {}), DataError);
  EXPECT_THROW(assemble_bag({{1, {1}}, {1, {1}}}, {1}, "A", {}, {}), DataError);
  EXPECT_THROW(assemble_bag({{1, {1}}, {4, {1}}}, {1}, "A", {}, {}), DataError);
}

}  // namespace
}  // namespace xbow
