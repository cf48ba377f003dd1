#include "xbow/bag_writer.hpp"

#include <gtest/gtest.h>

#include <sstream>

#include "test_util.hpp"
#include "xbow/error.hpp"

namespace xbow {
namespace {

std::string render(const std::vector<Bag>& bags, OutputFormat format) {
  std::ostringstream out;
  write_bags(bags, format, out);
  return out.str();
}

TEST(BagWriterTest, LibsvmSparseLine) {
  const std::vector<Bag> bags{{"", std::nullopt, "1", {0, 2, 0.5}}};
  EXPECT_EQ(render(bags, OutputFormat::libsvm), "1 2:2 3:0.5\n");
}

TEST(BagWriterTest, CsvRow) {
  const std::vector<Bag> bags{{"A", std::nullopt, "pos", {1, 0}}};
  EXPECT_EQ(render(bags, OutputFormat::csv), "name;tf_0;tf_1;class\nA;1;0;pos\n");
}

TEST(BagWriterTest, EmptyListRejected) {
  EXPECT_THROW(render({}, OutputFormat::arff), DataError);
}

TEST(BagWriterTest, InconsistentLengthsRejected) {
  const std::vector<Bag> bags{{"A", {}, {}, {1, 2}}, {"B", {}, {}, {1}}};
  EXPECT_THROW(render(bags, OutputFormat::csv), DataError);
}

TEST(BagWriterTest, LibsvmNominalLabelsByFirstAppearance) {
  const std::vector<Bag> bags{{"", {}, "neg", {1}}, {"", {}, "pos", {0}}, {"", {}, "neg", {0}}};
  EXPECT_EQ(render(bags, OutputFormat::libsvm), "0 1:1\n1\n0\n");
}

TEST(BagWriterTest, LibsvmNeverWritesZeroValues) {
  RngStream rng(11);
  std::vector<Bag> bags;
  for (int b = 0; b < 200; ++b) {
    Bag bag{"", {}, "0.5", {}};
    for (int i = 0; i < 20; ++i) bag.tf.push_back(rng.uniform01() < 0.5 ? 0.0 : -0.0);
    bag.tf[rng.uniform_index(20)] = 3.0;
    bags.push_back(bag);
  }
  std::istringstream in(render(bags, OutputFormat::libsvm));
  std::string line;
  while (std::getline(in, line)) {
    EXPECT_EQ(line.find(":0 "), std::string::npos) << line;
    EXPECT_NE(line.find(":3"), std::string::npos) << line;
    EXPECT_NE(line.back(), '0') << line;
  }
}

TEST(BagWriterTest, ArffLayout) {
  const std::vector<Bag> bags{{"A", 0.8, "0.25", {1, 0}}};
  EXPECT_EQ(render(bags, OutputFormat::arff),
            "@relation openXBOW\n\n"
            "@attribute name string\n"
            "@attribute frameTime numeric\n"
            "@attribute tf_0 numeric\n"
            "@attribute tf_1 numeric\n"
            "@attribute class numeric\n\n"
            "@data\n"
            "'A',0.8,1,0,0.25\n");
}

TEST(BagWriterTest, FormatFromExtension) {
  EXPECT_EQ(format_from_extension("x.arff"), OutputFormat::arff);
  EXPECT_EQ(format_from_extension("x.CSV"), OutputFormat::csv);
  EXPECT_EQ(format_from_extension("x.libsvm"), OutputFormat::libsvm);
  EXPECT_THROW(format_from_extension("x.bin"), UsageError);
}

TEST(BagWriterTest, FailedWriteLeavesNoFile) {
  testing::TempDir dir;
  const auto target = dir.file("out.csv");
  const std::vector<Bag> bad{{"A", {}, {}, {1, 2}}, {"B", {}, {}, {1}}};
  EXPECT_THROW(write_bags(bad, OutputFormat::csv, target), DataError);
  EXPECT_FALSE(std::filesystem::exists(target));
  EXPECT_TRUE(std::filesystem::is_empty(dir.path()));
}

}  // namespace
}  // namespace xbow
