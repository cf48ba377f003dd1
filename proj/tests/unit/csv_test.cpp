#include "xbow/csv.hpp"

#include <gtest/gtest.h>

#include "test_util.hpp"
#include "xbow/error.hpp"

namespace xbow {
namespace {

TEST(CsvTest, DirectRoleApplication) {
  const auto ds = parse_csv_dataset("A;0.70;happy\n", parse_attribute_spec("nc0"));
  ASSERT_EQ(ds.frames.size(), 1u);
  EXPECT_EQ(ds.frames[0].name, "A");
  EXPECT_EQ(ds.frames[0].label, "0.70");
  EXPECT_EQ(ds.frames[0].text, "happy");
  EXPECT_TRUE(ds.has_label);
  EXPECT_TRUE(ds.has_text);
}

TEST(CsvTest, NumericRows) {
  const auto ds = parse_csv_dataset("A;1.0;2.0\nA;3.0;4.0\n", parse_attribute_spec("n11"));
  ASSERT_EQ(ds.frames.size(), 2u);
  EXPECT_EQ(ds.frames[0].numeric.at(1), (std::vector<double>{1, 2}));
  EXPECT_EQ(ds.frames[1].numeric.at(1), (std::vector<double>{3, 4}));
  EXPECT_EQ(ds.dims.at(1), 2u);
}

TEST(CsvTest, ArityErrorNamesLine) {
  try {
    parse_csv_dataset("A;1.0\n", parse_attribute_spec("n11"));
    FAIL();
  } catch (const DataError& e) {
    EXPECT_NE(std::string(e.what()).find("line 1"), std::string::npos) << e.what();
  }
}

TEST(CsvTest, NonNumericOutsideHeaderRejected) {
  EXPECT_THROW(parse_csv_dataset("A;1;2\nA;x;3\n", parse_attribute_spec("n11")), DataError);
}

TEST(CsvTest, HeaderDetected) {
  const auto ds = parse_csv_dataset("name;frameTime;f1\nA;0;1.5\nA;0.01;2.5\n", parse_attribute_spec("nt1"));
  ASSERT_EQ(ds.frames.size(), 2u);
  EXPECT_EQ(ds.frames[1].time, 0.01);
}

TEST(CsvTest, CrLfAndBlankLines) {
  const auto ds = parse_csv_dataset("A;1\r\n\r\nB;2\r\n", parse_attribute_spec("n1"));
  ASSERT_EQ(ds.frames.size(), 2u);
  EXPECT_EQ(ds.frames[1].name, "B");
}

TEST(CsvTest, QuotedTextWithSeparators) {
  const auto ds = parse_csv_dataset("1;pos;x;\"good; \"\"very\"\" good\"\n", parse_attribute_spec("ncr0"));
  ASSERT_EQ(ds.frames.size(), 1u);
  EXPECT_EQ(ds.frames[0].text, "good; \"very\" good");
}

TEST(CsvTest, GroupsByNameAndSortsByTime) {
  const auto ds = parse_csv_dataset("B;0.2;1\nA;0.1;2\nB;0.1;3\nA;0.0;4\n", parse_attribute_spec("nt1"));
  std::vector<std::pair<std::string, double>> order;
  for (const auto& f : ds.frames) order.emplace_back(f.name, *f.time);
  const std::vector<std::pair<std::string, double>> expected{{"B", 0.1}, {"B", 0.2}, {"A", 0.0}, {"A", 0.1}};
  EXPECT_EQ(order, expected);
}

TEST(CsvTest, UnterminatedQuote) { EXPECT_THROW(parse_csv("a;\"b\n"), DataError); }

// parse(render(row)) == row for arbitrary fields built from an alphabet that
// stresses quoting.
TEST(CsvTest, RenderParseRoundTripProperty) {
  RngStream rng(7);
  const std::string alphabet = "ab ;\"\n\r,x";
  for (int trial = 0; trial < 2000; ++trial) {
    std::vector<std::string> fields(1 + rng.uniform_index(5));
    for (auto& f : fields) {
      const std::size_t len = rng.uniform_index(6);
      for (std::size_t i = 0; i < len; ++i) f.push_back(alphabet[rng.uniform_index(alphabet.size())]);
    }
    const std::string line = render_csv_record(fields);
    const auto records = parse_csv(line + "\n");
    ASSERT_EQ(records.size(), 1u) << line;
    EXPECT_EQ(records[0].fields, fields) << line;
  }
}

TEST(CsvTest, ReadFromFile) {
  testing::TempDir dir;
  testing::write_file(dir.file("in.csv"), "A;0;1;2\nA;0.5;3;4\n");
  EXPECT_EQ(csv_column_count(dir.file("in.csv")), 4u);
  const auto ds = read_csv(dir.file("in.csv"), default_attribute_spec(4));
  EXPECT_EQ(ds.frames.size(), 2u);
  EXPECT_TRUE(ds.has_time);
  EXPECT_THROW(read_csv(dir.file("missing.csv"), default_attribute_spec(4)), DataError);
}

}  // namespace
}  // namespace xbow
