#include <gtest/gtest.h>

#include "lds/validate.hpp"
#include "support/fixtures.hpp"

using namespace lds;
using lds::testing::sample4;

TEST(Validate, Sample4IsClean) {
  const ValidationReport rep = validate(sample4());
  EXPECT_TRUE(rep.empty()) << rep.to_string();
}

TEST(Validate, SmallKeyInMiddleBreaksColumnRowAndDiagonal) {
  Lattice lat = sample4();
  lat.assign({3, 3}, CellValue::proper(2));
  const ValidationReport rep = validate(lat);
  EXPECT_FALSE(rep.sound());
  EXPECT_TRUE(rep.has(Rule::ColumnOrder));
  EXPECT_TRUE(rep.has(Rule::RowOrder));
  EXPECT_TRUE(rep.has(Rule::DiagonalOrder));
  bool column_pair = false;
  for (const Violation& v : rep.items())
    if (v.rule == Rule::ColumnOrder && v.at == Coord{2, 3} && v.other == Coord{3, 3}) column_pair = true;
  EXPECT_TRUE(column_pair) << rep.to_string();
  EXPECT_NE(rep.to_string().find("column 3"), std::string::npos);
  EXPECT_NE(rep.to_string().find("diagonal 5"), std::string::npos);
}

TEST(Validate, EmptyHeightFourIsSingleAdvisory) {
  const ValidationReport rep = validate(Lattice::empty(4));
  ASSERT_EQ(rep.size(), 1u);
  EXPECT_EQ(rep.items()[0].severity, Severity::Advisory);
  EXPECT_TRUE(rep.sound());
}

TEST(Validate, EmptyHeightOneIsClean) { EXPECT_TRUE(validate(Lattice::empty(1)).empty()); }

TEST(Validate, AssigningSample4IntoEmptyShapeIsClean) {
  Lattice lat = Lattice::empty(4);
  const Lattice ref = sample4();
  for (int s = 3; s <= 6; ++s)
    for (int p = 2; p <= s - 1; ++p) {
      const Coord c = Coord::on_diagonal(s, p);
      lat.assign(c, ref.at(c));
    }
  EXPECT_EQ(lat.outer_count(), 2);
  const ValidationReport rep = validate(lat);
  EXPECT_TRUE(rep.empty()) << rep.to_string();
}

TEST(Validate, SentinelMisplacements) {
  Lattice lat = sample4();
  lat.assign({1, 3}, CellValue::infinity());
  lat.assign({4, 1}, CellValue::proper(1));
  lat.assign({2, 6}, CellValue::proper(99));
  const ValidationReport rep = validate(lat);
  EXPECT_TRUE(rep.has(Rule::RowOneZero));
  EXPECT_TRUE(rep.has(Rule::ColumnOneZero));
  EXPECT_TRUE(rep.has(Rule::WallInfinity));
}

TEST(Validate, InfinityInsideAndGapInStagingPrefix) {
  Lattice lat = sample4();
  lat.assign({3, 2}, CellValue::infinity());
  EXPECT_TRUE(validate(lat).has(Rule::ProperRequired));

  Lattice gap = sample4();
  gap.assign({5, 2}, CellValue::infinity());  // prefix now starts with inf, 30 follows
  EXPECT_TRUE(validate(gap).has(Rule::StagingPrefix));
}

TEST(Validate, DuplicateKeysReportedOncePerPair) {
  Lattice lat = sample4();
  lat.assign({4, 3}, CellValue::proper(3));
  const ValidationReport rep = validate(lat);
  std::size_t dups = 0;
  for (const Violation& v : rep.items()) dups += v.rule == Rule::DuplicateKey ? 1 : 0;
  EXPECT_EQ(dups, 1u);
}

TEST(Validate, ReportsAreOrderedByFlatIndex) {
  Lattice lat = sample4();
  lat.assign({4, 3}, CellValue::proper(1));
  lat.assign({2, 2}, CellValue::proper(40));
  const ValidationReport rep = validate(lat);
  ASSERT_GE(rep.size(), 2u);
  for (std::size_t i = 1; i < rep.size(); ++i)
    EXPECT_LE(flat_offset(rep.items()[i - 1].at), flat_offset(rep.items()[i].at));
}
