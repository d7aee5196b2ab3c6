#include <gtest/gtest.h>

#include <filesystem>
#include <sstream>

#include "lds/io.hpp"
#include "support/fixtures.hpp"

using namespace lds;
using lds::testing::sample4;
using lds::testing::random_lattice;

namespace {

Lattice parse(const std::string& text) {
  std::istringstream is(text);
  return load(is);
}

} // namespace

TEST(Io, Sample4Text) {
  std::ostringstream os;
  save(sample4(), os);
  EXPECT_EQ(os.str(), "LDS 1 4 2\n3\n5\n6\n9\n20\n31\n12\n30\n");
}

TEST(Io, RoundTripPreservesEveryCell) {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const Lattice lat = random_lattice(seed * 97, seed);
    std::stringstream ss;
    save(lat, ss);
    const Lattice back = load(ss);
    ASSERT_EQ(back.height(), lat.height());
    ASSERT_EQ(back.outer_count(), lat.outer_count());
    ASSERT_TRUE(std::equal(lat.cells().begin(), lat.cells().end(), back.cells().begin(), back.cells().end()));
  }
}

TEST(Io, EmptyLattice) {
  const Lattice lat = parse("LDS 1 1 0\n");
  EXPECT_TRUE(lat.is_empty());
  std::ostringstream os;
  save(Lattice{}, os);
  EXPECT_EQ(os.str(), "LDS 1 1 0\n");
}

TEST(Io, SwappedKeysFailValidation) {
  try {
    parse("LDS 1 4 2\n5\n3\n6\n9\n20\n31\n12\n30\n");
    FAIL() << "expected format_error";
  } catch (const format_error& e) {
    EXPECT_NE(std::string(e.what()).find("column"), std::string::npos) << e.what();
  }
}

TEST(Io, MalformedInputsRejected) {
  EXPECT_THROW(parse(""), format_error);
  EXPECT_THROW(parse("LDS 2 1 1\n4\n"), format_error);
  EXPECT_THROW(parse("LDS 1 0 0\n"), format_error);
  EXPECT_THROW(parse("LDS 1 3 0\n1\n2\n3\n"), format_error);
  EXPECT_THROW(parse("LDS 1 2 3\n1\n2\n3\n4\n"), format_error);
  EXPECT_THROW(parse("LDS 1 2 1\n1\nx\n"), format_error);
  EXPECT_THROW(parse("LDS 1 2 1\n1\n2147483647\n"), format_error);
  EXPECT_THROW(parse("LDS 1 2 1\n0\n2\n"), format_error);
  EXPECT_THROW(parse("LDS 1 2 1\n1\n1\n"), format_error);
  EXPECT_THROW(parse("LDS 1 2 1\n1\n"), format_error);
  EXPECT_THROW(parse("LDS 1 2 1\n1\n2\n3\n"), format_error);
  EXPECT_THROW(parse("LDS 1 2 1 extra\n1\n2\n"), format_error);
}

TEST(Io, MissingFileIsIoError) {
  EXPECT_THROW(load(std::string("/nonexistent/dir/x.lds")), io_error);
  EXPECT_THROW(save(sample4(), std::string("/nonexistent/dir/x.lds")), io_error);
}

TEST(Io, FileRoundTrip) {
  const auto path = (std::filesystem::temp_directory_path() / "lds_io_test.lds").string();
  save(sample4(), path);
  const Lattice back = load(path);
  EXPECT_EQ(back.keys(), sample4().keys());
  std::filesystem::remove(path);
}
