#include <gtest/gtest.h>

#include <algorithm>
#include <vector>

#include "lds/lattice.hpp"
#include "lds/reference_set.hpp"
#include "lds/validate.hpp"
#include "support/fixtures.hpp"

using namespace lds;
using lds::testing::sample4;
using lds::testing::random_lattice;

namespace {

const CellValue kInf = CellValue::infinity();

CellValue key(Key k) { return CellValue::proper(k); }

std::vector<Key> sorted_keys(const Lattice& lat) {
  auto ks = lat.keys();
  std::sort(ks.begin(), ks.end());
  return ks;
}

} // namespace

TEST(CellValue, TotalOrder) {
  EXPECT_LT(CellValue::zero(), key(1));
  EXPECT_LT(key(1), key(2));
  EXPECT_LT(key(KEY_MAX), kInf);
  EXPECT_THROW(CellValue::proper(0), argument_error);
  EXPECT_THROW(CellValue::proper(KEY_MAX + 1), argument_error);
}

TEST(LatticeEmpty, SmallestShape) {
  const Lattice lat = Lattice::empty(1);
  EXPECT_EQ(lat.cell_count(), 10u);
  EXPECT_EQ(lat.at({2, 2}), kInf);
  EXPECT_EQ(lat.size(), 0u);
  EXPECT_EQ(lat.outer_count(), 0);
}

TEST(LatticeEmpty, WallsAreZero) {
  const Lattice lat = Lattice::empty(4);
  EXPECT_EQ(lat.cell_count(), 28u);
  for (int c = 1; c <= 7; ++c) EXPECT_TRUE(lat.at({1, c}).is_zero());
  for (int r = 1; r <= 7; ++r) EXPECT_TRUE(lat.at({r, 1}).is_zero());
}

TEST(LatticeEmpty, RejectsNonPositiveHeight) {
  EXPECT_THROW(Lattice::empty(0), argument_error);
  EXPECT_THROW(Lattice::empty(-3), argument_error);
}

TEST(LatticeFromKeys, RejectsCountsThatDoNotFit) {
  const std::vector<Key> three{1, 2, 3};
  EXPECT_THROW(Lattice::from_keys(3, three), argument_error);  // needs 4..6
  EXPECT_NO_THROW(Lattice::from_keys(2, three));
}

TEST(SearchBasic, Sample4Examples) {
  const Lattice lat = sample4();

  const SearchOutcome k30 = lat.search(30);
  EXPECT_TRUE(k30.found);
  EXPECT_EQ(k30.location, (Coord{4, 3}));
  EXPECT_EQ(k30.path, "d");
  EXPECT_EQ(k30.comparisons, 2u);

  const SearchOutcome k7 = lat.search(7);
  EXPECT_FALSE(k7.found);
  EXPECT_EQ(k7.path, "DDdd");
  EXPECT_EQ(k7.comparisons, 5u);
  EXPECT_EQ(k7.location.row, 1);

  const SearchOutcome k31 = lat.search(31);
  EXPECT_TRUE(k31.found);
  EXPECT_EQ(k31.location, (Coord{2, 4}));
  EXPECT_EQ(k31.path, "ddD");
  EXPECT_EQ(k31.comparisons, 4u);
}

TEST(SearchBasic, EmptyLatticeFindsNothing) {
  const Lattice lat;
  const SearchOutcome o = lat.search(42);
  EXPECT_FALSE(o.found);
  EXPECT_EQ(o.comparisons, 2u);  // h + 1
}

TEST(SearchBasic, ComparisonLawOnRandomLattices) {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    std::vector<Key> keys;
    const Lattice lat = random_lattice(1 + seed * 37 % 400, seed, &keys);
    const int h = lat.height();
    for (Key k : keys) {
      const SearchOutcome o = lat.search(k);
      ASSERT_TRUE(o.found);
      const int s = o.location.diagonal(), t = o.location.col;
      ASSERT_EQ(o.comparisons, static_cast<std::size_t>(h - s + t + 1));
      ASSERT_LE(o.comparisons, static_cast<std::size_t>(h));
      ASSERT_EQ(o.comparisons, o.path.size() + 1);
    }
    for (Key k : {Key{1}, KEY_MAX}) {
      const SearchOutcome o = lat.search(k);
      if (!o.found) EXPECT_EQ(o.comparisons, static_cast<std::size_t>(h + 1));
    }
  }
}

TEST(Inward, SingleDownSwapAfterPlacingTwentyFive) {
  Lattice lat = sample4();
  lat.assign({3, 4}, key(25));
  ASSERT_EQ(lat.outer_count(), 3);
  lat.reset_counters();
  const Coord end = lat.inward({3, 4});
  EXPECT_EQ(end, (Coord{2, 4}));
  EXPECT_EQ(lat.at({2, 4}), key(25));
  EXPECT_EQ(lat.at({3, 4}), key(31));
  EXPECT_EQ(lat.counters().swaps, 1u);
  EXPECT_TRUE(validate(lat).empty()) << validate(lat).to_string();
}

TEST(Inward, NoSwapWhenAlreadyPlaced) {
  Lattice lat = sample4();
  lat.reset_counters();
  EXPECT_EQ(lat.inward({3, 3}), (Coord{3, 3}));
  EXPECT_EQ(lat.counters().swaps, 0u);
}

TEST(Inward, NewGlobalMinimumReachesCornerWithinTwoHSwaps) {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    std::vector<Key> keys;
    Lattice lat = random_lattice(195 + seed, seed, &keys);  // h = 20, k < h
    ASSERT_LT(lat.outer_count(), lat.height());
    const Key smallest = *std::min_element(keys.begin(), keys.end());
    ASSERT_GT(smallest, 1u);
    lat.reset_counters();
    const InsertResult r = lat.insert(smallest - 1);
    ASSERT_TRUE(r.inserted());
    EXPECT_EQ(r.at, (Coord{2, 2}));
    EXPECT_LE(lat.counters().swaps, static_cast<std::uint64_t>(2 * lat.height()));
    EXPECT_TRUE(validate(lat).empty());
  }
}

TEST(Outward, UpSwapAfterRemovingNine) {
  Lattice lat = sample4();
  // Deletion of 9 by hand: F = 30 fills (4,3)'s key into (4,2).
  lat.assign({4, 2}, key(30));
  lat.assign({4, 3}, kInf);
  ASSERT_EQ(lat.outer_count(), 1);
  lat.reset_counters();
  const Coord end = lat.outward({4, 2});
  EXPECT_EQ(end, (Coord{5, 2}));
  EXPECT_EQ(lat.at({5, 2}), key(30));
  EXPECT_EQ(lat.at({4, 2}), key(12));
  EXPECT_EQ(lat.counters().swaps, 1u);
  EXPECT_TRUE(validate(lat).empty());
}

TEST(Outward, NoSwapWhenAlreadyPlaced) {
  Lattice lat = sample4();
  lat.reset_counters();
  EXPECT_EQ(lat.outward({3, 3}), (Coord{3, 3}));
  EXPECT_EQ(lat.outward({2, 4}), (Coord{2, 4}));  // DR is Zero
  EXPECT_EQ(lat.counters().swaps, 0u);
}

TEST(Outward, GlobalMaximumAtCornerReachesOuterDiagonal) {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    Lattice lat = random_lattice(lds::testing::full_size(15), seed);
    ASSERT_EQ(lat.outer_count(), lat.height());
    lat.assign({2, 2}, key(KEY_MAX));
    lat.reset_counters();
    const Coord end = lat.outward({2, 2});
    EXPECT_EQ(end.diagonal(), lat.height() + 2);
    EXPECT_LE(lat.counters().swaps, static_cast<std::uint64_t>(2 * lat.height()));
    EXPECT_TRUE(validate(lat).empty()) << validate(lat).to_string();
  }
}

TEST(Insert, TwentyFiveIntoSample4) {
  Lattice lat = sample4();
  const InsertResult r = lat.insert(25);
  ASSERT_TRUE(r.inserted());
  EXPECT_EQ(r.at, (Coord{2, 4}));
  EXPECT_FALSE(r.grew);
  EXPECT_EQ(lat.at({3, 4}), key(31));
  EXPECT_EQ(lat.outer_count(), 3);
  EXPECT_TRUE(validate(lat).empty());
}

TEST(Insert, DuplicateLeavesLatticeUntouched) {
  Lattice lat = sample4();
  const std::vector<CellValue> before(lat.cells().begin(), lat.cells().end());
  const InsertResult r = lat.insert(20);
  EXPECT_EQ(r.status, InsertResult::Status::AlreadyPresent);
  EXPECT_EQ(lat.counters().swaps, 0u);
  EXPECT_TRUE(std::equal(before.begin(), before.end(), lat.cells().begin(), lat.cells().end()));
}

TEST(Insert, GrowsWhenOuterDiagonalIsFull) {
  Lattice lat;
  ASSERT_TRUE(lat.insert(10).inserted());
  ASSERT_EQ(lat.height(), 1);
  ASSERT_EQ(lat.outer_count(), 1);
  const InsertResult r = lat.insert(20);
  EXPECT_TRUE(r.grew);
  EXPECT_EQ(lat.height(), 2);
  EXPECT_EQ(lat.size(), 2u);
  EXPECT_EQ(lat.cell_count(), 15u);
  EXPECT_TRUE(validate(lat).empty());
}

TEST(Insert, RejectsKeysOutsideDomain) {
  Lattice lat;
  EXPECT_THROW(lat.insert(0), argument_error);
  EXPECT_THROW(lat.insert(KEY_MAX + 1), argument_error);
  EXPECT_THROW(lat.erase(0), argument_error);
}

TEST(Erase, NineFromSample4) {
  Lattice lat = sample4();
  const EraseResult r = lat.erase(9);
  ASSERT_TRUE(r.deleted());
  EXPECT_FALSE(r.shrank);
  EXPECT_EQ(lat.at({5, 2}), key(30));
  EXPECT_EQ(lat.at({4, 2}), key(12));
  EXPECT_EQ(lat.outer_count(), 1);
  EXPECT_TRUE(validate(lat).empty());
}

TEST(Erase, LastOuterKeyNeedsNoRestructuring) {
  Lattice lat = sample4();
  lat.reset_counters();
  const EraseResult r = lat.erase(30);
  ASSERT_TRUE(r.deleted());
  EXPECT_EQ(lat.at({4, 3}), kInf);
  EXPECT_EQ(lat.outer_count(), 1);
  EXPECT_EQ(lat.counters().swaps, 0u);
  EXPECT_TRUE(validate(lat).empty());
}

TEST(Erase, ShrinksWhenOuterDiagonalEmpties) {
  const std::vector<Key> keys{10, 20};
  Lattice lat = Lattice::from_keys(2, keys);
  ASSERT_EQ(lat.outer_count(), 1);
  const EraseResult r = lat.erase(20);
  EXPECT_TRUE(r.shrank);
  EXPECT_EQ(lat.height(), 1);
  EXPECT_EQ(lat.outer_count(), 1);
  EXPECT_EQ(lat.cell_count(), 10u);
  EXPECT_TRUE(validate(lat).empty());
}

TEST(Erase, AbsentKeyIsSignalledNotThrown) {
  Lattice lat = sample4();
  EXPECT_EQ(lat.erase(7).status, EraseResult::Status::Absent);
  EXPECT_EQ(lat.size(), 8u);
  Lattice empty;
  EXPECT_FALSE(empty.erase(7).deleted());
}

TEST(Erase, DrainingReturnsToEmptyLattice) {
  std::vector<Key> keys;
  Lattice lat = random_lattice(300, 99, &keys);
  for (Key k : keys) {
    ASSERT_TRUE(lat.erase(k).deleted());
    ASSERT_TRUE(validate(lat).empty()) << validate(lat).to_string();
  }
  EXPECT_EQ(lat.height(), 1);
  EXPECT_EQ(lat.size(), 0u);
}

TEST(LatticeProperties, InsertThenEraseRestoresKeySet) {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    Lattice lat = random_lattice(50 + seed * 7, seed);
    const auto before = sorted_keys(lat);
    Rng rng(seed + 1000);
    Key fresh;
    do fresh = uniform_key(rng);
    while (lat.contains(fresh));
    ASSERT_TRUE(lat.insert(fresh).inserted());
    ASSERT_TRUE(lat.erase(fresh).deleted());
    EXPECT_EQ(sorted_keys(lat), before);
    EXPECT_TRUE(validate(lat).empty());
  }
}

// Random insert/erase/search against the reference set; structure, counts
// and swap bounds re-checked after every mutation.
TEST(LatticeProperties, RandomOperationsMatchReferenceSet) {
  Rng rng(2024);
  Lattice lat;
  ReferenceSet ref;
  std::vector<Key> pool;
  for (int op = 0; op < 20000; ++op) {
    const auto dice = uniform_below(rng, 10);
    Key k = pool.empty() || dice < 5 ? static_cast<Key>(1 + uniform_below(rng, 5000)) : pool[uniform_below(rng, pool.size())];
    const int h_before = lat.height();
    lat.reset_counters();
    if (dice < 5) {
      const bool ins = lat.insert(k).inserted();
      ASSERT_EQ(ins, ref.insert(k));
      if (ins) pool.push_back(k);
      ASSERT_LE(lat.counters().swaps, static_cast<std::uint64_t>(2 * lat.height()));
    } else if (dice < 8) {
      const bool del = lat.erase(k).deleted();
      ASSERT_EQ(del, ref.erase(k));
      ASSERT_LE(lat.counters().swaps, static_cast<std::uint64_t>(2 * h_before));
    } else {
      ASSERT_EQ(lat.search(k).found, ref.contains(k));
      continue;
    }
    const ValidationReport rep = validate(lat);
    ASSERT_TRUE(rep.empty()) << "op " << op << "\n" << rep.to_string();
    ASSERT_EQ(lat.size(), ref.size());
    if (!lat.is_empty()) {
      const auto h = static_cast<std::size_t>(lat.height());
      const auto k_out = static_cast<std::size_t>(lat.outer_count());
      ASSERT_EQ(lat.size(), h * (h - 1) / 2 + k_out);
      std::size_t improper = 0;
      for (CellValue v : lat.cells()) improper += v.is_sentinel() ? 1 : 0;
      ASSERT_EQ(improper, 4 * h - k_out + 6);
    }
  }
}
