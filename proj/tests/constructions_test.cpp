#include <gtest/gtest.h>

#include <sstream>

#include "oddtown/constructions.hpp"
#include "oddtown/steiner.hpp"
#include "oracles.hpp"

namespace oddtown {
namespace {

TEST(EventownPair, SmallestCase) {
  const auto [a, b] = eventown_pair(4);
  EXPECT_EQ(a, SetFamily::from_labels(4, {{}, {1, 2}, {3, 4}, {1, 2, 3, 4}}));
  EXPECT_EQ(b, SetFamily::from_labels(4, {{}, {2, 3}, {1, 4}, {1, 2, 3, 4}}));
}

TEST(EventownPair, SizesAndOverlap) {
  for (std::size_t n : {4u, 8u, 12u, 16u}) {
    const auto [a, b] = eventown_pair(n);
    const std::size_t full = std::size_t{1} << (n / 2);
    EXPECT_EQ(a.size(), full);
    EXPECT_EQ(b.size(), full);
    EXPECT_EQ(a, a.canonical());
    EXPECT_TRUE(is_eventown(a));
    EXPECT_TRUE(is_eventown(b));
    std::size_t common = 0;
    for (const auto& s : a) common += b.contains(s);
    EXPECT_EQ(common, std::size_t{1} << (n / 4)) << "n=" << n;
  }
  EXPECT_THROW(eventown_pair(6), ArgumentError);
  EXPECT_THROW(eventown_pair(0), ArgumentError);
}

TEST(EventownPlus, OpIsHalfTheBasePerAddedSet) {
  for (std::size_t n : {4u, 8u, 12u}) {
    const std::size_t half = std::size_t{1} << (n / 2);
    const std::size_t limit = half - (std::size_t{1} << (n / 4));
    for (std::size_t s : {std::size_t{1}, std::size_t{2}, limit}) {
      const auto f = eventown_plus(n, s);
      EXPECT_EQ(f.size(), half + s);
      EXPECT_EQ(op_count(f), s * half / 2) << "n=" << n << " s=" << s;
      const auto g = eventown_plus(n, s, Selector::seeded(s + 100));
      EXPECT_EQ(op_count(g), s * half / 2);
    }
    EXPECT_THROW(eventown_plus(n, 0), ArgumentError);
    EXPECT_THROW(eventown_plus(n, limit + 1), ArgumentError);
  }
}

TEST(EventownPlus, SelectorsAreDeterministic) {
  EXPECT_EQ(eventown_plus(8, 5, Selector::seeded(9)), eventown_plus(8, 5, Selector::seeded(9)));
  const auto f = eventown_plus(8, 2);
  const auto [a, b] = eventown_pair(8);
  // The deterministic selector takes the two smallest members of B \ A.
  std::vector<BitSubset> outside;
  for (const auto& s : b)
    if (!a.contains(s)) outside.push_back(s);
  EXPECT_EQ(f[16], outside[0]);
  EXPECT_EQ(f[17], outside[1]);
}

TEST(Oddtown, SingletonsAndTriples) {
  EXPECT_EQ(singletons(3), SetFamily::from_labels(3, {{1}, {2}, {3}}));
  EXPECT_EQ(disjoint_k4_triples(4), SetFamily::from_labels(4, {{1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {2, 3, 4}}));
  EXPECT_EQ(disjoint_k4_triples(12).size(), 12u);
  EXPECT_THROW(singletons(0), ArgumentError);
  EXPECT_THROW(disjoint_k4_triples(6), ArgumentError);
}

TEST(OddtownPlus, ThreeOddPairsPerTriple) {
  for (std::size_t n : {4u, 8u, 12u}) {
    for (std::size_t s = 1; s <= n; ++s) {
      EXPECT_EQ(op_count(oddtown_plus(n, s)), 3 * s);
      EXPECT_EQ(op_count(oddtown_plus(n, s, Selector::seeded(s))), 3 * s);
    }
    EXPECT_THROW(oddtown_plus(n, 0), ArgumentError);
    EXPECT_THROW(oddtown_plus(n, n + 1), ArgumentError);
  }
}

TEST(SmallExamples, X5HasNoLargeOddtownSubfamily) {
  const auto x = example_x5();
  EXPECT_EQ(x.size(), 6u);
  EXPECT_EQ(x.uniform_size(), 3u);
  EXPECT_EQ(op_count(x), 3u);
  const auto sets = oracle::to_sets(x);
  for (std::size_t skip = 0; skip < sets.size(); ++skip) {
    auto rest = sets;
    rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(skip));
    EXPECT_GT(oracle::op(rest), 0u);
  }
}

TEST(SmallExamples, F1AndF2) {
  EXPECT_EQ(example_f1().size(), 6u);
  EXPECT_EQ(op_count(example_f1()), 4u);
  for (std::size_t k : {5u, 7u, 9u}) {
    const auto f = example_f2(k);
    EXPECT_EQ(f.ground_size(), 2 * k + 2);
    EXPECT_EQ(f.size(), 2 * k + 3);
    EXPECT_EQ(f.uniform_size(), k);
    EXPECT_EQ(op_count(f), 5u);
    EXPECT_EQ(oracle::op(oracle::to_sets(f)), 5u);
  }
  EXPECT_THROW(example_f2(3), ArgumentError);
  EXPECT_THROW(example_f2(6), ArgumentError);
}

TEST(Steiner, ValidDesigns) {
  const auto s21 = load_steiner(ODDTOWN_DATA_DIR "/steiner/s21_5_2.txt", 21, 5, 2);
  EXPECT_EQ(s21.blocks().size(), 21u);
  const auto s5 = load_steiner(ODDTOWN_DATA_DIR "/steiner/s5_5_2.txt", 5, 5, 2);
  EXPECT_EQ(s5.blocks().size(), 1u);
  EXPECT_EQ(load_steiner(ODDTOWN_DATA_DIR "/steiner/s8_4_1.txt").blocks(), steiner_partition(8).blocks());
}

TEST(Steiner, InvalidDesignNamesTheTSet) {
  try {
    load_steiner(ODDTOWN_DATA_DIR "/steiner/bad_s8_4_1.txt");
    FAIL();
  } catch (const ValidationError& e) {
    EXPECT_STREQ(e.what(), "t-set {4} lies in 2 blocks (expected exactly 1)");
  }
  EXPECT_THROW(load_steiner(ODDTOWN_DATA_DIR "/steiner/s8_4_1.txt", 8, 4, 2), ValidationError);
}

TEST(Steiner, ParameterAndParseErrors) {
  EXPECT_THROW(SteinerSystem::validated(4, 2, 2, SetFamily(4)), ArgumentError);
  EXPECT_THROW(SteinerSystem::validated(4, 2, 1, SetFamily::from_labels(4, {{1, 2}, {3}})), ValidationError);
  std::istringstream missing_t("n=4 k=2\n1 2\n3 4\n");
  EXPECT_THROW(read_steiner(missing_t), ParseError);
  std::istringstream repeated("n=4 k=2 t=1\n1 2\n1 2\n3 4\n");
  EXPECT_THROW(read_steiner(repeated), ValidationError);
  EXPECT_THROW(steiner_partition(6), ArgumentError);
}

TEST(Steiner, WriteRoundTrip) {
  const auto s = steiner_partition(12);
  std::ostringstream out;
  write_steiner(out, s);
  std::istringstream in(out.str());
  const auto back = read_steiner(in);
  EXPECT_EQ(back.blocks(), s.blocks());
  EXPECT_EQ(back.t(), 1u);
}

TEST(Steiner, ShadowSizes) {
  EXPECT_EQ(shadow_size_formula(21, 4), Rational(105));
  EXPECT_EQ(shadow_size_formula(5, 4), Rational(5));
  const auto s5 = load_steiner(ODDTOWN_DATA_DIR "/steiner/s5_5_2.txt", 5, 5, 2);
  EXPECT_EQ(shadow(s5.blocks(), 4).size(), 5u);
  EXPECT_THROW(shadow_size_formula(10, 1), ArgumentError);
}

TEST(Steiner, AugmentationsAddTwelvePairs) {
  const auto s = load_steiner(ODDTOWN_DATA_DIR "/steiner/s21_5_2.txt", 21, 5, 2);
  const auto f0 = shadow(s.blocks(), 4);
  const auto extra = shadow_augmentations(s);
  EXPECT_FALSE(extra.empty());
  for (const auto& a : extra) {
    EXPECT_FALSE(f0.contains(a));
    EXPECT_TRUE(std::any_of(s.blocks().begin(), s.blocks().end(),
                            [&](const BitSubset& b) { return a.intersection_size(b) == 3; }));
    SetFamily f = f0;
    f.add(a);
    EXPECT_EQ(c_kt(f, 2), 12u) << a.to_string();
  }
}

}  // namespace
}  // namespace oddtown
