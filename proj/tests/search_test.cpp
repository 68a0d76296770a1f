#include <gtest/gtest.h>

#include <cstdlib>

#include "oddtown/constructions.hpp"
#include "oddtown/search.hpp"
#include "oracles.hpp"

namespace oddtown {
namespace {

SearchSpec make(std::size_t n, std::size_t m, SetClass c, std::size_t k = 0) {
  SearchSpec s;
  s.n = n;
  s.m = m;
  s.set_class = c;
  s.k = k;
  return s;
}

SearchSpec with_mode(SearchSpec s, SearchMode mode) {
  s.mode = mode;
  return s;
}

std::function<bool(const oracle::Set&)> keep_for(const SearchSpec& s) {
  return [s](const oracle::Set& x) {
    switch (s.set_class) {
      case SetClass::even: return x.size() % 2 == 0;
      case SetClass::odd: return x.size() % 2 == 1;
      case SetClass::uniform: return x.size() == s.k;
    }
    return false;
  };
}

oracle::Minimum brute(const SearchSpec& s) {
  const auto pool = oracle::subsets(static_cast<int>(s.n), keep_for(s));
  if (s.objective == Objective::op) return oracle::brute_min(pool, s.m, oracle::op);
  const std::size_t t = s.t;
  return oracle::brute_min(pool, s.m, [t](const std::vector<oracle::Set>& f) { return oracle::ckt(f, t); });
}

struct Case {
  SearchSpec spec;
  std::uint64_t expected;
};

SearchSpec ckt(std::size_t n, std::size_t k, std::size_t t, std::size_t m) {
  auto s = make(n, m, SetClass::uniform, k);
  s.objective = Objective::ckt;
  s.t = t;
  return s;
}

std::vector<Case> oracle_cases() {
  return {
      {make(4, 5, SetClass::even), 2},   {make(4, 6, SetClass::even), 4},
      {make(5, 5, SetClass::even), 2},   {make(3, 4, SetClass::odd), 3},
      {make(4, 5, SetClass::odd), 3},    {make(5, 6, SetClass::odd), 3},
      {make(4, 6, SetClass::odd), 6},    {make(4, 7, SetClass::odd), 9},
      {make(5, 7, SetClass::odd), 6},    {make(5, 6, SetClass::uniform, 3), 3},
      {ckt(5, 4, 2, 5), 0},              {ckt(5, 3, 1, 6), 3},
  };
}

TEST(Search, FrozenMinimaMatchBruteForce) {
  for (const auto& c : oracle_cases()) {
    const auto ref = brute(c.spec);
    ASSERT_EQ(ref.value, c.expected) << to_string(c.spec.set_class) << " n=" << c.spec.n << " m=" << c.spec.m;
    for (auto mode : {SearchMode::exhaustive, SearchMode::branch_and_bound}) {
      const auto r = min_op(with_mode(c.spec, mode));
      EXPECT_TRUE(r.optimal);
      EXPECT_EQ(r.best_value, c.expected) << to_string(mode) << " n=" << c.spec.n << " m=" << c.spec.m;
      EXPECT_EQ(oracle::to_sets(r.witness), ref.witness) << to_string(mode) << " n=" << c.spec.n;
      EXPECT_EQ(objective_value(r.witness, c.spec), r.best_value);
    }
  }
}

TEST(Search, EvenFourFiveWitness) {
  const auto r = min_op(make(4, 5, SetClass::even));
  EXPECT_EQ(r.witness, SetFamily::from_labels(4, {{}, {1, 2}, {1, 3}, {2, 4}, {1, 2, 3, 4}}));
}

TEST(Search, EvenSixNineAgreesAcrossModes) {
  SetFamily expected(6);
  for (std::uint64_t x : {0, 3, 5, 10, 15, 48, 53, 58, 63}) expected.add(BitSubset::from_word(6, x));
  const auto spec = make(6, 9, SetClass::even);
  for (auto mode : {SearchMode::exhaustive, SearchMode::branch_and_bound}) {
    for (bool sym : {false, true}) {
      auto s = with_mode(spec, mode);
      s.symmetry = sym;
      const auto r = min_op(s);
      EXPECT_TRUE(r.optimal);
      EXPECT_EQ(r.best_value, 4u);
      EXPECT_EQ(r.witness, expected) << to_string(mode) << " symmetry=" << sym;
    }
  }
}

TEST(Search, CktSixFourTwo) {
  const auto r = min_ckt(ckt(6, 4, 2, 9));
  EXPECT_TRUE(r.optimal);
  EXPECT_EQ(r.best_value, 12u);
  EXPECT_EQ(c_kt(r.witness, 2), 12u);
}

TEST(Search, WitnessIndependentOfThreadCount) {
  for (const auto& base : {make(6, 9, SetClass::even), make(5, 7, SetClass::odd), make(6, 10, SetClass::odd),
                           make(6, 8, SetClass::uniform, 3), ckt(6, 4, 2, 9)}) {
    std::optional<SearchResult> first;
    for (unsigned threads : {1u, 2u, 8u}) {
      auto s = base;
      s.threads = threads;
      const auto r = min_op(s);
      EXPECT_TRUE(r.optimal);
      if (!first) {
        first = r;
        continue;
      }
      EXPECT_EQ(r.best_value, first->best_value) << "threads=" << threads;
      EXPECT_EQ(r.witness, first->witness) << "threads=" << threads;
    }
  }
}

TEST(Search, BoundsDoNotChangeTheAnswer) {
  for (const auto& base : {make(5, 7, SetClass::even), make(5, 8, SetClass::odd), make(6, 7, SetClass::uniform, 3)}) {
    const auto ref = min_op(with_mode(base, SearchMode::exhaustive));
    for (bool conflict : {false, true})
      for (bool cls : {false, true}) {
        auto s = base;
        s.conflict_bound = conflict;
        s.class_bound = cls;
        const auto r = min_op(s);
        EXPECT_EQ(r.best_value, ref.best_value);
        EXPECT_EQ(r.witness, ref.witness);
      }
  }
}

TEST(Search, BoundsPruneNodes) {
  auto plain = make(6, 10, SetClass::even);
  plain.conflict_bound = false;
  plain.class_bound = false;
  plain.symmetry = false;
  auto pruned = plain;
  pruned.conflict_bound = true;
  pruned.class_bound = true;
  EXPECT_LT(min_op(pruned).nodes_explored, min_op(plain).nodes_explored);
}

TEST(Search, MinimumIsMonotoneInFamilySize) {
  for (auto c : {SetClass::even, SetClass::odd}) {
    std::uint64_t prev = 0;
    for (std::size_t m = 1; m <= 10; ++m) {
      const auto r = min_op(make(5, m, c));
      EXPECT_GE(r.best_value, prev) << to_string(c) << " m=" << m;
      prev = r.best_value;
    }
  }
}

TEST(Search, ClassCapacityIsConflictFree) {
  EXPECT_EQ(min_op(make(6, 8, SetClass::even)).best_value, 0u);
  EXPECT_EQ(min_op(make(6, 6, SetClass::odd)).best_value, 0u);
  EXPECT_EQ(min_op(make(5, 4, SetClass::uniform, 3)).best_value, 0u);
  EXPECT_EQ(min_op(make(5, 5, SetClass::uniform, 3)).best_value, 2u);
}

TEST(Search, TrivialAndInvalidSpecs) {
  const auto r = min_op(make(4, 0, SetClass::even));
  EXPECT_TRUE(r.optimal);
  EXPECT_TRUE(r.witness.empty());
  EXPECT_EQ(r.best_value, 0u);

  EXPECT_THROW(min_op(make(0, 1, SetClass::even)), ArgumentError);
  EXPECT_THROW(min_op(make(31, 1, SetClass::even)), ArgumentError);
  EXPECT_THROW(min_op(make(3, 5, SetClass::even)), ArgumentError);
  EXPECT_THROW(min_op(make(4, 2, SetClass::uniform, 5)), ArgumentError);
  auto bad_ckt = make(4, 2, SetClass::even);
  bad_ckt.objective = Objective::ckt;
  EXPECT_THROW(min_op(bad_ckt), ArgumentError);
  EXPECT_THROW(min_ckt(ckt(5, 3, 3, 2)), ArgumentError);
  auto no_threads = make(4, 2, SetClass::even);
  no_threads.threads = 0;
  EXPECT_THROW(min_op(no_threads), ArgumentError);
}

TEST(Search, ExhaustiveRefusesOversizedEnumerations) {
  auto s = with_mode(make(8, 20, SetClass::even), SearchMode::exhaustive);
  EXPECT_THROW(min_op(s), ArgumentError);
}

TEST(Search, ExhaustedBudgetIsNotOptimal) {
  auto s = make(8, 20, SetClass::even);
  s.budget.node_limit = 1000;
  const auto r = min_op(s);
  EXPECT_FALSE(r.optimal);
  EXPECT_EQ(r.witness.size(), 20u);
  EXPECT_EQ(op_count(r.witness), r.best_value);
}

TEST(Budget, EnvironmentOverrides) {
  ::setenv("ODDTOWN_BUDGET_NODES", "1234", 1);
  ::setenv("ODDTOWN_BUDGET_SECS", "7", 1);
  const auto b = Budget::from_environment();
  EXPECT_EQ(b.node_limit, 1234u);
  EXPECT_EQ(b.time_limit, std::chrono::seconds(7));
  ::unsetenv("ODDTOWN_BUDGET_NODES");
  ::unsetenv("ODDTOWN_BUDGET_SECS");
  EXPECT_EQ(Budget::from_environment().node_limit, Budget{}.node_limit);
}

TEST(LocalSearch, DeterministicPerSeedAndNeverBelowOptimum) {
  auto s = with_mode(make(6, 12, SetClass::even), SearchMode::local);
  s.seed = 5;
  const auto a = min_op(s);
  const auto b = local_search(s);
  EXPECT_FALSE(a.optimal);
  EXPECT_EQ(a.best_value, b.best_value);
  EXPECT_EQ(a.witness, b.witness);
  EXPECT_EQ(op_count(a.witness), a.best_value);
  const auto exact = min_op(make(6, 12, SetClass::even));
  EXPECT_GE(a.best_value, exact.best_value);
}

TEST(LocalSearch, ThreadCountDoesNotChangeResult) {
  auto s = with_mode(make(8, 20, SetClass::odd), SearchMode::local);
  s.seed = 11;
  s.restarts = 6;
  const auto one = local_search(s);
  s.threads = 4;
  const auto four = local_search(s);
  EXPECT_EQ(one.best_value, four.best_value);
  EXPECT_EQ(one.witness, four.witness);
}

TEST(LocalSearch, FromConstructionStaysAtOrBelowIt) {
  auto s = with_mode(make(12, 65, SetClass::even), SearchMode::local);
  s.start = eventown_plus(12, 1);
  s.restarts = 1;
  const auto r = local_search(s);
  EXPECT_LE(r.best_value, 32u);
  EXPECT_EQ(r.witness.size(), 65u);
  EXPECT_EQ(op_count(r.witness), r.best_value);
}

TEST(LocalSearch, StartFamilyIsCompletedGreedily) {
  auto s = with_mode(make(8, 17, SetClass::even), SearchMode::local);
  s.start = eventown_pair(8).a;
  s.restarts = 1;
  const auto r = local_search(s);
  EXPECT_EQ(r.witness.size(), 17u);
  EXPECT_EQ(r.best_value, 8u);

  auto bad = s;
  bad.start = singletons(8);
  EXPECT_THROW(local_search(bad), ArgumentError);
}

}  // namespace
}  // namespace oddtown
