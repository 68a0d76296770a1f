#include <gtest/gtest.h>

#include "oddtown/constructions.hpp"
#include "oddtown/report_json.hpp"
#include "oddtown/verify.hpp"

namespace oddtown {
namespace {

TEST(Verify, StatementNames) {
  for (auto s : {Statement::thm_even, Statement::thm_odd, Statement::conj_even, Statement::conj_odd,
                 Statement::prob_uniform})
    EXPECT_EQ(parse_statement(to_string(s)), s);
  EXPECT_FALSE(parse_statement("thm"));
  EXPECT_STREQ(to_string(Verdict::counterexample), "COUNTEREXAMPLE");
}

TEST(Verify, EvenTheoremIsTightOnSmallCases) {
  const struct {
    std::size_t n, s;
    std::uint64_t bound;
  } cases[] = {{4, 1, 2}, {4, 2, 4}, {5, 1, 2}, {6, 1, 4}};
  for (const auto& c : cases) {
    const auto r = verify_statement(Statement::thm_even, c.n, c.s);
    EXPECT_TRUE(r.proven);
    EXPECT_EQ(r.bound, c.bound);
    EXPECT_EQ(r.verdict, Verdict::tight) << "n=" << c.n << " s=" << c.s;
    EXPECT_EQ(r.result.witness.size(), (std::size_t{1} << (c.n / 2)) + c.s);
  }
}

TEST(Verify, EvenTheoremAtSixWithTwoExtra) {
  const auto r = verify_statement(Statement::thm_even, 6, 2);
  EXPECT_EQ(r.bound, 8u);
  EXPECT_TRUE(r.verdict == Verdict::tight || r.verdict == Verdict::holds) << to_string(r.verdict);
}

TEST(Verify, OddStatements) {
  EXPECT_EQ(verify_statement(Statement::thm_odd, 4, 1).verdict, Verdict::tight);
  EXPECT_EQ(verify_statement(Statement::thm_odd, 4, 2).verdict, Verdict::holds);
  EXPECT_EQ(verify_statement(Statement::conj_odd, 4, 2).verdict, Verdict::tight);
  EXPECT_EQ(verify_statement(Statement::conj_odd, 4, 3).verdict, Verdict::tight);
  EXPECT_EQ(verify_statement(Statement::conj_odd, 5, 2).verdict, Verdict::tight);
  const auto r = verify_statement(Statement::conj_odd, 5, 6);
  EXPECT_FALSE(r.bound);
  EXPECT_FALSE(r.proven);
  EXPECT_EQ(r.verdict, Verdict::unclaimed);
}

TEST(Verify, EvenConjectureOutsideItsRangeIsUnclaimed) {
  const auto r = verify_statement(Statement::conj_even, 4, 3);
  EXPECT_FALSE(r.bound);
  EXPECT_EQ(r.verdict, Verdict::unclaimed);
  EXPECT_EQ(r.result.spec.m, 7u);
}

TEST(Verify, UniformProblemFailsAtFive) {
  VerifyOptions opt;
  opt.k = 3;
  const auto r = verify_statement(Statement::prob_uniform, 5, 1, opt);
  EXPECT_EQ(r.bound, 4u);
  EXPECT_EQ(r.result.best_value, 3u);
  EXPECT_EQ(r.verdict, Verdict::counterexample);
  EXPECT_EQ(op_count(r.result.witness), 3u);
  EXPECT_EQ(r.result.witness.uniform_size(), 3u);
  EXPECT_EQ(r.result.witness.size(), 6u);
  EXPECT_EQ(op_count(example_x5()), r.result.best_value);
}

TEST(Verify, BadArguments) {
  EXPECT_THROW(verify_statement(Statement::thm_even, 4, 3), ArgumentError);
  EXPECT_THROW(verify_statement(Statement::thm_odd, 4, 0), ArgumentError);
  VerifyOptions even_k;
  even_k.k = 4;
  EXPECT_THROW(verify_statement(Statement::prob_uniform, 6, 1, even_k), ArgumentError);
  EXPECT_THROW(verify_statement(Statement::thm_odd, 0, 1), ArgumentError);
}

TEST(Verify, ExhaustedBudgetIsInconclusive) {
  VerifyOptions opt;
  opt.budget.node_limit = 1000;
  const auto r = verify_statement(Statement::thm_even, 8, 1, opt);
  EXPECT_FALSE(r.result.optimal);
  EXPECT_GE(r.result.best_value, 8u);
  EXPECT_EQ(r.verdict, Verdict::inconclusive);
}

TEST(ReportJson, SearchResultShape) {
  SearchSpec spec;
  spec.n = 4;
  spec.m = 5;
  const auto j = to_json(min_op(spec));
  EXPECT_EQ(j["best_value"], 2);
  EXPECT_EQ(j["optimal"], true);
  EXPECT_EQ(j["witness"], Json::parse("[[], [1,2], [1,3], [2,4], [1,2,3,4]]"));
  EXPECT_TRUE(j["nodes_explored"].is_number_unsigned());
  EXPECT_TRUE(j["elapsed_ms"].is_number_integer());
  EXPECT_EQ(j["spec"]["class"], "even");
  EXPECT_EQ(j["spec"]["mode"], "bnb");
  std::vector<std::string> keys;
  for (const auto& [k, v] : j.items()) keys.push_back(k);
  EXPECT_EQ(keys, (std::vector<std::string>{"best_value", "witness", "optimal", "nodes_explored", "elapsed_ms", "spec"}));
}

TEST(ReportJson, VerifyReportShape) {
  const auto j = to_json(verify_statement(Statement::thm_odd, 4, 1));
  EXPECT_EQ(j["statement"], "thm-odd");
  EXPECT_EQ(j["verdict"], "TIGHT");
  EXPECT_EQ(j["bound"], 3);
  EXPECT_EQ(j["minimum"], 3);
  EXPECT_EQ(j["result"]["witness"].size(), 5u);
  EXPECT_TRUE(to_json(verify_statement(Statement::conj_even, 4, 3))["bound"].is_null());
}

TEST(ReportJson, Rational) {
  const auto j = to_json(Rational(16, 63));
  EXPECT_EQ(j["num"], 16);
  EXPECT_EQ(j["den"], 63);
  EXPECT_NEAR(j["value"].get<double>(), 16.0 / 63.0, 1e-12);
}

}  // namespace
}  // namespace oddtown
