#pragma once

// Checks a supersaturation statement on one instance by computing the exact
// minimum with branch and bound and comparing it against the claimed bound.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>

#include "oddtown/errors.hpp"
#include "oddtown/search.hpp"

namespace oddtown {

enum class Statement {
  thm_even,      // 2^floor(n/2) + s even sets, s in {1,2}: op >= s·2^(floor(n/2)-1)
  thm_odd,       // n + s odd sets, s >= 1: op >= 3
  conj_even,     // as thm_even for 3 <= s <= 2^floor(n/2) - 2^floor(n/4)
  conj_odd,      // n + s odd sets, 1 <= s <= n: op >= 3s
  prob_uniform,  // n + s k-sets, k odd >= 3: op >= 4 (k = 3) or 5
};

enum class Verdict { holds, tight, counterexample, inconclusive, unclaimed };

inline const char* to_string(Statement s) {
  switch (s) {
    case Statement::thm_even: return "thm-even";
    case Statement::thm_odd: return "thm-odd";
    case Statement::conj_even: return "conj-even";
    case Statement::conj_odd: return "conj-odd";
    case Statement::prob_uniform: return "prob-uniform";
  }
  return "?";
}

inline std::optional<Statement> parse_statement(const std::string& name) {
  for (auto s : {Statement::thm_even, Statement::thm_odd, Statement::conj_even, Statement::conj_odd,
                 Statement::prob_uniform})
    if (name == to_string(s)) return s;
  return std::nullopt;
}

inline const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::holds: return "HOLDS";
    case Verdict::tight: return "TIGHT";
    case Verdict::counterexample: return "COUNTEREXAMPLE";
    case Verdict::inconclusive: return "INCONCLUSIVE";
    case Verdict::unclaimed: return "UNCLAIMED";
  }
  return "?";
}

struct VerifyOptions {
  std::size_t k = 3;  // member size for prob_uniform
  unsigned threads = 1;
  Budget budget{};
};

struct VerifyReport {
  Statement statement{};
  std::size_t n = 0;
  std::size_t s = 0;
  std::size_t k = 0;
  // Claimed lower bound; absent when s lies outside the statement's range.
  std::optional<std::uint64_t> bound;
  // Proven statements: a counterexample means the search is wrong.
  bool proven = false;
  Verdict verdict = Verdict::inconclusive;
  SearchResult result;
};

// The (class, m, bound) instance a statement makes at (n, s).
inline SearchSpec statement_spec(Statement st, std::size_t n, std::size_t s, const VerifyOptions& opt,
                                 std::optional<std::uint64_t>& bound, bool& proven) {
  if (n == 0 || n > 30) throw ArgumentError("verify needs 1 <= n <= 30");
  SearchSpec spec;
  spec.n = n;
  spec.mode = SearchMode::branch_and_bound;
  spec.threads = opt.threads;
  spec.budget = opt.budget;
  const std::uint64_t half = std::uint64_t{1} << (n / 2);
  bound.reset();
  proven = st == Statement::thm_even || st == Statement::thm_odd;
  switch (st) {
    case Statement::thm_even:
    case Statement::conj_even: {
      spec.set_class = SetClass::even;
      spec.m = half + s;
      const std::uint64_t claimed = s * (half / 2);
      if (st == Statement::thm_even) {
        if (s != 1 && s != 2) throw ArgumentError("thm-even covers s in {1,2}, got s=" + std::to_string(s));
        bound = claimed;
      } else if (s >= 3 && s <= half - (std::uint64_t{1} << (n / 4))) {
        bound = claimed;
      }
      break;
    }
    case Statement::thm_odd:
    case Statement::conj_odd:
      if (s < 1) throw ArgumentError("s must be at least 1");
      spec.set_class = SetClass::odd;
      spec.m = n + s;
      if (st == Statement::thm_odd)
        bound = 3;
      else if (s <= n)
        bound = 3 * s;
      break;
    case Statement::prob_uniform:
      if (s < 1) throw ArgumentError("s must be at least 1");
      if (opt.k < 3 || opt.k % 2 == 0) throw ArgumentError("prob-uniform needs odd k >= 3");
      spec.set_class = SetClass::uniform;
      spec.k = opt.k;
      spec.m = n + s;
      bound = opt.k == 3 ? 4 : 5;
      break;
  }
  return spec;
}

inline VerifyReport verify_statement(Statement st, std::size_t n, std::size_t s, const VerifyOptions& opt = {}) {
  VerifyReport rep;
  rep.statement = st;
  rep.n = n;
  rep.s = s;
  rep.k = st == Statement::prob_uniform ? opt.k : 0;
  const SearchSpec spec = statement_spec(st, n, s, opt, rep.bound, rep.proven);
  rep.result = min_op(spec);
  const std::uint64_t v = rep.result.best_value;
  if (!rep.bound) {
    rep.verdict = rep.result.optimal ? Verdict::unclaimed : Verdict::inconclusive;
  } else if (v < *rep.bound) {
    // Any family below the bound refutes it, optimal or not.
    rep.verdict = Verdict::counterexample;
  } else if (!rep.result.optimal) {
    rep.verdict = Verdict::inconclusive;
  } else {
    rep.verdict = v == *rep.bound ? Verdict::tight : Verdict::holds;
  }
  return rep;
}

}  // namespace oddtown
