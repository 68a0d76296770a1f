// oddtown: construct families, analyze them, and run exact searches.
//
// Exit codes: 0 ok/optimal, 2 usage or input error, 3 inconclusive (budget
// exhausted), 4 counterexample or invalid design.

#include <unistd.h>

#include <cstdio>
#include <iomanip>
#include <iostream>
#include <map>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "oddtown/oddtown.hpp"
#include "oddtown/report_json.hpp"

namespace {

using namespace oddtown;

constexpr int kOk = 0;
constexpr int kUsage = 2;
constexpr int kInconclusive = 3;
constexpr int kRefuted = 4;

struct Output {
  bool force_json = false;

  // JSON for pipes and files, an aligned key/value table on a terminal.
  void emit(const Json& j) const {
    if (force_json || !::isatty(::fileno(stdout))) {
      std::cout << j.dump(2) << '\n';
      return;
    }
    std::vector<std::pair<std::string, std::string>> rows;
    flatten(j, "", rows);
    std::size_t width = 0;
    for (const auto& r : rows) width = std::max(width, r.first.size());
    for (const auto& [k, v] : rows) std::cout << std::left << std::setw(static_cast<int>(width) + 2) << k << v << '\n';
  }

  static void flatten(const Json& j, const std::string& prefix, std::vector<std::pair<std::string, std::string>>& rows) {
    for (const auto& [k, v] : j.items()) {
      const std::string key = prefix.empty() ? k : prefix + "." + k;
      if (v.is_object())
        flatten(v, key, rows);
      else if (v.is_array() && v.size() > 8)
        rows.emplace_back(key, "[" + std::to_string(v.size()) + " items]");
      else
        rows.emplace_back(key, v.dump());
    }
  }
};

std::optional<std::size_t> opt_size(const CLI::Option* o, std::size_t v) {
  if (o->count() == 0) return std::nullopt;
  return v;
}

std::size_t need(const std::optional<std::size_t>& v, const std::string& flag, const std::string& who) {
  if (!v) throw ArgumentError(who + " needs " + flag);
  return *v;
}

// ---- construct

struct ConstructArgs {
  std::string family;
  std::size_t n = 0, s = 0, k = 0;
  std::uint64_t seed = 0;
  std::string out;
  CLI::Option *n_opt = nullptr, *s_opt = nullptr, *k_opt = nullptr, *seed_opt = nullptr;
};

SetFamily build_family(const ConstructArgs& a) {
  const auto n = opt_size(a.n_opt, a.n);
  const auto s = opt_size(a.s_opt, a.s);
  const Selector sel = a.seed_opt->count() ? Selector::seeded(a.seed) : Selector::deterministic();
  auto fixed_n = [&](std::size_t ground) {
    if (n && *n != ground)
      throw ArgumentError(a.family + " lives on n=" + std::to_string(ground) + ", got --n " + std::to_string(*n));
  };
  const std::string& f = a.family;
  if (f == "eventown-a") return eventown_pair(need(n, "--n", f)).a;
  if (f == "eventown-b") return eventown_pair(need(n, "--n", f)).b;
  if (f == "eventown-plus") return eventown_plus(need(n, "--n", f), need(s, "--s", f), sel);
  if (f == "singletons") return singletons(need(n, "--n", f));
  if (f == "k4-triples") return disjoint_k4_triples(need(n, "--n", f));
  if (f == "oddtown-plus") return oddtown_plus(need(n, "--n", f), need(s, "--s", f), sel);
  if (f == "x5") {
    fixed_n(5);
    return example_x5();
  }
  if (f == "f1") {
    fixed_n(5);
    return example_f1();
  }
  if (f == "f2") {
    const std::size_t k = need(opt_size(a.k_opt, a.k), "--k", f);
    if (k >= 5 && k % 2 == 1) fixed_n(2 * k + 2);
    return example_f2(k);
  }
  if (f == "steiner-partition") return steiner_partition(need(n, "--n", f)).blocks();
  throw ArgumentError("unknown family '" + f + "'");
}

Json family_summary(const SetFamily& f) {
  Json j{{"n", f.ground_size()}, {"size", f.size()}, {"op", op_count(f)}};
  j["eventown"] = is_eventown(f);
  j["oddtown"] = is_oddtown(f);
  const auto k = f.uniform_size();
  j["uniform_k"] = k ? Json(*k) : Json(nullptr);
  return j;
}

int run_construct(const ConstructArgs& a, const Output& out) {
  const SetFamily f = build_family(a);
  if (!a.out.empty()) save_family(a.out, f);
  Json j{{"family", a.family}};
  j.update(family_summary(f));
  j["out"] = a.out.empty() ? Json(nullptr) : Json(a.out);
  j["sets"] = to_json(f);
  out.emit(j);
  return kOk;
}

// ---- analyze

struct AnalyzeArgs {
  std::string in;
  bool pairs = false;
  bool density = false;
  std::size_t ckt = 0, links = 0;
  std::string eventown_strategy;
  CLI::Option *ckt_opt = nullptr, *links_opt = nullptr;
};

int run_analyze(const AnalyzeArgs& a, const Output& out) {
  const SetFamily f = load_family(a.in);
  const auto rep = op(f, a.pairs);
  Json j = family_summary(f);
  if (a.pairs) {
    Json p = Json::array();
    for (const auto& [x, y] : *rep.pairs) p.push_back({x + 1, y + 1});
    j["pairs"] = p;
  }
  if (a.ckt_opt->count()) j["ckt"] = {{"t", a.ckt}, {"value", c_kt(f, a.ckt)}};
  if (a.density) j["density"] = rep.density ? to_json(*rep.density) : Json(nullptr);
  if (a.links_opt->count()) {
    const auto r = check_link_identity(f, a.links);
    j["link_identity"] = {{"k", a.links}, {"lhs", r.lhs}, {"rhs", r.rhs}, {"holds", r.holds}};
  }
  if (!a.eventown_strategy.empty()) {
    const auto strategy = a.eventown_strategy == "exact" ? SubfamilyStrategy::exact : SubfamilyStrategy::greedy;
    const auto sub = maximal_eventown_subfamily(f, strategy);
    j["eventown_subfamily"] = {{"strategy", a.eventown_strategy}, {"size", sub.size()}, {"sets", to_json(sub)}};
  }
  out.emit(j);
  return kOk;
}

// ---- search and verify

struct BudgetArgs {
  std::uint64_t nodes = 0, secs = 0;
  CLI::Option *nodes_opt = nullptr, *secs_opt = nullptr;

  void add_to(CLI::App* app) {
    nodes_opt = app->add_option("--budget-nodes", nodes, "Node limit (default ODDTOWN_BUDGET_NODES or 1e9)");
    secs_opt = app->add_option("--budget-secs", secs, "Wall-clock limit in seconds (default ODDTOWN_BUDGET_SECS or 600)");
  }

  Budget resolve() const {
    Budget b = Budget::from_environment();
    if (nodes_opt->count()) b.node_limit = nodes;
    if (secs_opt->count()) b.time_limit = std::chrono::seconds(secs);
    return b;
  }
};

struct SearchArgs {
  std::string set_class = "even", objective = "op", mode = "bnb", symmetry = "auto", start;
  std::size_t n = 0, m = 0, k = 0, t = 0, restarts = 10;
  unsigned threads = 1;
  std::uint64_t seed = 0;
  bool no_conflict_bound = false, no_class_bound = false;
  BudgetArgs budget;
};

int run_search(const SearchArgs& a, const Output& out) {
  SearchSpec spec;
  spec.n = a.n;
  spec.m = a.m;
  spec.k = a.k;
  spec.t = a.t;
  spec.set_class = a.set_class == "even" ? SetClass::even : a.set_class == "odd" ? SetClass::odd : SetClass::uniform;
  spec.objective = a.objective == "ckt" ? Objective::ckt : Objective::op;
  spec.mode = a.mode == "exhaustive" ? SearchMode::exhaustive
              : a.mode == "local"    ? SearchMode::local
                                     : SearchMode::branch_and_bound;
  spec.threads = a.threads;
  spec.seed = a.seed;
  spec.restarts = a.restarts;
  spec.conflict_bound = !a.no_conflict_bound;
  spec.class_bound = !a.no_class_bound;
  if (a.symmetry != "auto") spec.symmetry = a.symmetry == "on";
  spec.budget = a.budget.resolve();
  if (!a.start.empty()) {
    if (spec.mode != SearchMode::local) throw ArgumentError("--start needs --mode local");
    spec.start = load_family(a.start);
  }
  const auto r = min_op(spec);
  out.emit(to_json(r));
  if (spec.mode == SearchMode::local) return kOk;
  return r.optimal ? kOk : kInconclusive;
}

struct VerifyArgs {
  std::string statement;
  std::size_t n = 0, s = 0, k = 3;
  unsigned threads = 1;
  BudgetArgs budget;
};

int run_verify(const VerifyArgs& a, const Output& out) {
  const auto st = parse_statement(a.statement);
  if (!st) throw ArgumentError("unknown statement '" + a.statement + "'");
  VerifyOptions opt;
  opt.k = a.k;
  opt.threads = a.threads;
  opt.budget = a.budget.resolve();
  const auto rep = verify_statement(*st, a.n, a.s, opt);
  out.emit(to_json(rep));
  switch (rep.verdict) {
    case Verdict::counterexample: return kRefuted;
    case Verdict::inconclusive: return kInconclusive;
    default: return kOk;
  }
}

// ---- steiner

struct SteinerArgs {
  std::string validate, out;
  bool partition = false;
  std::size_t n = 0, shadow_k = 0;
  CLI::Option *n_opt = nullptr, *shadow_opt = nullptr;
};

int run_steiner(const SteinerArgs& a, const Output& out) {
  if (a.validate.empty() == !a.partition) throw ArgumentError("steiner needs exactly one of --validate or --partition");
  std::optional<SteinerSystem> sys;
  if (a.partition) {
    sys = steiner_partition(need(opt_size(a.n_opt, a.n), "--n", "--partition"));
  } else {
    try {
      sys = load_steiner(a.validate);
    } catch (const ValidationError& e) {
      out.emit(Json{{"valid", false}, {"path", a.validate}, {"reason", e.what()}});
      std::cerr << "invalid design: " << e.what() << '\n';
      return kRefuted;
    }
  }
  Json j{{"valid", true}, {"n", sys->n()}, {"k", sys->k()}, {"t", sys->t()}, {"blocks", sys->blocks().size()}};
  if (a.shadow_opt->count()) {
    const SetFamily sh = shadow(sys->blocks(), a.shadow_k);
    if (!a.out.empty()) save_family(a.out, sh);
    Json s{{"k", a.shadow_k}, {"size", sh.size()}};
    // The closed form covers the k-shadow of an S(n, k+1, k-2).
    if (sys->k() == a.shadow_k + 1 && a.shadow_k >= 2 && sys->t() + 2 == a.shadow_k) {
      const Rational formula = shadow_size_formula(sys->n(), a.shadow_k);
      s["formula"] = to_json(formula);
      s["matches_formula"] = formula == Rational(static_cast<std::int64_t>(sh.size()));
    } else {
      s["formula"] = nullptr;
      s["matches_formula"] = nullptr;
    }
    s["out"] = a.out.empty() ? Json(nullptr) : Json(a.out);
    s["sets"] = to_json(sh);
    j["shadow"] = s;
  }
  out.emit(j);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Odd-intersection counts, extremal constructions and exact searches for set families"};
  app.require_subcommand(1);
  Output out;
  app.add_flag("--json", out.force_json, "Print JSON even on a terminal");

  ConstructArgs ca;
  auto* construct = app.add_subcommand("construct", "Build a named family and write it as a family file");
  construct->add_option("--family", ca.family, "Family name")
      ->required()
      ->check(CLI::IsMember({"eventown-a", "eventown-b", "eventown-plus", "singletons", "k4-triples", "oddtown-plus",
                             "x5", "f1", "f2", "steiner-partition"}));
  ca.n_opt = construct->add_option("--n", ca.n, "Ground set size");
  ca.s_opt = construct->add_option("--s", ca.s, "Number of extra sets");
  ca.k_opt = construct->add_option("--k", ca.k, "Member size (f2)");
  ca.seed_opt = construct->add_option("--seed", ca.seed, "Pick the extra sets by seeded sampling");
  construct->add_option("--out", ca.out, "Family file to write");

  AnalyzeArgs aa;
  auto* analyze = app.add_subcommand("analyze", "Report op and related statistics of a family file");
  analyze->add_option("--in", aa.in, "Family file")->required();
  analyze->add_flag("--pairs", aa.pairs, "List the odd-intersecting pairs (1-based member positions)");
  aa.ckt_opt = analyze->add_option("--ckt", aa.ckt, "Count pairs meeting in exactly t points");
  analyze->add_flag("--density", aa.density, "Report op / C(|F|,2)");
  aa.links_opt = analyze->add_option("--links", aa.links, "Check the link identity for k-uniform families");
  analyze->add_option("--eventown-subfamily", aa.eventown_strategy, "Largest eventown subfamily found")
      ->check(CLI::IsMember({"greedy", "exact"}));

  SearchArgs sa;
  auto* search = app.add_subcommand("search", "Minimise op (or c_{k,t}) over m-member families of a class");
  search->add_option("--class", sa.set_class, "Set class")->required()->check(CLI::IsMember({"even", "odd", "uniform"}));
  search->add_option("--n", sa.n, "Ground set size")->required();
  search->add_option("--m", sa.m, "Family size")->required();
  search->add_option("--k", sa.k, "Member size for --class uniform");
  search->add_option("--objective", sa.objective, "op or ckt")->check(CLI::IsMember({"op", "ckt"}));
  search->add_option("--t", sa.t, "Intersection size for --objective ckt");
  search->add_option("--mode", sa.mode, "Search mode")->check(CLI::IsMember({"exhaustive", "bnb", "local"}));
  search->add_option("--threads", sa.threads, "Worker threads");
  search->add_option("--seed", sa.seed, "Local search seed");
  search->add_option("--restarts", sa.restarts, "Local search restarts");
  search->add_option("--start", sa.start, "Family file to start local search from");
  search->add_option("--symmetry", sa.symmetry, "Root symmetry reduction")->check(CLI::IsMember({"auto", "on", "off"}));
  search->add_flag("--no-conflict-bound", sa.no_conflict_bound, "Disable the completion-cost bound");
  search->add_flag("--no-class-bound", sa.no_class_bound, "Disable the class capacity bound");
  sa.budget.add_to(search);

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "Check a lower bound on op against the exact minimum");
  verify->add_option("--statement", va.statement, "Statement")
      ->required()
      ->check(CLI::IsMember({"thm-even", "thm-odd", "conj-even", "conj-odd", "prob-uniform"}));
  verify->add_option("--n", va.n, "Ground set size")->required();
  verify->add_option("--s", va.s, "Sets beyond the extremal size")->required();
  verify->add_option("--k", va.k, "Member size for prob-uniform");
  verify->add_option("--threads", va.threads, "Worker threads");
  va.budget.add_to(verify);

  SteinerArgs ta;
  auto* steiner = app.add_subcommand("steiner", "Validate a Steiner system or build a partition, optionally its shadow");
  steiner->add_option("--validate", ta.validate, "Block file");
  steiner->add_flag("--partition", ta.partition, "Use the partition of [n] into 4-blocks");
  ta.n_opt = steiner->add_option("--n", ta.n, "Ground set size for --partition");
  ta.shadow_opt = steiner->add_option("--shadow", ta.shadow_k, "Report the k-shadow");
  steiner->add_option("--out", ta.out, "Family file for the shadow");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*construct) return run_construct(ca, out);
    if (*analyze) return run_analyze(aa, out);
    if (*search) return run_search(sa, out);
    if (*verify) return run_verify(va, out);
    return run_steiner(ta, out);
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kRefuted;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
}
