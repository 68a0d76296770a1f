#pragma once

// Exact and heuristic minimisation of op (or c_{k,t}) over all families of a
// given size drawn from a class of subsets of [n].
//
// The candidate pool is the class in canonical (bit-value) order; families
// are increasing index combinations over the pool, so "lexicographically
// least witness" means least index sequence. Both exact modes return that
// witness among all optimal families, independent of thread count.

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <cstdlib>
#include <limits>
#include <optional>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include "oddtown/bit_subset.hpp"
#include "oddtown/detail/combinatorics.hpp"
#include "oddtown/errors.hpp"
#include "oddtown/set_family.hpp"

namespace oddtown {

enum class SetClass { even, odd, uniform };
enum class Objective { op, ckt };
enum class SearchMode { exhaustive, branch_and_bound, local };

struct Budget {
  std::uint64_t node_limit = 1'000'000'000ULL;
  std::chrono::milliseconds time_limit = std::chrono::minutes(10);

  // Defaults, overridden by ODDTOWN_BUDGET_NODES / ODDTOWN_BUDGET_SECS.
  static Budget from_environment() {
    Budget b;
    if (const char* v = std::getenv("ODDTOWN_BUDGET_NODES")) b.node_limit = std::strtoull(v, nullptr, 10);
    if (const char* v = std::getenv("ODDTOWN_BUDGET_SECS"))
      b.time_limit = std::chrono::seconds(std::strtoull(v, nullptr, 10));
    return b;
  }
};

struct SearchSpec {
  std::size_t n = 0;
  std::size_t m = 0;
  SetClass set_class = SetClass::even;
  std::size_t k = 0;  // member size for SetClass::uniform
  Objective objective = Objective::op;
  std::size_t t = 0;  // intersection size for Objective::ckt
  SearchMode mode = SearchMode::branch_and_bound;
  Budget budget{};
  unsigned threads = 1;

  // Branch-and-bound lower bounds. Both are sound; the baseline is 0.
  bool conflict_bound = true;  // cheapest completions against the partial family
  bool class_bound = true;     // |family| minus the largest conflict-free family
  // Root symmetry reduction; unset means on for branch and bound over the
  // even class with n >= 6.
  std::optional<bool> symmetry;

  // Local search.
  std::uint64_t seed = 0;
  std::size_t restarts = 10;
  std::optional<SetFamily> start;  // first restart begins here (completed greedily)
};

struct SearchResult {
  std::uint64_t best_value = 0;
  SetFamily witness;
  bool optimal = false;
  std::uint64_t nodes_explored = 0;
  std::chrono::milliseconds elapsed{0};
  SearchSpec spec;
};

inline const char* to_string(SetClass c) {
  switch (c) {
    case SetClass::even: return "even";
    case SetClass::odd: return "odd";
    case SetClass::uniform: return "uniform";
  }
  return "?";
}

inline const char* to_string(Objective o) { return o == Objective::op ? "op" : "ckt"; }

inline const char* to_string(SearchMode m) {
  switch (m) {
    case SearchMode::exhaustive: return "exhaustive";
    case SearchMode::branch_and_bound: return "bnb";
    case SearchMode::local: return "local";
  }
  return "?";
}

inline constexpr std::size_t kMaxPoolSize = 16384;

inline bool in_class(const BitSubset& s, const SearchSpec& spec) {
  switch (spec.set_class) {
    case SetClass::even: return s.cardinality() % 2 == 0;
    case SetClass::odd: return s.cardinality() % 2 == 1;
    case SetClass::uniform: return s.cardinality() == spec.k;
  }
  return false;
}

inline void validate(const SearchSpec& spec) {
  if (spec.n == 0 || spec.n > 30) throw ArgumentError("search needs 1 <= n <= 30, got n=" + std::to_string(spec.n));
  if (spec.set_class == SetClass::uniform && (spec.k == 0 || spec.k > spec.n))
    throw ArgumentError("uniform class needs 1 <= k <= n, got k=" + std::to_string(spec.k));
  if (spec.objective == Objective::ckt) {
    if (spec.set_class != SetClass::uniform) throw ArgumentError("the ckt objective needs the uniform class");
    if (spec.t >= spec.k)
      throw ArgumentError("ckt objective needs t < k, got t=" + std::to_string(spec.t) + ", k=" + std::to_string(spec.k));
  }
  if (spec.threads == 0) throw ArgumentError("threads must be at least 1");
}

// Every member of the spec's class, in canonical order.
inline std::vector<BitSubset> candidate_pool(const SearchSpec& spec) {
  validate(spec);
  std::vector<BitSubset> pool;
  const std::uint64_t total = std::uint64_t{1} << spec.n;
  for (std::uint64_t x = 0; x < total; ++x) {
    auto s = BitSubset::from_word(spec.n, x);
    if (in_class(s, spec)) {
      if (pool.size() == kMaxPoolSize)
        throw ResourceError("candidate pool exceeds " + std::to_string(kMaxPoolSize) + " sets");
      pool.push_back(std::move(s));
    }
  }
  return pool;
}

// Pair cost of the objective: odd intersection for op, |A ∩ B| = t for ckt.
inline bool pair_cost(const BitSubset& a, const BitSubset& b, const SearchSpec& spec) {
  return spec.objective == Objective::op ? inner_parity(a, b) : a.intersection_size(b) == spec.t;
}

inline std::uint64_t objective_value(const SetFamily& f, const SearchSpec& spec) {
  return spec.objective == Objective::op ? op_count(f) : c_kt(f, spec.t);
}

// Largest family in the class with no costly pair, when a classical bound
// exists: 2^floor(n/2) for even-sized sets (eventown), n for odd-sized sets
// (oddtown). Only meaningful for the op objective.
inline std::optional<std::uint64_t> conflict_free_capacity(const SearchSpec& spec) {
  if (spec.objective != Objective::op) return std::nullopt;
  bool even = spec.set_class == SetClass::even;
  if (spec.set_class == SetClass::uniform) even = spec.k % 2 == 0;
  if (spec.set_class == SetClass::odd || (spec.set_class == SetClass::uniform && !even)) return spec.n;
  return std::uint64_t{1} << (spec.n / 2);
}

namespace detail {

// The pool plus a symmetric 0/1 cost matrix stored as packed rows.
class CostGraph {
 public:
  CostGraph(std::vector<BitSubset> pool, const SearchSpec& spec)
      : pool_(std::move(pool)), words_((pool_.size() + 63) / 64), rows_(pool_.size() * words_, 0) {
    for (std::size_t i = 0; i < pool_.size(); ++i)
      for (std::size_t j = i + 1; j < pool_.size(); ++j)
        if (pair_cost(pool_[i], pool_[j], spec)) {
          rows_[i * words_ + j / 64] |= std::uint64_t{1} << (j % 64);
          rows_[j * words_ + i / 64] |= std::uint64_t{1} << (i % 64);
        }
  }

  std::size_t size() const noexcept { return pool_.size(); }
  std::size_t words() const noexcept { return words_; }
  const BitSubset& set(std::size_t i) const { return pool_[i]; }
  const std::uint64_t* row(std::size_t i) const { return rows_.data() + i * words_; }
  bool cost(std::size_t i, std::size_t j) const { return (row(i)[j / 64] >> (j % 64)) & 1U; }

  // Calls fn(j) for each j with cost(i, j) = 1.
  template <typename Fn>
  void for_each_neighbour(std::size_t i, Fn&& fn) const {
    const std::uint64_t* r = row(i);
    for (std::size_t w = 0; w < words_; ++w) {
      std::uint64_t bits = r[w];
      while (bits != 0) {
        fn(w * 64 + static_cast<std::size_t>(std::countr_zero(bits)));
        bits &= bits - 1;
      }
    }
  }

  SetFamily family(const std::vector<std::size_t>& idx, std::size_t n) const {
    std::vector<std::size_t> sorted = idx;
    std::sort(sorted.begin(), sorted.end());
    SetFamily f(n);
    for (std::size_t i : sorted) f.add(pool_[i]);
    return f;
  }

 private:
  std::vector<BitSubset> pool_;
  std::size_t words_;
  std::vector<std::uint64_t> rows_;
};

// Repeatedly adds the pool member with the fewest costly pairs against the
// current selection (ties to the lowest index).
inline std::vector<std::size_t> greedy_complete(const CostGraph& g, std::vector<std::size_t> chosen, std::size_t m) {
  std::vector<std::uint32_t> conf(g.size(), 0);
  std::vector<bool> in(g.size(), false);
  for (std::size_t v : chosen) {
    in[v] = true;
    g.for_each_neighbour(v, [&](std::size_t j) { ++conf[j]; });
  }
  while (chosen.size() < m) {
    std::size_t best = g.size();
    for (std::size_t j = 0; j < g.size(); ++j)
      if (!in[j] && (best == g.size() || conf[j] < conf[best])) best = j;
    in[best] = true;
    chosen.push_back(best);
    g.for_each_neighbour(best, [&](std::size_t j) { ++conf[j]; });
  }
  return chosen;
}

inline std::uint64_t selection_cost(const CostGraph& g, const std::vector<std::size_t>& idx) {
  std::uint64_t c = 0;
  for (std::size_t a = 0; a < idx.size(); ++a)
    for (std::size_t b = a + 1; b < idx.size(); ++b) c += g.cost(idx[a], idx[b]);
  return c;
}

class Clock {
 public:
  Clock() : start_(std::chrono::steady_clock::now()) {}
  std::chrono::milliseconds elapsed() const {
    return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start_);
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

// Shared stopping state for all workers.
struct BudgetGuard {
  const Budget& budget;
  const Clock& clock;
  std::atomic<std::uint64_t> nodes{0};
  std::atomic<bool> aborted{false};

  // Flushes a worker's local node count; returns false once the budget is spent.
  bool charge(std::uint64_t local) {
    const std::uint64_t total = nodes.fetch_add(local, std::memory_order_relaxed) + local;
    if (total > budget.node_limit || clock.elapsed() > budget.time_limit)
      aborted.store(true, std::memory_order_relaxed);
    return !aborted.load(std::memory_order_relaxed);
  }
};

// Runs fn(task) for task in [0, count) on up to `threads` workers.
template <typename Fn>
void run_tasks(std::size_t count, unsigned threads, Fn&& fn) {
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t t = next.fetch_add(1); t < count; t = next.fetch_add(1)) fn(t);
  };
  const unsigned workers = static_cast<unsigned>(std::min<std::size_t>(threads, count));
  if (workers <= 1) {
    worker();
    return;
  }
  std::vector<std::jthread> pool;
  pool.reserve(workers);
  for (unsigned i = 0; i < workers; ++i) pool.emplace_back(worker);
}

// Depth-first enumeration of index combinations, split into tasks by
// prefixes in lexicographic order.
//
// The incumbent is the packed key (value << 32 | task). A task prunes a node
// when (lower bound, task) >= incumbent: either it cannot beat the value, or
// an earlier task already reached it. This keeps the reported witness the
// lexicographically least optimal one whatever the scheduling.
class ExactSearch {
 public:
  ExactSearch(const CostGraph& g, const SearchSpec& spec, BudgetGuard& guard)
      : g_(g), spec_(spec), guard_(guard), prune_(spec.mode == SearchMode::branch_and_bound) {
    if (prune_ && spec.class_bound) {
      if (auto cap = conflict_free_capacity(spec); cap && spec.m > *cap) class_lb_ = spec.m - *cap;
    }
  }

  struct Outcome {
    std::optional<std::vector<std::size_t>> witness;
    std::uint64_t value = 0;
  };

  Outcome run(std::optional<std::uint64_t> upper_bound) {
    if (upper_bound) incumbent_.store(pack(*upper_bound, kNoTask));
    build_tasks();
    results_.assign(tasks_.size(), {});
    run_tasks(tasks_.size(), spec_.threads, [&](std::size_t t) { run_task(t); });

    Outcome out;
    const std::uint64_t key = incumbent_.load();
    const auto task = static_cast<std::uint32_t>(key & 0xffffffffULL);
    if (task != kNoTask) {
      out.witness = results_[task];
      out.value = key >> 32;
    }
    return out;
  }

 private:
  static constexpr std::uint32_t kNoTask = 0xffffffffU;
  static std::uint64_t pack(std::uint64_t value, std::uint32_t task) {
    return (std::min<std::uint64_t>(value, 0xffffffffULL) << 32) | task;
  }

  bool symmetric() const {
    if (spec_.symmetry) return *spec_.symmetry;
    return spec_.mode == SearchMode::branch_and_bound && spec_.set_class == SetClass::even && spec_.n >= 6;
  }

  // Root candidates. Under symmetry reduction only the sets {1..c} are
  // allowed first: mapping a minimum-cardinality member of any family onto
  // {1..c} yields an equivalent family whose least member is {1..c}, and the
  // lexicographically least optimum already has this shape.
  std::vector<std::size_t> roots() const {
    std::vector<std::size_t> r;
    const std::size_t n = g_.size();
    const std::size_t m = spec_.m;
    for (std::size_t v = 0; v + m <= n; ++v) {
      if (symmetric()) {
        const auto& s = g_.set(v);  // n <= 30, so one word holds it
        if (s.low_word() != (std::uint64_t{1} << s.cardinality()) - 1) continue;
      }
      r.push_back(v);
    }
    return r;
  }

  void build_tasks() {
    const std::size_t n = g_.size();
    const std::size_t m = spec_.m;
    const bool two_level = m >= 2 && n <= 256;
    for (std::size_t a : roots()) {
      if (!two_level) {
        tasks_.push_back({a});
        continue;
      }
      for (std::size_t b = a + 1; b + (m - 1) <= n; ++b) tasks_.push_back({a, b});
    }
  }

  struct Worker {
    std::vector<std::uint32_t> conf;  // costly pairs of each pool member against the selection
    std::vector<std::size_t> chosen;
    std::uint64_t cost = 0;
    std::uint64_t local_nodes = 0;
    std::vector<std::uint32_t> buckets;
  };

  void push(Worker& w, std::size_t v) const {
    w.cost += w.conf[v];
    w.chosen.push_back(v);
    g_.for_each_neighbour(v, [&](std::size_t j) { ++w.conf[j]; });
  }

  void pop(Worker& w) const {
    const std::size_t v = w.chosen.back();
    w.chosen.pop_back();
    g_.for_each_neighbour(v, [&](std::size_t j) { --w.conf[j]; });
    w.cost -= w.conf[v];
  }

  // Cost so far plus the r cheapest remaining members' pairs against the selection.
  std::uint64_t lower_bound(Worker& w, std::size_t from) const {
    std::uint64_t lb = w.cost;
    const std::size_t r = spec_.m - w.chosen.size();
    if (spec_.conflict_bound && r > 0) {
      const std::size_t depth = w.chosen.size();
      w.buckets.assign(depth + 1, 0);
      for (std::size_t j = from; j < g_.size(); ++j) ++w.buckets[w.conf[j]];
      std::size_t need = r;
      for (std::size_t c = 0; c <= depth && need > 0; ++c) {
        const std::size_t take = std::min<std::size_t>(need, w.buckets[c]);
        lb += static_cast<std::uint64_t>(take) * c;
        need -= take;
      }
    }
    return std::max(lb, class_lb_);
  }

  bool pruned(std::uint64_t lb, std::uint32_t task) const {
    return pack(lb, task) >= incumbent_.load(std::memory_order_relaxed);
  }

  bool tick(Worker& w) {
    if (++w.local_nodes >= kChargeInterval) {
      const bool ok = guard_.charge(w.local_nodes);
      w.local_nodes = 0;
      return ok;
    }
    return !guard_.aborted.load(std::memory_order_relaxed);
  }

  void leaf(Worker& w, std::uint32_t task, std::optional<std::uint64_t>& task_best) {
    if (prune_) {
      const std::uint64_t key = pack(w.cost, task);
      std::uint64_t cur = incumbent_.load();
      if (key >= cur) return;
      results_[task] = w.chosen;
      while (key < cur && !incumbent_.compare_exchange_weak(cur, key)) {
      }
      return;
    }
    // Plain enumeration: keep the task's first minimum, then publish.
    if (task_best && w.cost >= *task_best) return;
    task_best = w.cost;
    results_[task] = w.chosen;
    const std::uint64_t key = pack(w.cost, task);
    std::uint64_t cur = incumbent_.load();
    while (key < cur && !incumbent_.compare_exchange_weak(cur, key)) {
    }
  }

  bool dfs(Worker& w, std::size_t from, std::uint32_t task, std::optional<std::uint64_t>& task_best) {
    if (w.chosen.size() == spec_.m) {
      leaf(w, task, task_best);
      return true;
    }
    const std::size_t n = g_.size();
    const std::size_t r = spec_.m - w.chosen.size();
    for (std::size_t v = from; v + r <= n; ++v) {
      if (!tick(w)) return false;
      if (prune_ && pruned(std::max(w.cost + w.conf[v], class_lb_), task)) continue;
      push(w, v);
      if (prune_ && r > 1 && pruned(lower_bound(w, v + 1), task)) {
        pop(w);
        continue;
      }
      const bool ok = dfs(w, v + 1, task, task_best);
      pop(w);
      if (!ok) return false;
    }
    return true;
  }

  void run_task(std::size_t t) {
    if (guard_.aborted.load()) return;
    const auto task = static_cast<std::uint32_t>(t);
    Worker w;
    w.conf.assign(g_.size(), 0);
    w.chosen.reserve(spec_.m);
    for (std::size_t v : tasks_[t]) push(w, v);
    std::optional<std::uint64_t> task_best;
    if (!prune_ || !pruned(lower_bound(w, tasks_[t].back() + 1), task)) dfs(w, tasks_[t].back() + 1, task, task_best);
    guard_.charge(w.local_nodes + tasks_[t].size());
  }

  static constexpr std::uint64_t kChargeInterval = 1 << 14;

  const CostGraph& g_;
  const SearchSpec& spec_;
  BudgetGuard& guard_;
  bool prune_;
  std::uint64_t class_lb_ = 0;
  std::vector<std::vector<std::size_t>> tasks_;
  std::vector<std::vector<std::size_t>> results_;
  std::atomic<std::uint64_t> incumbent_{pack(0xffffffffULL, kNoTask)};
};

// Steepest-descent single swaps. Ties go to the lowest incoming index, then
// the lowest outgoing index.
class LocalSearch {
 public:
  LocalSearch(const CostGraph& g, const SearchSpec& spec, BudgetGuard& guard) : g_(g), spec_(spec), guard_(guard) {}

  struct Outcome {
    std::vector<std::size_t> selection;
    std::uint64_t value = 0;
    bool valid = false;
  };

  Outcome descend(std::vector<std::size_t> start) {
    const std::size_t n = g_.size();
    std::vector<std::uint32_t> conf(n, 0);
    std::vector<bool> in(n, false);
    for (std::size_t v : start) {
      in[v] = true;
      g_.for_each_neighbour(v, [&](std::size_t j) { ++conf[j]; });
    }
    std::vector<std::size_t> sel = std::move(start);
    std::uint64_t cost = selection_cost(g_, sel);
    std::vector<std::uint64_t> top(g_.words());
    std::uint64_t local_nodes = 0;

    while (true) {
      if (++local_nodes >= 256) {
        if (!guard_.charge(local_nodes)) break;
        local_nodes = 0;
      }
      if (sel.size() == n || sel.empty()) break;
      // The best outgoing member for a given incoming j has the largest
      // conf[i] + cost(i, j); only members at the maximum conf can reach it.
      std::uint32_t max_conf = 0;
      for (std::size_t i : sel) max_conf = std::max(max_conf, conf[i]);
      std::fill(top.begin(), top.end(), 0);
      for (std::size_t i : sel)
        if (conf[i] == max_conf) top[i / 64] |= std::uint64_t{1} << (i % 64);

      std::int64_t best_delta = 0;
      std::size_t best_in = n;
      bool best_hits_top = false;
      for (std::size_t j = 0; j < n; ++j) {
        if (in[j]) continue;
        const std::uint64_t* row = g_.row(j);
        bool hits = false;
        for (std::size_t w = 0; w < top.size() && !hits; ++w) hits = (row[w] & top[w]) != 0;
        const std::int64_t delta =
            static_cast<std::int64_t>(conf[j]) - static_cast<std::int64_t>(max_conf) - (hits ? 1 : 0);
        if (delta < best_delta) {
          best_delta = delta;
          best_in = j;
          best_hits_top = hits;
        }
      }
      if (best_in == n) break;

      std::size_t best_out = n;
      for (std::size_t i : sel) {
        if (conf[i] != max_conf) continue;
        if (best_hits_top && !g_.cost(i, best_in)) continue;
        if (best_out == n || i < best_out) best_out = i;
      }
      in[best_out] = false;
      g_.for_each_neighbour(best_out, [&](std::size_t j) { --conf[j]; });
      in[best_in] = true;
      g_.for_each_neighbour(best_in, [&](std::size_t j) { ++conf[j]; });
      *std::find(sel.begin(), sel.end(), best_out) = best_in;
      cost = static_cast<std::uint64_t>(static_cast<std::int64_t>(cost) + best_delta);
    }
    guard_.charge(local_nodes);
    std::sort(sel.begin(), sel.end());
    return {std::move(sel), cost, true};
  }

  std::vector<std::size_t> random_start(std::uint64_t seed) const {
    std::vector<std::size_t> all(g_.size());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    std::vector<std::size_t> out;
    std::mt19937_64 rng(seed);
    std::sample(all.begin(), all.end(), std::back_inserter(out), spec_.m, rng);
    return out;
  }

 private:
  const CostGraph& g_;
  const SearchSpec& spec_;
  BudgetGuard& guard_;
};

inline std::size_t pool_index(const CostGraph& g, const BitSubset& s) {
  for (std::size_t i = 0; i < g.size(); ++i)
    if (g.set(i) == s) return i;
  return g.size();
}

}  // namespace detail

// Hill climbing from seeded starts; never claims optimality. Restart r uses
// seed + r; with spec.start set, restart 0 begins from that family instead.
inline SearchResult local_search(const SearchSpec& spec_in) {
  SearchSpec spec = spec_in;
  spec.mode = SearchMode::local;
  detail::Clock clock;
  const detail::CostGraph g(candidate_pool(spec), spec);
  if (spec.m > g.size())
    throw ArgumentError("family size m=" + std::to_string(spec.m) + " exceeds the " + std::to_string(g.size()) +
                        " sets in the class");
  detail::BudgetGuard guard{spec.budget, clock};
  detail::LocalSearch ls(g, spec, guard);

  std::optional<std::vector<std::size_t>> seeded_start;
  if (spec.start) {
    if (spec.start->ground_size() != spec.n) throw DimensionMismatch(spec.n, spec.start->ground_size());
    if (spec.start->size() > spec.m) throw ArgumentError("start family is larger than m");
    std::vector<std::size_t> idx;
    for (const auto& s : *spec.start) {
      const std::size_t i = detail::pool_index(g, s);
      if (i == g.size()) throw ArgumentError("start member " + s.to_string() + " is not in the class");
      idx.push_back(i);
    }
    seeded_start = detail::greedy_complete(g, std::move(idx), spec.m);
  }

  const std::size_t restarts = std::max<std::size_t>(spec.restarts, 1);
  std::vector<detail::LocalSearch::Outcome> outcomes(restarts);
  detail::run_tasks(restarts, spec.threads, [&](std::size_t r) {
    if (guard.aborted.load()) return;
    auto start = (r == 0 && seeded_start) ? *seeded_start : ls.random_start(spec.seed + r);
    outcomes[r] = ls.descend(std::move(start));
  });

  SearchResult res;
  res.spec = spec;
  const detail::LocalSearch::Outcome* best = nullptr;
  for (const auto& o : outcomes)
    if (o.valid && (!best || o.value < best->value)) best = &o;
  if (!best) {
    // Budget ran out before any descent finished; report the greedy family.
    auto sel = seeded_start ? *seeded_start : detail::greedy_complete(g, {}, spec.m);
    res.best_value = detail::selection_cost(g, sel);
    res.witness = g.family(sel, spec.n);
  } else {
    res.best_value = best->value;
    res.witness = g.family(best->selection, spec.n);
  }
  res.optimal = false;
  res.nodes_explored = guard.nodes.load();
  res.elapsed = clock.elapsed();
  return res;
}

// Exact minimum by plain enumeration or branch and bound (spec.mode), or a
// local-search probe when spec.mode is local.
inline SearchResult min_op(const SearchSpec& spec) {
  if (spec.mode == SearchMode::local) return local_search(spec);
  detail::Clock clock;
  const detail::CostGraph g(candidate_pool(spec), spec);
  if (spec.m > g.size())
    throw ArgumentError("family size m=" + std::to_string(spec.m) + " exceeds the " + std::to_string(g.size()) +
                        " sets in the class");
  if (spec.mode == SearchMode::exhaustive) {
    std::uint64_t leaves = 0;
    try {
      leaves = detail::binomial(g.size(), spec.m);
    } catch (const ResourceError&) {
      leaves = std::numeric_limits<std::uint64_t>::max();
    }
    if (leaves > spec.budget.node_limit)
      throw ArgumentError("exhaustive search over " + std::to_string(g.size()) + " choose " + std::to_string(spec.m) +
                          " families exceeds the node budget; use branch and bound");
  }

  SearchResult res;
  res.spec = spec;
  if (spec.m == 0) {
    res.witness = SetFamily(spec.n);
    res.optimal = true;
    res.elapsed = clock.elapsed();
    return res;
  }

  detail::BudgetGuard guard{spec.budget, clock};
  std::optional<std::uint64_t> upper;
  std::vector<std::size_t> fallback;
  if (spec.mode == SearchMode::branch_and_bound) {
    fallback = detail::greedy_complete(g, {}, spec.m);
    upper = detail::selection_cost(g, fallback);
  }
  detail::ExactSearch search(g, spec, guard);
  auto out = search.run(upper);

  if (out.witness) {
    res.best_value = out.value;
    res.witness = g.family(*out.witness, spec.n);
  } else {
    // Only reachable when the budget stopped the search before any leaf.
    if (fallback.empty()) fallback = detail::greedy_complete(g, {}, spec.m);
    res.best_value = detail::selection_cost(g, fallback);
    res.witness = g.family(fallback, spec.n);
  }
  res.optimal = !guard.aborted.load();
  res.nodes_explored = guard.nodes.load();
  res.elapsed = clock.elapsed();
  return res;
}

// min_op with the c_{k,t} objective; spec.objective is forced to ckt.
inline SearchResult min_ckt(SearchSpec spec) {
  spec.objective = Objective::ckt;
  return min_op(spec);
}

}  // namespace oddtown
