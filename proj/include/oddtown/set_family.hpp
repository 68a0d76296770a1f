#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include <boost/rational.hpp>

#include "oddtown/bit_subset.hpp"
#include "oddtown/detail/combinatorics.hpp"
#include "oddtown/errors.hpp"

namespace oddtown {

using Rational = boost::rational<std::int64_t>;

// Ordered, duplicate-free list of subsets of a common ground set.
// Insertion order is kept; canonical() gives the sorted form.
class SetFamily {
 public:
  explicit SetFamily(std::size_t ground_size = 0) : ground_size_(ground_size) {}

  SetFamily(std::size_t ground_size, std::vector<BitSubset> members) : ground_size_(ground_size) {
    members_.reserve(members.size());
    for (auto& m : members) add(std::move(m));
  }

  // 1-based labels; the empty initializer list is the empty set.
  static SetFamily from_labels(std::size_t ground_size,
                               std::initializer_list<std::initializer_list<std::size_t>> sets) {
    SetFamily f(ground_size);
    for (const auto& s : sets) f.add(BitSubset::from_labels(ground_size, s));
    return f;
  }

  void add(BitSubset s) {
    if (s.ground_size() != ground_size_) throw DimensionMismatch(ground_size_, s.ground_size());
    if (!index_.insert(s).second) throw DuplicateMember("duplicate member " + s.to_string());
    members_.push_back(std::move(s));
  }

  // Adds s unless it is already present; returns whether it was added.
  bool try_add(BitSubset s) {
    if (contains(s)) return false;
    add(std::move(s));
    return true;
  }

  bool contains(const BitSubset& s) const { return index_.count(s) != 0; }

  std::size_t ground_size() const noexcept { return ground_size_; }
  std::size_t size() const noexcept { return members_.size(); }
  bool empty() const noexcept { return members_.empty(); }
  const std::vector<BitSubset>& members() const noexcept { return members_; }
  const BitSubset& operator[](std::size_t i) const { return members_[i]; }
  auto begin() const noexcept { return members_.begin(); }
  auto end() const noexcept { return members_.end(); }

  SetFamily canonical() const {
    auto sorted = members_;
    std::sort(sorted.begin(), sorted.end());
    return SetFamily(ground_size_, std::move(sorted));
  }

  // Common member cardinality, or nullopt for a non-uniform family.
  // The empty family reports nullopt.
  std::optional<std::size_t> uniform_size() const {
    if (members_.empty()) return std::nullopt;
    const std::size_t k = members_.front().cardinality();
    for (const auto& m : members_)
      if (m.cardinality() != k) return std::nullopt;
    return k;
  }

  // Ordered equality: same ground set, same members in the same order.
  friend bool operator==(const SetFamily& a, const SetFamily& b) {
    return a.ground_size_ == b.ground_size_ && a.members_ == b.members_;
  }

 private:
  std::size_t ground_size_;
  std::vector<BitSubset> members_;
  std::unordered_set<BitSubset, BitSubsetHash> index_;
};

struct OpReport {
  std::uint64_t op_count = 0;
  // (i, j) with i < j in member order, ascending; only when requested.
  std::optional<std::vector<std::pair<std::size_t, std::size_t>>> pairs;
  // op_count / C(|family|, 2); absent for fewer than two members.
  std::optional<Rational> density;
};

inline OpReport op(const SetFamily& family, bool materialize_pairs = false) {
  OpReport r;
  if (materialize_pairs) r.pairs.emplace();
  const auto& m = family.members();
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = i + 1; j < m.size(); ++j) {
      if (inner_parity(m[i], m[j])) {
        ++r.op_count;
        if (r.pairs) r.pairs->emplace_back(i, j);
      }
    }
  }
  if (m.size() >= 2) {
    const auto total = static_cast<std::int64_t>(detail::binomial(m.size(), 2));
    r.density = Rational(static_cast<std::int64_t>(r.op_count), total);
  }
  return r;
}

inline std::uint64_t op_count(const SetFamily& family) { return op(family).op_count; }

inline Rational op_density(const SetFamily& family) {
  if (family.size() < 2) throw ArgumentError("op density needs at least two members");
  return *op(family).density;
}

namespace detail {

inline std::size_t require_uniform(const SetFamily& family, std::optional<std::size_t> expected = {}) {
  if (family.empty()) {
    if (expected) return *expected;
    throw UniformityError("empty family has no uniform size");
  }
  const auto k = family.uniform_size();
  if (!k) throw UniformityError("family is not uniform");
  if (expected && *k != *expected)
    throw UniformityError("family is " + std::to_string(*k) + "-uniform, expected " +
                          std::to_string(*expected));
  return *k;
}

// Number of members containing `a`.
inline std::size_t link_size(const SetFamily& family, const BitSubset& a) {
  std::size_t c = 0;
  for (const auto& f : family)
    if (a.is_subset_of(f)) ++c;
  return c;
}

}  // namespace detail

// Pairs of members meeting in exactly t points. The family must be uniform
// with member size k > t. The empty family counts zero pairs.
inline std::uint64_t c_kt(const SetFamily& family, std::size_t t) {
  if (family.empty()) return 0;
  const std::size_t k = detail::require_uniform(family);
  if (t >= k)
    throw ArgumentError("intersection size t=" + std::to_string(t) + " must be below k=" +
                        std::to_string(k));
  std::uint64_t c = 0;
  const auto& m = family.members();
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = i + 1; j < m.size(); ++j)
      if (m[i].intersection_size(m[j]) == t) ++c;
  return c;
}

// All k-sets contained in some member, in canonical order.
inline SetFamily shadow(const SetFamily& family, std::size_t k) {
  for (const auto& m : family)
    if (k >= m.cardinality())
      throw ArgumentError("shadow size k=" + std::to_string(k) + " not below member size " +
                          std::to_string(m.cardinality()));
  std::vector<BitSubset> out;
  for (const auto& m : family) detail::for_each_k_subset(m, k, [&](BitSubset s) { out.push_back(std::move(s)); });
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return SetFamily(family.ground_size(), std::move(out));
}

// { F \ a : F in family, a ⊆ F }, in member order.
inline SetFamily link(const SetFamily& family, const BitSubset& a) {
  if (a.ground_size() != family.ground_size())
    throw DimensionMismatch(family.ground_size(), a.ground_size());
  SetFamily out(family.ground_size());
  for (const auto& f : family)
    if (a.is_subset_of(f)) out.add(f - a);
  return out;
}

struct LinkIdentity {
  std::uint64_t lhs = 0;
  std::uint64_t rhs = 0;
  bool holds = false;
};

// C(k, k-3)·|F| against the sum of |F(A)| over all (k-3)-subsets A of the ground set.
inline LinkIdentity check_link_identity(const SetFamily& family, std::size_t k) {
  if (k < 3) throw ArgumentError("link identity needs k >= 3");
  detail::require_uniform(family, k);
  LinkIdentity r;
  r.lhs = detail::binomial(k, k - 3) * family.size();
  const std::size_t n = family.ground_size();
  BitSubset everything(n);
  for (std::size_t i = 0; i < n; ++i) everything.set(i);
  detail::for_each_k_subset(everything, k - 3,
                            [&](const BitSubset& a) { r.rhs += detail::link_size(family, a); });
  r.holds = r.lhs == r.rhs;
  return r;
}

struct ApplicationBound {
  std::uint64_t lhs = 0;  // c_{k,k-2}(F)·(k-2)
  std::uint64_t mid = 0;  // sum over (k-3)-sets A of op(F(A))
  std::uint64_t rhs = 0;  // 3·s·C(k,3)
  bool lhs_ge_mid = false;
  bool mid_ge_rhs = false;  // conditional leg; reported only
};

inline ApplicationBound check_application_bound(const SetFamily& family, std::size_t k, std::uint64_t s) {
  if (k < 4) throw ArgumentError("application bound needs k >= 4");
  detail::require_uniform(family, k);
  ApplicationBound r;
  r.lhs = c_kt(family, k - 2) * (k - 2);
  BitSubset everything(family.ground_size());
  for (std::size_t i = 0; i < family.ground_size(); ++i) everything.set(i);
  detail::for_each_k_subset(everything, k - 3,
                            [&](const BitSubset& a) { r.mid += op(link(family, a)).op_count; });
  r.rhs = 3 * s * detail::binomial(k, 3);
  r.lhs_ge_mid = r.lhs >= r.mid;
  r.mid_ge_rhs = r.mid >= r.rhs;
  return r;
}

namespace detail {

inline bool pairwise_even(const SetFamily& family) {
  const auto& m = family.members();
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = i + 1; j < m.size(); ++j)
      if (inner_parity(m[i], m[j])) return false;
  return true;
}

}  // namespace detail

inline bool is_eventown(const SetFamily& family) {
  for (const auto& m : family)
    if (m.cardinality() % 2 != 0) return false;
  return detail::pairwise_even(family);
}

inline bool is_oddtown(const SetFamily& family) {
  for (const auto& m : family)
    if (m.cardinality() % 2 == 0) return false;
  return detail::pairwise_even(family);
}

enum class SubfamilyStrategy { greedy, exact };

inline constexpr std::size_t kDefaultExactSubfamilyCap = 256;

namespace detail {

// Dense adjacency over at most a few hundred vertices.
class BitGraph {
 public:
  explicit BitGraph(std::size_t n) : n_(n), words_((n + 63) / 64), rows_(n * words_, 0) {}

  void connect(std::size_t a, std::size_t b) {
    rows_[a * words_ + b / 64] |= std::uint64_t{1} << (b % 64);
    rows_[b * words_ + a / 64] |= std::uint64_t{1} << (a % 64);
  }
  bool adjacent(std::size_t a, std::size_t b) const {
    return (rows_[a * words_ + b / 64] >> (b % 64)) & 1U;
  }
  std::size_t size() const noexcept { return n_; }

 private:
  std::size_t n_;
  std::size_t words_;
  std::vector<std::uint64_t> rows_;
};

// Maximum clique by branch and bound with a greedy-colouring bound.
// Candidates are branched in increasing vertex order, so the first maximum
// clique found (and returned) is deterministic.
class MaxClique {
 public:
  MaxClique(const BitGraph& g, std::size_t ceiling) : g_(g), ceiling_(ceiling) {}

  std::vector<std::size_t> run() {
    std::vector<std::size_t> all(g_.size());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    std::vector<std::size_t> current;
    expand(current, all);
    return best_;
  }

 private:
  std::size_t colour_bound(const std::vector<std::size_t>& cand) const {
    std::vector<std::vector<std::size_t>> classes;
    for (std::size_t v : cand) {
      bool placed = false;
      for (auto& cls : classes) {
        if (std::none_of(cls.begin(), cls.end(), [&](std::size_t u) { return g_.adjacent(u, v); })) {
          cls.push_back(v);
          placed = true;
          break;
        }
      }
      if (!placed) classes.push_back({v});
    }
    return classes.size();
  }

  void expand(std::vector<std::size_t>& current, const std::vector<std::size_t>& cand) {
    if (current.size() > best_.size()) best_ = current;
    if (best_.size() >= ceiling_) return;
    if (cand.empty() || current.size() + colour_bound(cand) <= best_.size()) return;
    for (std::size_t idx = 0; idx < cand.size(); ++idx) {
      if (current.size() + (cand.size() - idx) <= best_.size()) return;
      const std::size_t v = cand[idx];
      std::vector<std::size_t> next;
      for (std::size_t j = idx + 1; j < cand.size(); ++j)
        if (g_.adjacent(v, cand[j])) next.push_back(cand[j]);
      current.push_back(v);
      expand(current, next);
      current.pop_back();
      if (best_.size() >= ceiling_) return;
    }
  }

  const BitGraph& g_;
  std::size_t ceiling_;
  std::vector<std::size_t> best_;
};

}  // namespace detail

// Eventown subfamily of an even-sized family. Greedy scans members in order
// and keeps each one compatible with everything kept so far (maximal with
// respect to the family). Exact returns a maximum-size one; the family must
// have at most `cap` members.
inline SetFamily maximal_eventown_subfamily(const SetFamily& family,
                                            SubfamilyStrategy strategy = SubfamilyStrategy::greedy,
                                            std::size_t cap = kDefaultExactSubfamilyCap) {
  for (const auto& m : family)
    if (m.cardinality() % 2 != 0) throw ParityError("odd-sized member " + m.to_string());

  SetFamily out(family.ground_size());
  if (strategy == SubfamilyStrategy::greedy) {
    std::vector<const BitSubset*> kept;
    for (const auto& m : family) {
      if (std::none_of(kept.begin(), kept.end(), [&](const BitSubset* k) { return inner_parity(*k, m); })) {
        kept.push_back(&m);
        out.add(m);
      }
    }
    return out;
  }

  if (family.size() > cap)
    throw ResourceError("exact eventown subfamily over " + std::to_string(family.size()) +
                        " members exceeds cap " + std::to_string(cap));
  detail::BitGraph g(family.size());
  for (std::size_t i = 0; i < family.size(); ++i)
    for (std::size_t j = i + 1; j < family.size(); ++j)
      if (!inner_parity(family[i], family[j])) g.connect(i, j);
  const std::size_t half = family.ground_size() / 2;
  const std::size_t ceiling = half >= 63 ? family.size() : (std::size_t{1} << half);
  for (std::size_t v : detail::MaxClique(g, ceiling).run()) out.add(family[v]);
  return out;
}

// |X_i ∩ Y_i| odd for every i and |X_i ∩ Y_j| even for every i != j.
// Takes plain sequences so that tuples with repeated sets can be tested.
inline bool bipartite_oddtown_check(std::span<const BitSubset> xs, std::span<const BitSubset> ys) {
  if (xs.size() != ys.size())
    throw ArgumentError("bipartite check needs equal lengths, got " + std::to_string(xs.size()) +
                        " and " + std::to_string(ys.size()));
  for (std::size_t i = 0; i < xs.size(); ++i)
    for (std::size_t j = 0; j < ys.size(); ++j)
      if (inner_parity(xs[i], ys[j]) != (i == j)) return false;
  return true;
}

inline bool bipartite_oddtown_check(const SetFamily& xs, const SetFamily& ys) {
  if (xs.size() == ys.size() && xs.ground_size() != ys.ground_size())
    throw DimensionMismatch(xs.ground_size(), ys.ground_size());
  return bipartite_oddtown_check(std::span<const BitSubset>(xs.members()),
                                 std::span<const BitSubset>(ys.members()));
}

}  // namespace oddtown
