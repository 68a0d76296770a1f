#pragma once

// Explicit families: the twin extremal eventown families and their
// supersaturated extensions, the extremal oddtown families and theirs, and
// the small uniform examples.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <iterator>
#include <random>
#include <string>
#include <vector>

#include "oddtown/detail/combinatorics.hpp"
#include "oddtown/errors.hpp"
#include "oddtown/set_family.hpp"

namespace oddtown {

struct EventownPair {
  SetFamily a;
  SetFamily b;
};

// n = 4l. Block X_i = {4i-3, ..., 4i} (1-based) carries the pairs
//   A: {4i-3, 4i-2}, {4i-1, 4i}     B: {4i-3, 4i}, {4i-2, 4i-1}
// and each family holds every union of its pairs. Both are returned in
// canonical order.
inline EventownPair eventown_pair(std::size_t n) {
  if (n == 0 || n % 4 != 0) throw ArgumentError("eventown pair needs n divisible by 4, got " + std::to_string(n));
  const std::size_t k = n / 2;
  if (k >= 32) throw ResourceError("eventown pair of size 2^" + std::to_string(k) + " is too large");
  std::vector<BitSubset> pairs_a, pairs_b;
  for (std::size_t x = 0; x < n; x += 4) {
    pairs_a.push_back(BitSubset::from_indices(n, {x, x + 1}));
    pairs_a.push_back(BitSubset::from_indices(n, {x + 2, x + 3}));
    pairs_b.push_back(BitSubset::from_indices(n, {x, x + 3}));
    pairs_b.push_back(BitSubset::from_indices(n, {x + 1, x + 2}));
  }
  auto unions = [&](const std::vector<BitSubset>& parts) {
    std::vector<BitSubset> out;
    out.reserve(std::size_t{1} << k);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
      BitSubset s(n);
      for (std::size_t j = 0; j < k; ++j)
        if ((mask >> j) & 1U) s |= parts[j];
      out.push_back(std::move(s));
    }
    return SetFamily(n, std::move(out)).canonical();
  };
  return {unions(pairs_a), unions(pairs_b)};
}

// How a construction picks its "any s members" from a candidate list.
struct Selector {
  enum class Kind { deterministic, seeded };
  Kind kind = Kind::deterministic;
  std::uint64_t seed = 0;

  static Selector deterministic() { return {}; }
  static Selector seeded(std::uint64_t seed) { return {Kind::seeded, seed}; }
};

namespace detail {

// s members of a canonical candidate list: the s smallest, or a seeded sample
// (kept in canonical order).
inline std::vector<BitSubset> select(const std::vector<BitSubset>& candidates, std::size_t s, Selector sel) {
  if (sel.kind == Selector::Kind::deterministic)
    return {candidates.begin(), candidates.begin() + static_cast<std::ptrdiff_t>(s)};
  std::vector<BitSubset> out;
  std::mt19937_64 rng(sel.seed);
  std::sample(candidates.begin(), candidates.end(), std::back_inserter(out), s, rng);
  return out;
}

}  // namespace detail

// A together with s members of B \ A; 1 <= s <= 2^k - 2^l for n = 2k = 4l.
inline SetFamily eventown_plus(std::size_t n, std::size_t s, Selector sel = Selector::deterministic()) {
  auto [a, b] = eventown_pair(n);
  const std::size_t k = n / 2;
  const std::size_t l = n / 4;
  const std::size_t limit = (std::size_t{1} << k) - (std::size_t{1} << l);
  if (s < 1 || s > limit)
    throw ArgumentError("eventown_plus needs 1 <= s <= " + std::to_string(limit) + ", got s=" + std::to_string(s));
  std::vector<BitSubset> outside;
  for (const auto& m : b)
    if (!a.contains(m)) outside.push_back(m);
  SetFamily out = a;
  for (auto& m : detail::select(outside, s, sel)) out.add(std::move(m));
  return out;
}

inline SetFamily singletons(std::size_t n) {
  if (n == 0) throw ArgumentError("singletons needs n >= 1");
  SetFamily out(n);
  for (std::size_t i = 0; i < n; ++i) out.add(BitSubset::from_indices(n, {i}));
  return out;
}

// All four triples inside each block {4i-3, ..., 4i}, canonical order.
inline SetFamily disjoint_k4_triples(std::size_t n) {
  if (n == 0 || n % 4 != 0) throw ArgumentError("k4 triples need n divisible by 4, got " + std::to_string(n));
  std::vector<BitSubset> out;
  for (std::size_t x = 0; x < n; x += 4)
    detail::for_each_k_subset(BitSubset::from_indices(n, {x, x + 1, x + 2, x + 3}), 3,
                              [&](BitSubset t) { out.push_back(std::move(t)); });
  std::sort(out.begin(), out.end());
  return SetFamily(n, std::move(out));
}

// Singletons plus s of the disjoint K4 triples; 1 <= s <= n.
inline SetFamily oddtown_plus(std::size_t n, std::size_t s, Selector sel = Selector::deterministic()) {
  const SetFamily triples = disjoint_k4_triples(n);
  if (s < 1 || s > n)
    throw ArgumentError("oddtown_plus needs 1 <= s <= n=" + std::to_string(n) + ", got s=" + std::to_string(s));
  SetFamily out = singletons(n);
  for (auto& t : detail::select(triples.members(), s, sel)) out.add(std::move(t));
  return out;
}

// Six triples on [5] with op = 3 and no oddtown subfamily of size 5.
inline SetFamily example_x5() {
  return SetFamily::from_labels(5, {{1, 2, 3}, {1, 4, 5}, {1, 2, 4}, {1, 3, 5}, {1, 3, 4}, {1, 2, 5}});
}

// All triples of [4] plus {1,3,5} and {3,4,5}; op = 4.
inline SetFamily example_f1() {
  return SetFamily::from_labels(5, {{1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {2, 3, 4}, {1, 3, 5}, {3, 4, 5}});
}

// For odd k >= 5, on n = 2k+2: all k-subsets of [1, k+1], all k-subsets of
// [k+2, 2k+2], and [k-2] ∪ {k+2, k+3}. op = 5.
inline SetFamily example_f2(std::size_t k) {
  if (k < 5 || k % 2 == 0) throw ArgumentError("example_f2 needs odd k >= 5, got k=" + std::to_string(k));
  const std::size_t n = 2 * k + 2;
  std::vector<BitSubset> out;
  BitSubset low(n), high(n);
  for (std::size_t i = 0; i <= k; ++i) low.set(i);
  for (std::size_t i = k + 1; i < n; ++i) high.set(i);
  detail::for_each_k_subset(low, k, [&](BitSubset s) { out.push_back(std::move(s)); });
  detail::for_each_k_subset(high, k, [&](BitSubset s) { out.push_back(std::move(s)); });
  BitSubset extra(n);
  for (std::size_t i = 0; i + 2 < k; ++i) extra.set(i);
  extra.set(k + 1);
  extra.set(k + 2);
  out.push_back(std::move(extra));
  return SetFamily(n, std::move(out));
}

}  // namespace oddtown
