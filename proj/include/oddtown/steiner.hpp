#pragma once

#include <algorithm>
#include <cstddef>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <string>
#include <vector>

#include "oddtown/detail/combinatorics.hpp"
#include "oddtown/errors.hpp"
#include "oddtown/family_io.hpp"
#include "oddtown/set_family.hpp"

namespace oddtown {

// S(n,k,t): k-sets (blocks) such that every t-subset of [n] lies in exactly
// one block. Instances only exist after an exhaustive cover check.
class SteinerSystem {
 public:
  // Throws ValidationError naming the first t-set covered zero or several times.
  static SteinerSystem validated(std::size_t n, std::size_t k, std::size_t t, SetFamily blocks) {
    if (!(t < k && k <= n)) throw ArgumentError("Steiner parameters need t < k <= n");
    if (blocks.ground_size() != n) throw DimensionMismatch(n, blocks.ground_size());
    for (const auto& b : blocks)
      if (b.cardinality() != k)
        throw ValidationError("block " + b.to_string() + " does not have size " + std::to_string(k));

    std::map<BitSubset, std::size_t> cover;
    for (const auto& b : blocks) detail::for_each_k_subset(b, t, [&](BitSubset s) { ++cover[std::move(s)]; });

    BitSubset everything(n);
    for (std::size_t i = 0; i < n; ++i) everything.set(i);
    detail::for_each_k_subset(everything, t, [&](const BitSubset& s) {
      const auto it = cover.find(s);
      const std::size_t c = it == cover.end() ? 0 : it->second;
      if (c != 1)
        throw ValidationError("t-set " + s.to_string() + " lies in " + std::to_string(c) +
                              " blocks (expected exactly 1)");
    });
    return SteinerSystem(n, k, t, std::move(blocks));
  }

  std::size_t n() const noexcept { return n_; }
  std::size_t k() const noexcept { return k_; }
  std::size_t t() const noexcept { return t_; }
  const SetFamily& blocks() const noexcept { return blocks_; }

 private:
  SteinerSystem(std::size_t n, std::size_t k, std::size_t t, SetFamily blocks)
      : n_(n), k_(k), t_(t), blocks_(std::move(blocks)) {}

  std::size_t n_, k_, t_;
  SetFamily blocks_;
};

// Block file: header `n=<n> k=<k> t=<t>`, then one block per line.
inline SteinerSystem read_steiner(std::istream& in) {
  auto f = detail::read_block_file(in, {"n", "k", "t"});
  SetFamily blocks(f.header.at("n"));
  for (auto& [line, s] : f.sets) {
    if (blocks.contains(s)) throw ValidationError("block " + s.to_string() + " repeated on line " + std::to_string(line));
    blocks.add(std::move(s));
  }
  return SteinerSystem::validated(f.header.at("n"), f.header.at("k"), f.header.at("t"), std::move(blocks));
}

inline SteinerSystem load_steiner(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  return read_steiner(in);
}

// As load_steiner, additionally requiring the header to declare S(n,k,t).
inline SteinerSystem load_steiner(const std::string& path, std::size_t n, std::size_t k, std::size_t t) {
  auto s = load_steiner(path);
  if (s.n() != n || s.k() != k || s.t() != t)
    throw ValidationError(path + " declares S(" + std::to_string(s.n()) + "," + std::to_string(s.k()) + "," +
                          std::to_string(s.t()) + "), expected S(" + std::to_string(n) + "," +
                          std::to_string(k) + "," + std::to_string(t) + ")");
  return s;
}

inline void write_steiner(std::ostream& out, const SteinerSystem& s) {
  out << "n=" << s.n() << " k=" << s.k() << " t=" << s.t() << '\n';
  for (const auto& b : s.blocks()) detail::write_set_line(out, b);
}

// Partition of [n] into consecutive 4-blocks, an S(n,4,1).
inline SteinerSystem steiner_partition(std::size_t n) {
  if (n == 0 || n % 4 != 0) throw ArgumentError("steiner partition needs n divisible by 4, got " + std::to_string(n));
  SetFamily blocks(n);
  for (std::size_t b = 0; b < n; b += 4) blocks.add(BitSubset::from_indices(n, {b, b + 1, b + 2, b + 3}));
  return SteinerSystem::validated(n, 4, 1, std::move(blocks));
}

// 6/(k(k-1))·C(n,k-2): size of the k-shadow of an S(n,k+1,k-2), as an exact rational.
inline Rational shadow_size_formula(std::size_t n, std::size_t k) {
  if (k < 2) throw ArgumentError("shadow size formula needs k >= 2");
  return Rational(6, static_cast<std::int64_t>(k * (k - 1))) *
         Rational(static_cast<std::int64_t>(detail::binomial(n, k - 2)));
}

// k-sets A outside the k-shadow F0 of the design with |A ∩ S| = k-1 for some
// block S (k = block size - 1). These are the additions that keep the number
// of (k-2)-intersections small; whether they are optimal is open.
inline SetFamily shadow_augmentations(const SteinerSystem& system) {
  const std::size_t k = system.k() - 1;
  const SetFamily f0 = shadow(system.blocks(), k);
  std::vector<BitSubset> out;
  for (const auto& block : system.blocks()) {
    detail::for_each_k_subset(block, k - 1, [&](const BitSubset& core) {
      for (std::size_t x = 0; x < system.n(); ++x) {
        if (block.test(x)) continue;
        BitSubset a = core;
        a.set(x);
        if (!f0.contains(a)) out.push_back(std::move(a));
      }
    });
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return SetFamily(system.n(), std::move(out));
}

}  // namespace oddtown
