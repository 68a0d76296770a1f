#pragma once

#include <algorithm>
#include <cstddef>
#include <span>
#include <vector>

#include "oddtown/bit_subset.hpp"
#include "oddtown/errors.hpp"

namespace oddtown {

// Subspace of F_2^n in reduced row echelon form.
//
// The pivot of a row is its lowest set bit. Rows are sorted by strictly
// increasing pivot and every pivot column is zero in all other rows, so two
// subspaces are equal exactly when their bases are equal.
class Gf2Subspace {
 public:
  explicit Gf2Subspace(std::size_t ground_size = 0) : ground_size_(ground_size) {}

  static Gf2Subspace zero(std::size_t n) { return Gf2Subspace(n); }

  static Gf2Subspace full(std::size_t n) {
    Gf2Subspace s(n);
    for (std::size_t i = 0; i < n; ++i) s.insert(BitSubset::from_indices(n, {i}));
    return s;
  }

  std::size_t ground_size() const noexcept { return ground_size_; }
  std::size_t dim() const noexcept { return basis_.size(); }
  const std::vector<BitSubset>& basis() const noexcept { return basis_; }

  std::vector<std::size_t> pivots() const {
    std::vector<std::size_t> p;
    p.reserve(basis_.size());
    for (const auto& row : basis_) p.push_back(row.first());
    return p;
  }

  bool contains(const BitSubset& v) const {
    require_ground(v);
    return reduce(v).none();
  }

  // Adds v to the spanning set. Returns false when v was already in the span.
  bool insert(const BitSubset& v) {
    require_ground(v);
    BitSubset r = reduce(v);
    if (r.none()) return false;
    const std::size_t p = r.first();
    for (auto& row : basis_)
      if (row.test(p)) row ^= r;
    auto pos = std::lower_bound(basis_.begin(), basis_.end(), p,
                                [](const BitSubset& row, std::size_t piv) { return row.first() < piv; });
    basis_.insert(pos, std::move(r));
    return true;
  }

  friend bool operator==(const Gf2Subspace&, const Gf2Subspace&) = default;

 private:
  BitSubset reduce(BitSubset v) const {
    for (const auto& row : basis_)
      if (v.test(row.first())) v ^= row;
    return v;
  }

  void require_ground(const BitSubset& v) const {
    if (v.ground_size() != ground_size_) throw DimensionMismatch(ground_size_, v.ground_size());
  }

  std::size_t ground_size_;
  std::vector<BitSubset> basis_;
};

// RREF basis of span(vectors). An empty list gives the zero subspace of F_2^n.
inline Gf2Subspace span_of(std::size_t ground_size, std::span<const BitSubset> vectors) {
  Gf2Subspace s(ground_size);
  for (const auto& v : vectors) s.insert(v);
  return s;
}

inline std::size_t rank_of(std::size_t ground_size, std::span<const BitSubset> vectors) {
  return span_of(ground_size, vectors).dim();
}

// Coefficient vectors (e_1, ..., e_m) in F_2^m with sum e_i v_i = 0.
inline Gf2Subspace nullspace(std::span<const BitSubset> vectors) {
  const std::size_t m = vectors.size();
  Gf2Subspace result(m);
  if (m == 0) return result;
  const std::size_t n = vectors.front().ground_size();

  // Rows carry (value, combination) pairs; a value reduced to zero yields a
  // dependency among the inputs recorded in its combination.
  struct Row {
    BitSubset value;
    BitSubset combo;
  };
  std::vector<Row> echelon;
  for (std::size_t i = 0; i < m; ++i) {
    if (vectors[i].ground_size() != n) throw DimensionMismatch(n, vectors[i].ground_size());
    Row r{vectors[i], BitSubset::from_indices(m, {i})};
    for (const auto& e : echelon) {
      if (r.value.test(e.value.first())) {
        r.value ^= e.value;
        r.combo ^= e.combo;
      }
    }
    if (r.value.none())
      result.insert(r.combo);
    else
      echelon.push_back(std::move(r));
  }
  return result;
}

// ker(w -> <w, v>) restricted to W.
inline Gf2Subspace kernel_of_functional(const Gf2Subspace& w, const BitSubset& v) {
  if (v.ground_size() != w.ground_size()) throw DimensionMismatch(w.ground_size(), v.ground_size());
  const auto& rows = w.basis();
  auto hit = std::find_if(rows.begin(), rows.end(),
                          [&](const BitSubset& r) { return inner_parity(r, v); });
  if (hit == rows.end()) return w;
  Gf2Subspace k(w.ground_size());
  for (const auto& r : rows) {
    if (&r == &*hit) continue;
    k.insert(inner_parity(r, v) ? r ^ *hit : r);
  }
  return k;
}

// U^perp under the standard F_2 inner product. Built directly from the RREF:
// one vector per free column.
inline Gf2Subspace orthogonal_complement(const Gf2Subspace& u) {
  const std::size_t n = u.ground_size();
  const auto& rows = u.basis();
  std::vector<bool> is_pivot(n, false);
  for (const auto& r : rows) is_pivot[r.first()] = true;

  Gf2Subspace out(n);
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    BitSubset v(n);
    v.set(f);
    for (const auto& r : rows)
      if (r.test(f)) v.set(r.first());
    out.insert(v);
  }
  return out;
}

inline constexpr std::size_t kDefaultEnumerationCap = 24;

// All 2^dim vectors of W, ordered by coefficient mask over the RREF basis
// (mask 0 first, i.e. the zero vector).
inline std::vector<BitSubset> enumerate_subspace(const Gf2Subspace& w,
                                                 std::size_t cap = kDefaultEnumerationCap) {
  const std::size_t d = w.dim();
  if (d > cap)
    throw EnumerationTooLarge("subspace of dimension " + std::to_string(d) +
                              " exceeds enumeration cap " + std::to_string(cap));
  const std::size_t count = std::size_t{1} << d;
  std::vector<BitSubset> out;
  out.reserve(count);
  const auto& rows = w.basis();
  for (std::size_t mask = 0; mask < count; ++mask) {
    BitSubset v(w.ground_size());
    for (std::size_t i = 0; i < d; ++i)
      if ((mask >> i) & 1U) v ^= rows[i];
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace oddtown
