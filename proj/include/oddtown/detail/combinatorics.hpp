#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <numeric>
#include <span>
#include <vector>

#include "oddtown/bit_subset.hpp"
#include "oddtown/errors.hpp"

namespace oddtown::detail {

// Exact C(n, k); throws on overflow of 64 bits.
inline std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    const std::uint64_t num = n - k + i;
    const std::uint64_t g = std::gcd(r, i);
    const std::uint64_t rr = r / g;
    const std::uint64_t den = i / g;
    if (rr > std::numeric_limits<std::uint64_t>::max() / num)
      throw ResourceError("binomial coefficient overflows 64 bits");
    r = rr * num / den;
  }
  return r;
}

// Calls fn(indices) for every increasing k-tuple drawn from [0, n).
template <typename Fn>
void for_each_combination(std::size_t n, std::size_t k, Fn&& fn) {
  if (k > n) return;
  std::vector<std::size_t> idx(k);
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  while (true) {
    fn(std::span<const std::size_t>(idx));
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

// Every k-subset of `of`, as a BitSubset over the same ground set.
template <typename Fn>
void for_each_k_subset(const BitSubset& of, std::size_t k, Fn&& fn) {
  const auto elems = of.elements();
  std::vector<std::size_t> picked(k);
  for_each_combination(elems.size(), k, [&](std::span<const std::size_t> idx) {
    for (std::size_t i = 0; i < k; ++i) picked[i] = elems[idx[i]];
    fn(BitSubset::from_indices(of.ground_size(), std::span<const std::size_t>(picked)));
  });
}

}  // namespace oddtown::detail
