#pragma once

#include <algorithm>
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "oddtown/errors.hpp"

namespace oddtown {

// A subset of a ground set {0, ..., n-1}, stored as packed 64-bit words.
// The same value doubles as the characteristic vector in F_2^n.
//
// Bits at positions >= ground_size() are always zero. Sets are totally
// ordered by the integer value of their bit pattern (element i is bit i),
// which is the canonical order used everywhere in the library.
class BitSubset {
 public:
  using Word = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;

  BitSubset() = default;

  explicit BitSubset(std::size_t ground_size)
      : ground_size_(ground_size), words_(words_for(ground_size), Word{0}) {}

  // 0-based element indices.
  static BitSubset from_indices(std::size_t ground_size,
                                std::span<const std::size_t> elements) {
    BitSubset s(ground_size);
    for (std::size_t e : elements) s.set(e);
    return s;
  }

  static BitSubset from_indices(std::size_t ground_size,
                                std::initializer_list<std::size_t> elements) {
    return from_indices(ground_size,
                        std::span<const std::size_t>(elements.begin(), elements.size()));
  }

  // 1-based element labels, as written in family files.
  static BitSubset from_labels(std::size_t ground_size,
                               std::initializer_list<std::size_t> labels) {
    BitSubset s(ground_size);
    for (std::size_t l : labels) {
      if (l == 0) throw ArgumentError("element labels are 1-based");
      s.set(l - 1);
    }
    return s;
  }

  static BitSubset from_word(std::size_t ground_size, Word bits) {
    if (ground_size > kWordBits)
      throw ArgumentError("from_word needs ground size <= 64");
    BitSubset s(ground_size);
    if (ground_size > 0) s.words_[0] = bits & tail_mask(ground_size);
    return s;
  }

  std::size_t ground_size() const noexcept { return ground_size_; }
  std::size_t word_count() const noexcept { return words_.size(); }
  std::span<const Word> words() const noexcept { return words_; }

  // Low word, or 0 for an empty ground set. Exact whenever ground_size() <= 64.
  Word low_word() const noexcept { return words_.empty() ? Word{0} : words_[0]; }

  bool test(std::size_t i) const {
    check_index(i);
    return (words_[i / kWordBits] >> (i % kWordBits)) & 1U;
  }
  void set(std::size_t i) {
    check_index(i);
    words_[i / kWordBits] |= Word{1} << (i % kWordBits);
  }
  void reset(std::size_t i) {
    check_index(i);
    words_[i / kWordBits] &= ~(Word{1} << (i % kWordBits));
  }
  void flip(std::size_t i) {
    check_index(i);
    words_[i / kWordBits] ^= Word{1} << (i % kWordBits);
  }

  std::size_t cardinality() const noexcept {
    std::size_t c = 0;
    for (Word w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

  bool none() const noexcept {
    return std::all_of(words_.begin(), words_.end(), [](Word w) { return w == 0; });
  }

  // Lowest element, or ground_size() when empty.
  std::size_t first() const noexcept {
    for (std::size_t w = 0; w < words_.size(); ++w)
      if (words_[w] != 0)
        return w * kWordBits + static_cast<std::size_t>(std::countr_zero(words_[w]));
    return ground_size_;
  }

  std::vector<std::size_t> elements() const {
    std::vector<std::size_t> out;
    out.reserve(cardinality());
    for (std::size_t w = 0; w < words_.size(); ++w) {
      Word bits = words_[w];
      while (bits != 0) {
        out.push_back(w * kWordBits + static_cast<std::size_t>(std::countr_zero(bits)));
        bits &= bits - 1;
      }
    }
    return out;
  }

  bool is_subset_of(const BitSubset& other) const {
    require_same_ground(other);
    for (std::size_t w = 0; w < words_.size(); ++w)
      if ((words_[w] & ~other.words_[w]) != 0) return false;
    return true;
  }

  // |this ∩ other| without materializing the intersection.
  std::size_t intersection_size(const BitSubset& other) const {
    require_same_ground(other);
    if (words_.size() == 1)
      return static_cast<std::size_t>(std::popcount(words_[0] & other.words_[0]));
    std::size_t c = 0;
    for (std::size_t w = 0; w < words_.size(); ++w)
      c += static_cast<std::size_t>(std::popcount(words_[w] & other.words_[w]));
    return c;
  }

  BitSubset& operator&=(const BitSubset& o) { return combine(o, std::bit_and<Word>{}); }
  BitSubset& operator|=(const BitSubset& o) { return combine(o, std::bit_or<Word>{}); }
  BitSubset& operator^=(const BitSubset& o) { return combine(o, std::bit_xor<Word>{}); }
  BitSubset& operator-=(const BitSubset& o) {
    return combine(o, [](Word a, Word b) { return a & ~b; });
  }

  friend BitSubset operator&(BitSubset a, const BitSubset& b) { return a &= b; }
  friend BitSubset operator|(BitSubset a, const BitSubset& b) { return a |= b; }
  friend BitSubset operator^(BitSubset a, const BitSubset& b) { return a ^= b; }
  friend BitSubset operator-(BitSubset a, const BitSubset& b) { return a -= b; }

  friend bool operator==(const BitSubset&, const BitSubset&) = default;

  // Ground size first, then numeric value of the bit pattern.
  friend std::strong_ordering operator<=>(const BitSubset& a, const BitSubset& b) {
    if (auto c = a.ground_size_ <=> b.ground_size_; c != 0) return c;
    for (std::size_t w = a.words_.size(); w-- > 0;)
      if (auto c = a.words_[w] <=> b.words_[w]; c != 0) return c;
    return std::strong_ordering::equal;
  }

  // "{1,2,3}" with 1-based labels.
  std::string to_string() const {
    std::string s = "{";
    bool first_elem = true;
    for (std::size_t e : elements()) {
      if (!first_elem) s += ',';
      s += std::to_string(e + 1);
      first_elem = false;
    }
    return s + "}";
  }

  std::size_t hash() const noexcept {
    std::size_t h = std::hash<std::size_t>{}(ground_size_);
    for (Word w : words_) h ^= std::hash<Word>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }

 private:
  static std::size_t words_for(std::size_t n) { return (n + kWordBits - 1) / kWordBits; }

  static Word tail_mask(std::size_t n) {
    const std::size_t r = n % kWordBits;
    return r == 0 ? ~Word{0} : (Word{1} << r) - 1;
  }

  void check_index(std::size_t i) const {
    if (i >= ground_size_)
      throw ArgumentError("element " + std::to_string(i + 1) + " outside ground set of size " +
                          std::to_string(ground_size_));
  }

  void require_same_ground(const BitSubset& o) const {
    if (o.ground_size_ != ground_size_) throw DimensionMismatch(ground_size_, o.ground_size_);
  }

  template <typename Op>
  BitSubset& combine(const BitSubset& o, Op op) {
    require_same_ground(o);
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] = op(words_[w], o.words_[w]);
    return *this;
  }

  std::size_t ground_size_ = 0;
  std::vector<Word> words_;
};

struct BitSubsetHash {
  std::size_t operator()(const BitSubset& s) const noexcept { return s.hash(); }
};

// |u ∩ v| mod 2, i.e. the F_2 inner product of the characteristic vectors.
inline bool inner_parity(const BitSubset& u, const BitSubset& v) {
  if (u.ground_size() != v.ground_size()) throw DimensionMismatch(u.ground_size(), v.ground_size());
  const auto a = u.words();
  const auto b = v.words();
  if (a.size() == 1) return std::popcount(a[0] & b[0]) & 1;
  BitSubset::Word acc = 0;
  for (std::size_t w = 0; w < a.size(); ++w) acc ^= a[w] & b[w];
  return std::popcount(acc) & 1;
}

}  // namespace oddtown
