#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace mclp {

/// Fixed-capacity bitset over 64-bit words. Capacity is chosen at
/// construction and never changes; all binary operations require both
/// operands to have the same capacity.
class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(std::size_t num_bits)
      : num_bits_(num_bits), words_((num_bits + 63) / 64, 0) {}

  std::size_t size() const { return num_bits_; }
  std::size_t word_count() const { return words_.size(); }

  bool test(std::size_t i) const {
    return (words_[i >> 6] >> (i & 63)) & 1u;
  }
  void set(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(std::size_t i) {
    words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
  }
  void clear() { words_.assign(words_.size(), 0); }

  std::size_t count() const {
    std::size_t c = 0;
    for (std::uint64_t w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  bool any() const {
    for (std::uint64_t w : words_)
      if (w != 0) return true;
    return false;
  }
  bool none() const { return !any(); }

  Bitset& operator|=(const Bitset& other) {
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] |= other.words_[k];
    return *this;
  }
  Bitset& operator&=(const Bitset& other) {
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= other.words_[k];
    return *this;
  }

  friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }
  friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }

  /// Bits set in *this but not in `other`.
  Bitset and_not(const Bitset& other) const {
    Bitset r(num_bits_);
    for (std::size_t k = 0; k < words_.size(); ++k)
      r.words_[k] = words_[k] & ~other.words_[k];
    return r;
  }

  bool is_subset_of(const Bitset& other) const {
    for (std::size_t k = 0; k < words_.size(); ++k)
      if (words_[k] & ~other.words_[k]) return false;
    return true;
  }

  /// True iff no bit of *this falls outside `other`'s bits, considering only
  /// set bits; equal sets are subsets of each other.
  bool is_proper_subset_of(const Bitset& other) const {
    return is_subset_of(other) && *this != other;
  }

  bool intersects(const Bitset& other) const {
    for (std::size_t k = 0; k < words_.size(); ++k)
      if (words_[k] & other.words_[k]) return true;
    return false;
  }

  bool operator==(const Bitset& other) const {
    return num_bits_ == other.num_bits_ && words_ == other.words_;
  }
  bool operator!=(const Bitset& other) const { return !(*this == other); }

  /// Word-wise lexicographic order; used only as a deterministic tie-break.
  bool lex_less(const Bitset& other) const { return words_ < other.words_; }

  /// Calls `fn(index)` for every set bit, in ascending index order.
  template <typename Fn>
  void for_each_set_bit(Fn&& fn) const {
    for (std::size_t k = 0; k < words_.size(); ++k) {
      std::uint64_t w = words_[k];
      while (w != 0) {
        const int b = std::countr_zero(w);
        fn(k * 64 + static_cast<std::size_t>(b));
        w &= w - 1;
      }
    }
  }

  std::vector<std::size_t> set_bits() const {
    std::vector<std::size_t> out;
    out.reserve(count());
    for_each_set_bit([&](std::size_t i) { out.push_back(i); });
    return out;
  }

  // FNV-1a over the words.
  std::uint64_t hash() const {
    std::uint64_t h = 14695981039346656037ull;
    for (std::uint64_t w : words_) {
      h ^= w;
      h *= 1099511628211ull;
    }
    return h;
  }

 private:
  std::size_t num_bits_ = 0;
  std::vector<std::uint64_t> words_;
};

struct BitsetHash {
  std::uint64_t operator()(const Bitset& b) const { return b.hash(); }
};

}  // namespace mclp
