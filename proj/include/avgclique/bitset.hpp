#pragma once

#include <bit>
#include <cassert>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace avgclique {

/// Fixed-capacity dynamic bitset. Adjacency rows and working vertex sets
/// share this representation so that set algebra stays word-parallel.
class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(std::size_t nbits) : nbits_(nbits), words_((nbits + 63) / 64, 0) {}

  std::size_t capacity() const { return nbits_; }

  bool test(std::size_t i) const {
    assert(i < nbits_);
    return (words_[i >> 6] >> (i & 63)) & 1u;
  }
  void set(std::size_t i) {
    assert(i < nbits_);
    words_[i >> 6] |= std::uint64_t{1} << (i & 63);
  }
  void reset(std::size_t i) {
    assert(i < nbits_);
    words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
  }

  void clear() {
    for (auto& w : words_) w = 0;
  }

  /// Sets bits 0..n-1.
  void set_first(std::size_t n) {
    assert(n <= nbits_);
    std::size_t full = n >> 6;
    for (std::size_t i = 0; i < full; ++i) words_[i] = ~std::uint64_t{0};
    if (n & 63) words_[full] |= (std::uint64_t{1} << (n & 63)) - 1;
  }

  /// Clears all bits at index >= i.
  void clear_from(std::size_t i) {
    if (i >= nbits_) return;
    std::size_t w = i >> 6;
    words_[w] &= (i & 63) ? (std::uint64_t{1} << (i & 63)) - 1 : 0;
    for (std::size_t j = w + 1; j < words_.size(); ++j) words_[j] = 0;
  }

  /// Clears all bits below index i.
  void clear_below(std::size_t i) {
    if (i >= nbits_) {
      clear();
      return;
    }
    std::size_t w = i >> 6;
    for (std::size_t j = 0; j < w; ++j) words_[j] = 0;
    words_[w] &= ~std::uint64_t{0} << (i & 63);
  }

  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

  bool none() const {
    for (auto w : words_) {
      if (w) return false;
    }
    return true;
  }
  bool any() const { return !none(); }

  Bitset& operator&=(const Bitset& o) {
    assert(nbits_ == o.nbits_);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  Bitset& operator|=(const Bitset& o) {
    assert(nbits_ == o.nbits_);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  /// this &= ~o
  Bitset& and_not(const Bitset& o) {
    assert(nbits_ == o.nbits_);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
  }

  bool is_subset_of(const Bitset& o) const {
    assert(nbits_ == o.nbits_);
    for (std::size_t i = 0; i < words_.size(); ++i) {
      if (words_[i] & ~o.words_[i]) return false;
    }
    return true;
  }

  bool intersects(const Bitset& o) const {
    assert(nbits_ == o.nbits_);
    for (std::size_t i = 0; i < words_.size(); ++i) {
      if (words_[i] & o.words_[i]) return true;
    }
    return false;
  }

  bool operator==(const Bitset& o) const { return nbits_ == o.nbits_ && words_ == o.words_; }

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  /// First set bit at index >= from, or npos.
  std::size_t next(std::size_t from = 0) const {
    if (from >= nbits_) return npos;
    std::size_t w = from >> 6;
    std::uint64_t cur = words_[w] & (~std::uint64_t{0} << (from & 63));
    while (true) {
      if (cur) return (w << 6) + static_cast<std::size_t>(std::countr_zero(cur));
      if (++w == words_.size()) return npos;
      cur = words_[w];
    }
  }

  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t v = next(0); v != npos; v = next(v + 1)) f(v);
  }

 private:
  std::size_t nbits_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace avgclique
