#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "cdindex/simd/bitset_kernels.hpp"

namespace cdindex {

// Fixed-width bitset over element indices. Bulk operations go through the
// dispatched SIMD kernels.
class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(std::size_t bits) : bits_(bits), words_((bits + 63) / 64, 0) {}

  std::size_t size() const noexcept { return bits_; }
  std::size_t word_count() const noexcept { return words_.size(); }
  const simd::Word* data() const noexcept { return words_.data(); }

  void set(std::size_t i) { words_[i >> 6] |= simd::Word{1} << (i & 63); }
  void reset(std::size_t i) { words_[i >> 6] &= ~(simd::Word{1} << (i & 63)); }
  bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1U; }

  std::size_t count() const {
    std::size_t total = 0;
    for (auto w : words_) total += static_cast<std::size_t>(__builtin_popcountll(w));
    return total;
  }

  Bitset& operator|=(const Bitset& other) {
    simd::active().or_assign(words_.data(), other.words_.data(), words_.size());
    return *this;
  }

  std::size_t and_count(const Bitset& other) const {
    return simd::active().and_popcount(words_.data(), other.words_.data(), words_.size());
  }

  std::size_t and_count(const Bitset& b, const Bitset& c) const {
    return simd::active().and3_popcount(words_.data(), b.words_.data(), c.words_.data(),
                                        words_.size());
  }

  bool subset_of(const Bitset& other) const {
    return simd::active().is_subset(words_.data(), other.words_.data(), words_.size());
  }

  Bitset& operator&=(const Bitset& other) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
    return *this;
  }
  friend Bitset operator&(Bitset lhs, const Bitset& rhs) { return lhs &= rhs; }
  friend Bitset operator|(Bitset lhs, const Bitset& rhs) { return lhs |= rhs; }

  bool any() const {
    for (auto w : words_)
      if (w) return true;
    return false;
  }

  // Calls f(i) for every set bit, in increasing order.
  template <class F>
  void for_each(F&& f) const {
    for (std::size_t k = 0; k < words_.size(); ++k) {
      simd::Word w = words_[k];
      while (w) {
        f(k * 64 + static_cast<std::size_t>(std::countr_zero(w)));
        w &= w - 1;
      }
    }
  }

  std::vector<int> indices() const {
    std::vector<int> out;
    for_each([&](std::size_t i) { out.push_back(static_cast<int>(i)); });
    return out;
  }

  bool operator==(const Bitset&) const = default;

 private:
  std::size_t bits_ = 0;
  std::vector<simd::Word> words_;
};

}  // namespace cdindex
