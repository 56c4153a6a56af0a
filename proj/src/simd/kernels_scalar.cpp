#include "cdindex/simd/bitset_kernels.hpp"

#include <bit>

namespace cdindex::simd::scalar {

std::size_t and_popcount(const Word* a, const Word* b, std::size_t n) {
  std::size_t total = 0;
  for (std::size_t i = 0; i < n; ++i) total += std::popcount(a[i] & b[i]);
  return total;
}

std::size_t and3_popcount(const Word* a, const Word* b, const Word* c, std::size_t n) {
  std::size_t total = 0;
  for (std::size_t i = 0; i < n; ++i) total += std::popcount(a[i] & b[i] & c[i]);
  return total;
}

void or_assign(Word* dst, const Word* src, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) dst[i] |= src[i];
}

bool is_subset(const Word* a, const Word* b, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i)
    if (a[i] & ~b[i]) return false;
  return true;
}

const KernelTable& table() {
  static const KernelTable t{"scalar", &and_popcount, &and3_popcount, &or_assign, &is_subset};
  return t;
}

}  // namespace cdindex::simd::scalar
