#include "cdindex/simd/bitset_kernels.hpp"

#if defined(CDINDEX_HAVE_NEON_KERNELS)

#include <arm_neon.h>

#include <bit>

namespace cdindex::simd::neon {

std::size_t and_popcount(const Word* a, const Word* b, std::size_t n) {
  uint64x2_t acc = vdupq_n_u64(0);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const uint64x2_t v = vandq_u64(vld1q_u64(a + i), vld1q_u64(b + i));
    const uint8x16_t bytes = vcntq_u8(vreinterpretq_u8_u64(v));
    acc = vaddq_u64(acc, vpaddlq_u32(vpaddlq_u16(vpaddlq_u8(bytes))));
  }
  std::size_t total = vgetq_lane_u64(acc, 0) + vgetq_lane_u64(acc, 1);
  for (; i < n; ++i) total += std::popcount(a[i] & b[i]);
  return total;
}

std::size_t and3_popcount(const Word* a, const Word* b, const Word* c, std::size_t n) {
  uint64x2_t acc = vdupq_n_u64(0);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const uint64x2_t v =
        vandq_u64(vandq_u64(vld1q_u64(a + i), vld1q_u64(b + i)), vld1q_u64(c + i));
    const uint8x16_t bytes = vcntq_u8(vreinterpretq_u8_u64(v));
    acc = vaddq_u64(acc, vpaddlq_u32(vpaddlq_u16(vpaddlq_u8(bytes))));
  }
  std::size_t total = vgetq_lane_u64(acc, 0) + vgetq_lane_u64(acc, 1);
  for (; i < n; ++i) total += std::popcount(a[i] & b[i] & c[i]);
  return total;
}

void or_assign(Word* dst, const Word* src, std::size_t n) {
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) vst1q_u64(dst + i, vorrq_u64(vld1q_u64(dst + i), vld1q_u64(src + i)));
  for (; i < n; ++i) dst[i] |= src[i];
}

bool is_subset(const Word* a, const Word* b, std::size_t n) {
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const uint64x2_t stray = vbicq_u64(vld1q_u64(a + i), vld1q_u64(b + i));
    if (vgetq_lane_u64(stray, 0) | vgetq_lane_u64(stray, 1)) return false;
  }
  for (; i < n; ++i)
    if (a[i] & ~b[i]) return false;
  return true;
}

const KernelTable& table() {
  static const KernelTable t{"neon", &and_popcount, &and3_popcount, &or_assign, &is_subset};
  return t;
}

}  // namespace cdindex::simd::neon

#endif
