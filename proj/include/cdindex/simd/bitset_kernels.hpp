#pragma once
// Word-parallel bitset kernels.
//
// Every kernel has a portable scalar reference in namespace `scalar` and,
// where the target supports it, an AVX2 (x86-64) or NEON (AArch64) variant.
// `active()` picks the widest variant the running CPU supports; the choice can
// be overridden with the CDINDEX_SIMD environment variable ("scalar", "avx2",
// "neon") for benchmarking and equivalence testing.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace cdindex::simd {

using Word = std::uint64_t;

// popcount(a & b)
using AndPopcountFn = std::size_t (*)(const Word* a, const Word* b, std::size_t n);
// popcount(a & b & c)
using And3PopcountFn = std::size_t (*)(const Word* a, const Word* b, const Word* c,
                                       std::size_t n);
// dst |= src
using OrAssignFn = void (*)(Word* dst, const Word* src, std::size_t n);
// true iff (a & ~b) == 0, i.e. a is a subset of b
using SubsetFn = bool (*)(const Word* a, const Word* b, std::size_t n);

struct KernelTable {
  std::string_view name;
  AndPopcountFn and_popcount;
  And3PopcountFn and3_popcount;
  OrAssignFn or_assign;
  SubsetFn is_subset;
};

namespace scalar {
std::size_t and_popcount(const Word* a, const Word* b, std::size_t n);
std::size_t and3_popcount(const Word* a, const Word* b, const Word* c, std::size_t n);
void or_assign(Word* dst, const Word* src, std::size_t n);
bool is_subset(const Word* a, const Word* b, std::size_t n);
const KernelTable& table();
}  // namespace scalar

#if defined(__x86_64__) || defined(_M_X64)
#define CDINDEX_HAVE_AVX2_KERNELS 1
namespace avx2 {
std::size_t and_popcount(const Word* a, const Word* b, std::size_t n);
std::size_t and3_popcount(const Word* a, const Word* b, const Word* c, std::size_t n);
void or_assign(Word* dst, const Word* src, std::size_t n);
bool is_subset(const Word* a, const Word* b, std::size_t n);
const KernelTable& table();
}  // namespace avx2
#endif

#if defined(__aarch64__) || defined(__ARM_NEON)
#define CDINDEX_HAVE_NEON_KERNELS 1
namespace neon {
std::size_t and_popcount(const Word* a, const Word* b, std::size_t n);
std::size_t and3_popcount(const Word* a, const Word* b, const Word* c, std::size_t n);
void or_assign(Word* dst, const Word* src, std::size_t n);
bool is_subset(const Word* a, const Word* b, std::size_t n);
const KernelTable& table();
}  // namespace neon
#endif

// Every table usable on this CPU, scalar first.
std::vector<const KernelTable*> available();

// The dispatched table; resolved once.
const KernelTable& active();

}  // namespace cdindex::simd
