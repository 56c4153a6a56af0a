#include <cstdlib>
#include <string_view>

#include "cdindex/simd/bitset_kernels.hpp"

namespace cdindex::simd {
namespace {

bool cpu_has_avx2() {
#if defined(CDINDEX_HAVE_AVX2_KERNELS) && (defined(__GNUC__) || defined(__clang__))
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

const KernelTable& resolve() {
  const auto tables = available();
  if (const char* forced = std::getenv("CDINDEX_SIMD")) {
    for (const KernelTable* t : tables)
      if (t->name == std::string_view(forced)) return *t;
  }
  return *tables.back();
}

}  // namespace

std::vector<const KernelTable*> available() {
  std::vector<const KernelTable*> out{&scalar::table()};
#if defined(CDINDEX_HAVE_AVX2_KERNELS)
  if (cpu_has_avx2()) out.push_back(&avx2::table());
#endif
#if defined(CDINDEX_HAVE_NEON_KERNELS)
  out.push_back(&neon::table());
#endif
  return out;
}

const KernelTable& active() {
  static const KernelTable& t = resolve();
  return t;
}

}  // namespace cdindex::simd
