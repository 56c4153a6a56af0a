#include <doctest.h>

#include <random>

#include "cdindex/bitset.hpp"
#include "cdindex/simd/bitset_kernels.hpp"

using namespace cdindex;

TEST_CASE("every kernel table agrees with the scalar reference") {
  const auto tables = simd::available();
  REQUIRE(!tables.empty());
  CHECK(tables.front()->name == "scalar");
  std::mt19937_64 rng(2024);
  for (int round = 0; round < 1000; ++round) {
    const std::size_t n = rng() % 20;
    std::vector<simd::Word> a(n), b(n), c(n);
    for (std::size_t i = 0; i < n; ++i) {
      a[i] = rng();
      b[i] = rng() & rng();
      c[i] = rng() | rng();
    }
    if (round % 4 == 0) b = a;  // exercise the subset path
    const auto& ref = simd::scalar::table();
    for (const auto* t : tables) {
      CAPTURE(t->name);
      CHECK(t->and_popcount(a.data(), b.data(), n) == ref.and_popcount(a.data(), b.data(), n));
      CHECK(t->and3_popcount(a.data(), b.data(), c.data(), n) == ref.and3_popcount(a.data(), b.data(), c.data(), n));
      CHECK(t->is_subset(a.data(), b.data(), n) == ref.is_subset(a.data(), b.data(), n));
      CHECK(t->is_subset(b.data(), c.data(), n) == ref.is_subset(b.data(), c.data(), n));
      auto d1 = a, d2 = a;
      t->or_assign(d1.data(), c.data(), n);
      ref.or_assign(d2.data(), c.data(), n);
      CHECK(d1 == d2);
    }
  }
}

TEST_CASE("scalar reference against bit loops") {
  std::mt19937_64 rng(7);
  for (int round = 0; round < 200; ++round) {
    const std::size_t n = 1 + rng() % 5;
    std::vector<simd::Word> a(n), b(n);
    for (auto& w : a) w = rng();
    for (auto& w : b) w = rng();
    std::size_t expect = 0;
    for (std::size_t i = 0; i < n * 64; ++i)
      if ((a[i / 64] >> (i % 64) & 1U) && (b[i / 64] >> (i % 64) & 1U)) ++expect;
    CHECK(simd::scalar::and_popcount(a.data(), b.data(), n) == expect);
  }
}

TEST_CASE("bitset operations") {
  Bitset x(130), y(130);
  for (std::size_t i : {0, 5, 64, 129}) x.set(i);
  for (std::size_t i : {5, 64, 100}) y.set(i);
  CHECK(x.count() == 4);
  CHECK(x.and_count(y) == 2);
  CHECK((x & y).indices() == std::vector<int>{5, 64});
  CHECK((x | y).count() == 5);
  CHECK_FALSE(x.subset_of(y));
  CHECK((x & y).subset_of(y));
  x.reset(0);
  CHECK_FALSE(x.test(0));
  CHECK(Bitset(10).any() == false);
}
