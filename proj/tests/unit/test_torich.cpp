#include <doctest.h>

#include <random>

#include "cdindex/complexes.hpp"
#include "cdindex/errors.hpp"
#include "cdindex/flagcd.hpp"
#include "cdindex/torich.hpp"
#include "support/fixtures.hpp"

using namespace cdindex;

namespace {

UniPolynomial geometric(int d) {
  UniPolynomial p;
  for (int i = 0; i <= d; ++i) p += UniPolynomial::x_power(i);
  return p;
}

}  // namespace

TEST_CASE("g of boolean algebras is 1") {
  for (int n = 0; n <= 8; ++n) CHECK(g_poly(boolean_algebra(n)) == UniPolynomial::constant(1));
}

TEST_CASE("h of a simplex is a geometric series") {
  for (int d = 0; d <= 7; ++d) {
    CHECK(h_poly(remove_max(boolean_algebra(d + 1))) == geometric(d));
    CHECK(toric_h(boolean_algebra(d + 1)) == geometric(d));
  }
}

TEST_CASE("toric h values") {
  CHECK(to_text(toric_h(boolean_algebra(3))) == "1 + x + x^2");
  CHECK(to_text(toric_h(fixtures::square())) == "1 + 2*x + x^2");
  CHECK(to_text(g_poly(fixtures::square())) == "1 + x");
  auto cube = toric_h(fixtures::cube());
  CHECK(cube.is_palindrome(3));
  CHECK(to_text(cube) == "1 + 5*x + 5*x^2 + x^3");
  CHECK(to_text(g_poly(fixtures::cube())) == "1 + 4*x");
  CHECK_THROWS_AS(g_poly(fixtures::chain(3)), Error);
}

TEST_CASE("h of an Eulerian poset with its top equals g") {
  for (const auto& p : {fixtures::square(), fixtures::cube(), fixtures::prism(), boolean_algebra(4)})
    CHECK(h_poly(p) == g_poly(p));
}

TEST_CASE("toric h of simplicial face posets is the classical h-vector") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const int nv = 3 + static_cast<int>(rng() % 5);
    const int d = 1 + static_cast<int>(rng() % 3);
    if (d > nv) continue;
    std::vector<std::vector<int>> facets;
    const int k = 1 + static_cast<int>(rng() % 6);
    for (int j = 0; j < k; ++j) {
      std::vector<int> vs(static_cast<std::size_t>(nv));
      for (int v = 0; v < nv; ++v) vs[static_cast<std::size_t>(v)] = v + 1;
      std::shuffle(vs.begin(), vs.end(), rng);
      vs.resize(static_cast<std::size_t>(d));
      facets.push_back(vs);
    }
    auto c = SimplicialComplex::from_int_facets(facets);
    auto hv = h_vector(c);
    CHECK(h_poly(face_poset(c, false)) == UniPolynomial(hv.h));
  }
}

TEST_CASE("local h of the barycentric triangle") {
  auto t = local_h(fixtures::barycentric_triangle());
  REQUIRE(t.has_total);
  CHECK(to_text(t.total) == "1 + 4*x + x^2");
  for (const auto& row : t.rows) {
    INFO(row.id);
    if (row.rank == 0) CHECK(to_text(row.ell) == "1");
    if (row.rank == 1) CHECK(row.ell.is_zero());
    if (row.rank == 2) CHECK(to_text(row.ell) == "x");
    if (row.rank == 3) CHECK(to_text(row.ell) == "x + x^2");
  }
}

TEST_CASE("local h of a subdivided edge") {
  for (int t = 0; t <= 5; ++t) {
    auto table = local_h(subdivided_edge_map(t));
    CHECK(table.rows.back().rank == 2);
    CHECK(table.rows.back().ell == UniPolynomial::x_power(1) * Integer(t));
  }
}

TEST_CASE("local h of a trivial subdivision vanishes") {
  for (int n = 1; n <= 5; ++n) {
    auto table = local_h(identity_map(boolean_algebra(n)));
    for (const auto& row : table.rows)
      if (row.rank > 0) CHECK(row.ell.is_zero());
  }
}

TEST_CASE("local h is symmetric") {
  for (const auto& [name, m] : fixtures::eulerian_subdivisions()) {
    for (const auto& row : local_h(m).rows) {
      INFO(name << " " << row.id);
      CHECK(row.ell.is_palindrome(row.rank));
    }
  }
  for (const auto& row : local_h(fixtures::barycentric_triangle()).rows) CHECK(row.ell.is_palindrome(row.rank));
}

TEST_CASE("local h needs a strong formal map") {
  auto good = fixtures::barycentric_triangle();
  auto c = good.carriers();
  c[static_cast<std::size_t>(good.source().index_of("{{1}}"))] = good.target().index_of("{2}");
  CHECK_THROWS_AS(local_h(SubdivisionMap(good.source(), good.target(), c)), Error);
}

TEST_CASE("morphism base cases") {
  CHECK(morphism_f(AbPolynomial::one()) == UniPolynomial::constant(1));
  CHECK(morphism_g(AbPolynomial::one()) == UniPolynomial::constant(1));
  CHECK(to_text(morphism_f(ab_index(boolean_algebra(3)))) == "1 + x + x^2");
  CHECK(morphism_f(expand_cd(parse_cd("c^2 + 2*d"))) == toric_h(fixtures::square()));
}

TEST_CASE("morphism maps ab-indices to toric h and g") {
  std::vector<GradedPoset> posets{fixtures::square(), fixtures::cube(), fixtures::prism(), fixtures::octahedron(),
                                  fixtures::square_pyramid(), fixtures::chain(3), fixtures::chain(4),
                                  boolean_algebra(5), adjoin_max(fixtures::square()), pyramid(fixtures::square())};
  for (const auto& p : posets) {
    CHECK(morphism_f(ab_index(p)) == toric_h(p));
    if (is_eulerian(p)) CHECK(morphism_g(ab_index(p)) == g_poly(p));
  }
}

TEST_CASE("morphism evaluated on cd-words agrees with the expansion") {
  Morphism m;
  for (int deg = 0; deg <= 9; ++deg)
    for (const auto& w : cd_words(deg)) {
      auto p = CdPolynomial::monomial(w);
      INFO(w);
      CHECK(m.f(p) == m.f(expand_cd(p)));
      CHECK(m.g(p) == m.g(expand_cd(p)));
    }
}

TEST_CASE("local correspondence on every subdivision fixture") {
  for (const auto& [name, m] : fixtures::eulerian_subdivisions()) {
    auto rep = verify_local_correspondence(m);
    INFO(name << (rep.failures.empty() ? "" : ": " + rep.failures.front()));
    CHECK(rep.ok);
    CHECK(rep.lhs == toric_h(m.source()));
  }
}

TEST_CASE("hexagon over triangle totals") {
  auto rep = verify_local_correspondence(fixtures::barycentric_triangle_boundary());
  CHECK(rep.ok);
  CHECK(to_text(rep.lhs) == "1 + 4*x + x^2");
}
