#include <doctest.h>

#include "cdindex/errors.hpp"
#include "cdindex/flagcd.hpp"
#include "cdindex/subdivision.hpp"
#include "support/fixtures.hpp"

using namespace cdindex;

TEST_CASE("tetrahedron edge split validates both ways") {
  auto m = fixtures::tetra_edge_subdivision();
  CHECK(m.strong_eulerian().ok);
  CHECK(m.strong_formal().ok);
}

TEST_CASE("tetrahedron edge split decomposition rows") {
  auto m = fixtures::tetra_edge_subdivision();
  auto d = decompose_cd(m);
  CHECK(to_text(d.total) == "c^3 + 3*dc + 4*cd");
  CHECK(d.total == d.source_cd);
  int e_rows = 0, f_rows = 0;
  for (const auto& row : d.rows) {
    if (row.local.cd.is_zero()) continue;
    if (row.rank == 0) {
      CHECK(to_text(row.local.cd) == "1");
      CHECK(to_text(row.upper) == "c^3 + 2*dc + 2*cd");
    } else if (row.rank == 2) {
      ++e_rows;
      CHECK(row.id == "{2,4}");
      CHECK(to_text(row.local.cd) == "d");
      CHECK(to_text(row.upper) == "c");
    } else if (row.rank == 3) {
      ++f_rows;
      CHECK(to_text(row.local.cd) == "cd");
      CHECK(to_text(row.upper) == "1");
    } else {
      FAIL("unexpected nonzero row " << row.id);
    }
  }
  CHECK(e_rows == 1);
  CHECK(f_rows == 2);
}

TEST_CASE("telescoping holds at every level") {
  for (const auto& [name, m] : fixtures::eulerian_subdivisions()) {
    auto fam = skeletal_family(m);
    for (int i = 1; i <= fam.n; ++i) {
      auto r = verify_rank_telescoping(fam, i);
      INFO(name << " level " << i << ": " << r.reason);
      CHECK(r.ok);
    }
  }
}

TEST_CASE("level differences telescope to the whole change") {
  for (const auto& [name, m] : fixtures::eulerian_subdivisions()) {
    auto fam = skeletal_family(m);
    AbPolynomial sum;
    for (int i = 1; i <= fam.n; ++i) sum = sum + verify_rank_telescoping(fam, i).lhs;
    INFO(name);
    CHECK(sum == flag_polynomial(m.source()) - flag_polynomial(m.target()));
  }
}

TEST_CASE("skeletal posets of the edge split") {
  auto m = fixtures::tetra_edge_subdivision();
  auto fam = skeletal_family(m);
  REQUIRE(fam.n == 4);
  CHECK(isomorphic(fam.levels[0].poset, m.target()));
  CHECK(isomorphic(fam.levels[1].poset, m.target()));
  CHECK(isomorphic(fam.levels[3].poset, m.source()));
  CHECK(isomorphic(fam.levels[4].poset, m.source()));
  // Pi_2: edge {2,4} split into two, triangles still whole.
  const auto& p2 = fam.levels[2].poset;
  CHECK(p2.elements_of_rank(1).size() == 5);
  CHECK(p2.elements_of_rank(2).size() == 7);
  CHECK(p2.elements_of_rank(3).size() == 4);
  CHECK(is_eulerian(p2));
}

TEST_CASE("identity subdivision keeps every level") {
  auto m = identity_map(fixtures::cube());
  auto fam = skeletal_family(m);
  for (const auto& lv : fam.levels) CHECK(isomorphic(lv.poset, m.target()));
  auto d = decompose_cd(m);
  int nonzero = 0;
  for (const auto& row : d.rows)
    if (!row.local.cd.is_zero()) {
      ++nonzero;
      CHECK(row.rank == 0);
    }
  CHECK(nonzero == 1);
  CHECK(to_text(d.total) == "c^3 + 6*dc + 4*cd");
}

TEST_CASE("barycentric triangle boundary decomposes to the hexagon") {
  auto m = fixtures::barycentric_triangle_boundary();
  CHECK(m.strong_eulerian().ok);
  auto d = decompose_cd(m);
  CHECK(d.total == polygon_cd(6));
  auto fam = skeletal_family(m);
  // vertices stay, edges are split at level 2
  CHECK(isomorphic(fam.levels[1].poset, m.target()));
  CHECK(fam.levels[2].poset.elements_of_rank(1).size() == 6);
}

TEST_CASE("classify flags in the middle level") {
  auto fam = skeletal_family(fixtures::tetra_edge_subdivision());
  auto c = classify_flag(fam, 2, {"new:{5}", "new:{2,5}"});
  CHECK(c.kind == FlagKind::New);
  CHECK(c.switch_rank == 2);
  c = classify_flag(fam, 2, {"new:{5}", "new:{2,5}", "old:{1,2,4}"});
  CHECK(c.kind == FlagKind::Mixed);
  CHECK(c.switch_rank == 2);
  c = classify_flag(fam, 1, {"new:{1}", "old:{1,2}"});
  CHECK(c.kind == FlagKind::Mixed);
  CHECK(c.switch_rank == 1);
  c = classify_flag(fam, 0, {"old:{1}", "old:{1,2}", "old:{1,2,3}"});
  CHECK(c.kind == FlagKind::Old);
  CHECK_THROWS_AS(classify_flag(fam, 2, {"old:{1,2,3}", "new:{1}"}), Error);
  CHECK_THROWS_AS(classify_flag(fam, 2, {"new:{9}"}), Error);
}

TEST_CASE("every new or mixed flag switches at a rank at most the level") {
  auto fam = skeletal_family(fixtures::barycentric_tetra_boundary());
  for (int i = 0; i <= fam.n; ++i) {
    const auto& p = fam.levels[static_cast<std::size_t>(i)].poset;
    enumerate_chains(p, [&](const Chain& ch) {
      std::vector<std::string> ids;
      for (Index x : ch) ids.push_back(p.id(x));
      auto c = classify_flag(fam, i, ids);
      if (c.kind != FlagKind::Old) CHECK(c.switch_rank <= i);
    });
  }
}

TEST_CASE("restriction to the split edge is a two-edge path") {
  auto m = fixtures::tetra_edge_subdivision();
  auto r = restrict(m, "{2,4}");
  CHECK(r.source().size() == 6);
  CHECK(r.target().size() == 4);
  CHECK(r.strong_eulerian().ok);
  auto v = restrict(m, "{1}");
  CHECK(v.source().size() == 2);
  auto whole = restrict(m, m.target().id(m.target().max()));
  CHECK(whole.source().size() == m.source().size());
  CHECK_THROWS_AS(restrict(m, "{7}"), Error);
}

TEST_CASE("restriction commutes with skeletal posets") {
  auto m = fixtures::tetra_edge_subdivision();
  const auto& t = m.target();
  auto fam = skeletal_family(m);
  for (std::size_t f = 0; f < t.size(); ++f) {
    if (static_cast<Index>(f) == t.max()) continue;
    auto r = restrict(m, static_cast<Index>(f));
    auto rfam = skeletal_family(r);
    for (int i = 0; i <= rfam.n; ++i) {
      // restrict Pi_i to the elements carried into [0̂, F]
      const auto& lv = fam.levels[static_cast<std::size_t>(i)];
      std::vector<Index> keep;
      for (std::size_t k = 0; k < lv.tags.size(); ++k) {
        const auto& tag = lv.tags[k];
        const Index img = tag.is_new ? m.carrier(tag.origin) : tag.origin;
        if (t.leq(img, static_cast<Index>(f))) keep.push_back(static_cast<Index>(k));
      }
      INFO(t.id(static_cast<Index>(f)) << " level " << i);
      CHECK(isomorphic(lv.poset.subposet(keep), rfam.levels[static_cast<std::size_t>(i)].poset));
    }
  }
}

TEST_CASE("mutated carriers fail validation") {
  auto good = fixtures::tetra_edge_subdivision();
  auto carrier = good.carriers();
  const auto& s = good.source();
  const auto& t = good.target();
  // send vertex 5 to vertex 2 instead of the edge {2,4}
  carrier[static_cast<std::size_t>(s.index_of("{5}"))] = t.index_of("{2}");
  SubdivisionMap bad(s, t, carrier);
  CHECK_FALSE(bad.strong_eulerian().ok);
  CHECK_FALSE(bad.strong_formal().ok);
  CHECK_THROWS_AS(decompose_cd(bad), Error);
  auto r = verify_rank_telescoping(bad, 2);
  CHECK_FALSE(r.ok);
  CHECK_FALSE(r.reason.empty());
}

TEST_CASE("rank-collapsing map names the failing element") {
  // B2 onto a 2-chain: both atoms to the single atom.
  auto src = boolean_algebra(2);
  auto tgt = chain_poset(2);
  std::map<std::string, std::string> c{{"{}", "c0"}, {"{1}", "c1"}, {"{2}", "c1"}, {"{1,2}", "c2"}};
  auto m = SubdivisionMap::from_ids(src, tgt, c);
  auto rep = m.strong_eulerian();
  REQUIRE_FALSE(rep.ok);
  bool named = false;
  for (const auto& f : rep.failures)
    if (f.find("'c1'") != std::string::npos) named = true;
  CHECK(named);
}

TEST_CASE("strong formal fixtures without 1̂") {
  CHECK(fixtures::barycentric_triangle().strong_formal().ok);
  CHECK(fixtures::barycentric_triangle().strong_eulerian().ok);
  for (int t = 0; t <= 5; ++t) {
    auto m = subdivided_edge_map(t);
    CHECK(m.strong_formal().ok);
    CHECK(m.strong_eulerian().ok);
  }
  CHECK(identity_map(boolean_algebra(3)).strong_formal().ok);
}

TEST_CASE("strong Eulerian fixtures are strong formal and monotone") {
  for (const auto& [name, m] : fixtures::eulerian_subdivisions()) {
    INFO(name);
    CHECK(m.strong_eulerian().ok);
    CHECK(m.strong_formal().ok);
    CHECK(dominates(cd_index(m.source()), cd_index(m.target())));
  }
}
