#include <doctest.h>

#include "cdindex/complexes.hpp"
#include "cdindex/errors.hpp"
#include "cdindex/flagcd.hpp"
#include "support/fixtures.hpp"

using namespace cdindex;

namespace {

std::vector<long long> ints(const std::vector<Integer>& v) {
  std::vector<long long> out;
  for (const auto& k : v) out.push_back(static_cast<long long>(k));
  return out;
}

Face face(const SimplicialComplex& k, std::vector<std::string> ids) { return k.face_from_ids(ids); }

}  // namespace

TEST_CASE("face posets of small complexes") {
  CHECK(isomorphic(face_poset(make_simplex(2), false), boolean_algebra(3)));
  auto sq = face_poset(make_polygon(4), true);
  CHECK(isomorphic(sq, fixtures::square()));
  auto empty = face_poset(SimplicialComplex{}, false);
  CHECK(empty.size() == 1);
  CHECK(face_poset(make_boundary_simplex(3), true).rank() == 4);
}

TEST_CASE("order complex") {
  auto hex = order_complex(boolean_algebra(3));
  CHECK(hex.facets().size() == 6);
  CHECK(ints(f_vector(hex)) == std::vector<long long>{1, 6, 6});
  CHECK(order_complex(chain_poset(2)).facets().size() == 1);  // the single chain {c1}
  CHECK(f_vector(order_complex(chain_poset(1))).size() == 1);
  CHECK_THROWS_AS(order_complex(face_poset(make_polygon(4), false)), Error);
}

TEST_CASE("barycentric subdivision of the triangle") {
  auto b = barycentric_subdivision(make_simplex(2));
  CHECK(ints(f_vector(b.complex)) == std::vector<long long>{1, 7, 12, 6});
  CHECK(ints(h_vector(b.complex).h) == std::vector<long long>{1, 4, 1, 0});
  auto edge = barycentric_subdivision(make_simplex(1));
  CHECK(ints(f_vector(edge.complex)) == std::vector<long long>{1, 3, 2});
  auto vertex = barycentric_subdivision(make_simplex(0));
  CHECK(ints(f_vector(vertex.complex)) == std::vector<long long>{1, 1});
}

TEST_CASE("star and link") {
  auto oct = fixtures::octahedron_complex();
  auto st = star(oct, face(oct, {"1"}));
  CHECK(st.facets().size() == 4);
  auto lk = link(oct, face(oct, {"1"}));
  CHECK(lk.facets().size() == 4);
  CHECK(lk.dim() == 1);
  CHECK(ints(f_vector(link(oct, {}))) == ints(f_vector(oct)));
  auto tri = make_simplex(2);
  CHECK(star(tri, face(tri, {"1", "2", "3"})).facets().size() == 1);
  CHECK_THROWS_AS(link(tri, Face{0, 7}), Error);
}

TEST_CASE("f- and h-vectors") {
  CHECK(ints(h_vector(make_boundary_simplex(4)).h) == std::vector<long long>{1, 1, 1, 1, 1});
  CHECK(ints(h_vector(make_simplex(0)).h) == std::vector<long long>{1, 0});
  CHECK(ints(h_vector(fixtures::octahedron_complex()).h) == std::vector<long long>{1, 3, 3, 1});
  CHECK(ints(h_vector(fixtures::icosahedron_complex()).h) == std::vector<long long>{1, 9, 9, 1});
  CHECK_THROWS_AS(h_vector(SimplicialComplex::from_int_facets({{1, 2}, {3}})), Error);
  CHECK(ints(flag_to_h(boolean_algebra(3)).h) == std::vector<long long>{1, 4, 1});
  for (const auto& p : {fixtures::square(), fixtures::cube(), fixtures::prism(), fixtures::square_pyramid()})
    CHECK(flag_to_h(p) == h_vector(order_complex(p)));
}

TEST_CASE("reduced homology") {
  CHECK(reduced_betti(make_boundary_simplex(3)) == std::vector<long>{0, 0, 0, 1});
  auto solid = reduced_betti(make_simplex(2));
  CHECK(std::all_of(solid.begin(), solid.end(), [](long b) { return b == 0; }));
  CHECK(reduced_betti(SimplicialComplex::from_int_facets({{1}, {2}})) == std::vector<long>{0, 1});
  // reduced Euler-Poincare, both vectors indexed from dimension -1
  for (const auto& k : {fixtures::octahedron_complex(), make_polygon(6),
                        SimplicialComplex::from_int_facets({{1, 2, 4}, {2, 4, 5}, {2, 3, 5}, {3, 5, 6},
                                                            {1, 3, 6}, {1, 4, 6}})}) {
    const auto f = f_vector(k);
    const auto b = reduced_betti(k);
    long long chi = 0, bsum = 0;
    for (std::size_t i = 0; i < f.size(); ++i) chi += (i % 2 ? 1 : -1) * static_cast<long long>(f[i]);
    for (std::size_t i = 0; i < b.size(); ++i) bsum += (i % 2 ? 1 : -1) * b[i];
    CHECK(chi == bsum);
  }
}

TEST_CASE("Gorenstein predicates") {
  CHECK(is_gorenstein(fixtures::octahedron_complex()));
  CHECK(is_gorenstein(fixtures::icosahedron_complex()));
  CHECK(is_gorenstein(make_polygon(5)));
  CHECK_FALSE(is_gorenstein(SimplicialComplex::from_int_facets({{1, 2, 3}, {4, 5, 6}})));
  CHECK_FALSE(is_gorenstein(make_simplex(2)));
  // hexagon-like disc: six triangles around vertex 7
  auto disc = SimplicialComplex::from_int_facets(
      {{1, 2, 7}, {2, 3, 7}, {3, 4, 7}, {4, 5, 7}, {5, 6, 7}, {1, 6, 7}});
  CHECK(is_near_gorenstein(disc, pseudomanifold_boundary(disc)));
  CHECK(pseudomanifold_boundary(disc).facets().size() == 6);
  CHECK_FALSE(is_near_gorenstein(make_polygon(4), pseudomanifold_boundary(make_polygon(4))));
  CHECK_THROWS_AS(is_gorenstein(SimplicialComplex::from_int_facets({{1, 2, 3}, {3, 4}})), Error);
}

TEST_CASE("shelling verification and search") {
  auto sq = make_polygon(4);
  std::vector<Face> walk{face(sq, {"1", "2"}), face(sq, {"2", "3"}), face(sq, {"3", "4"}), face(sq, {"1", "4"})};
  CHECK(verify_shelling(sq, walk));
  std::vector<Face> jump{face(sq, {"1", "2"}), face(sq, {"3", "4"}), face(sq, {"2", "3"}), face(sq, {"1", "4"})};
  CHECK_FALSE(verify_shelling(sq, jump));

  auto st = make_stacked(3, 4);
  CHECK(verify_shelling(st.ball, st.order));
  // the third simplex of the stack meets the first only in an edge
  std::vector<Face> rev{st.order[0], st.order[2], st.order[1], st.order[3]};
  CHECK_FALSE(verify_shelling(st.ball, rev));

  for (const auto& k : {fixtures::octahedron_complex(), fixtures::icosahedron_complex(), make_boundary_simplex(4)}) {
    auto s = find_shelling(k, 0);
    REQUIRE(s.status == ShellingStatus::Found);
    CHECK(verify_shelling(k, s.order));
    auto t = find_shelling(k, 99);
    CHECK(t.status == ShellingStatus::Found);
    CHECK(verify_shelling(k, t.order));
  }
  // two triangles sharing only a vertex
  auto bowtie = SimplicialComplex::from_int_facets({{1, 2, 3}, {3, 4, 5}});
  CHECK(find_shelling(bowtie).status == ShellingStatus::Exhausted);
}

TEST_CASE("stacked polytopes") {
  auto st = make_stacked(3, 2);
  CHECK(ints(f_vector(st.boundary)) == std::vector<long long>{1, 5, 9, 6});
  CHECK(cd_index(face_poset(st.boundary, true)) == parse_cd("c^3 + 3*dc + 4*cd"));
  CHECK(cd_index(face_poset(st.boundary, true)) == three_polytope_cd(5, 6));
  for (int d = 2; d <= 5; ++d)
    for (int k = 1; k <= 5; ++k)
      for (std::uint64_t seed : {0ULL, 3ULL}) {
        CAPTURE(d);
        CAPTURE(k);
        CHECK(cd_index(face_poset(make_stacked(d, k, seed).boundary, true)) == stacked_cd(d, k));
      }
  CHECK_THROWS_AS(make_stacked(0, 1), Error);
  CHECK_THROWS_AS(stacked_cd(1, 2), Error);
}

TEST_CASE("shelling steps obey the increment formula") {
  for (const auto& k : {fixtures::octahedron_complex(), fixtures::icosahedron_complex(), make_boundary_simplex(4),
                        make_stacked(3, 5, 11).boundary, make_polygon(7)}) {
    auto s = find_shelling(k);
    REQUIRE(s.status == ShellingStatus::Found);
    auto steps = shelling_steps(k, s.order);
    CHECK(steps.size() == s.order.size() - 2);
    for (const auto& st : steps) {
      CAPTURE(st.step);
      CHECK(st.holds);
      CHECK(dominates(st.after, st.before));
    }
  }
  auto sq = make_polygon(4);
  std::vector<Face> jump{face(sq, {"1", "2"}), face(sq, {"3", "4"}), face(sq, {"2", "3"}), face(sq, {"1", "4"})};
  CHECK_THROWS_AS(shelling_steps(sq, jump), Error);
}

TEST_CASE("stacked upper bound on shellable spheres") {
  // coning a shellable (d-1)-sphere with m facets gives a shellable ball of m simplices
  for (const auto& k : {fixtures::octahedron_complex(), fixtures::icosahedron_complex(), make_boundary_simplex(3),
                        make_stacked(3, 6, 5).boundary, make_boundary_simplex(4)}) {
    const int d = k.dim() + 1;
    const int m = static_cast<int>(k.facets().size());
    CHECK(dominates(stacked_cd(d, m), cd_index(face_poset(k, true))));
  }
}
