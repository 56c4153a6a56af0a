#include <doctest.h>

#include "cdindex/errors.hpp"
#include "cdindex/flagcd.hpp"
#include "cdindex/poset.hpp"
#include "support/fixtures.hpp"

using namespace cdindex;

namespace {

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an error");
  return ErrorKind::Parse;
}

}  // namespace

TEST_CASE("build rejects bad input") {
  CHECK(kind_of([] { GradedPoset::build({"a", "b"}, {{"a", "b"}, {"b", "a"}}); }) == ErrorKind::CycleDetected);
  CHECK(kind_of([] { GradedPoset::build({"a"}, {{"a", "z"}}); }) == ErrorKind::UnknownElement);
  CHECK(kind_of([] { GradedPoset::build({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}, {"c", "a"}}); }) ==
        ErrorKind::CycleDetected);
}

TEST_CASE("ranks, bounds and gradedness") {
  auto sq = fixtures::square();
  CHECK(sq.is_graded());
  CHECK(sq.rank() == 3);
  CHECK(sq.rank(sq.index_of("e12")) == 2);
  CHECK(sq.elements_of_rank(1).size() == 4);
  CHECK(sq.id(sq.min()) == "0");
  CHECK(sq.id(sq.max()) == "1");
  // a redundant cover relation is reduced away
  auto p = GradedPoset::build({"0", "x", "1"}, {{"0", "x"}, {"x", "1"}, {"0", "1"}});
  CHECK(p.covers_up(p.index_of("0")).size() == 1);
  // 0 < x < y < 1 and 0 < z < 1: not graded
  auto ng = GradedPoset::build({"0", "x", "y", "z", "1"}, {{"0", "x"}, {"x", "y"}, {"y", "1"}, {"0", "z"}, {"z", "1"}});
  CHECK_FALSE(ng.is_graded());
  CHECK(kind_of([&] { (void)ng.rank(); }) == ErrorKind::NotGraded);
  auto two_min = GradedPoset::build({"a", "b", "c"}, {{"a", "c"}, {"b", "c"}});
  CHECK_FALSE(two_min.has_min());
  CHECK(two_min.minimal_elements().size() == 2);
  CHECK(kind_of([&] { (void)two_min.min(); }) == ErrorKind::RequiresBounds);
}

TEST_CASE("order queries and intervals") {
  auto sq = fixtures::square();
  const Index v1 = sq.index_of("v1"), e12 = sq.index_of("e12"), e23 = sq.index_of("e23");
  CHECK(sq.leq(v1, e12));
  CHECK_FALSE(sq.leq(v1, e23));
  CHECK_FALSE(sq.comparable(e12, e23));
  auto iv = sq.interval(v1, sq.max());
  CHECK(iv.size() == 4);
  CHECK(isomorphic(iv, boolean_algebra(2)));
  CHECK(sq.find("nope") == std::nullopt);
  CHECK(sq.fresh_id("v1") != "v1");
  auto lin = sq.linear_extension();
  std::vector<int> pos(sq.size());
  for (std::size_t i = 0; i < lin.size(); ++i) pos[static_cast<std::size_t>(lin[i])] = static_cast<int>(i);
  for (auto [lo, hi] : sq.cover_pairs()) CHECK(pos[static_cast<std::size_t>(lo)] < pos[static_cast<std::size_t>(hi)]);
}

TEST_CASE("Eulerian, lower Eulerian and near-Eulerian") {
  CHECK(is_eulerian(fixtures::square()));
  CHECK(is_eulerian(fixtures::cube()));
  CHECK(is_eulerian(boolean_algebra(5)));
  CHECK_FALSE(is_eulerian(chain_poset(3)));
  CHECK(is_eulerian(chain_poset(1)));
  CHECK(is_lower_eulerian(face_poset(make_simplex(3), false)));
  CHECK(is_lower_eulerian(face_poset(make_polygon(5), false)));
  CHECK_FALSE(is_lower_eulerian(chain_poset(2)));
  CHECK(is_near_eulerian(remove_max(boolean_algebra(3))) == false);
  // Eulerian minus one coatom
  auto b3 = boolean_algebra(3);
  std::vector<Index> keep;
  const auto coatoms = b3.covers_down(b3.max());
  for (std::size_t x = 0; x < b3.size(); ++x)
    if (static_cast<Index>(x) != coatoms.front()) keep.push_back(static_cast<Index>(x));
  auto near = b3.subposet(keep);
  CHECK(is_near_eulerian(near));
  CHECK(isomorphic(semisuspension(near), b3));
  CHECK(kind_of([] { (void)is_eulerian(remove_max(boolean_algebra(2))); }) == ErrorKind::RequiresBounds);
}

TEST_CASE("lattices") {
  auto b3 = boolean_algebra(3);
  CHECK(is_lattice(b3));
  CHECK(is_lattice(fixtures::cube()));
  auto oct = fixtures::octahedron();
  CHECK(is_lattice(oct));
  const Index x = b3.index_of("{1}"), y = b3.index_of("{2}");
  CHECK(b3.id(lattice_join(b3, x, y)) == "{1,2}");
  CHECK(b3.id(lattice_meet(b3, x, y)) == "{}");
  // two atoms both below two coatoms
  auto bowtie = GradedPoset::build({"0", "a", "b", "c", "d", "1"},
                                   {{"0", "a"}, {"0", "b"}, {"a", "c"}, {"a", "d"}, {"b", "c"}, {"b", "d"}, {"c", "1"}, {"d", "1"}});
  CHECK_FALSE(is_lattice(bowtie));
  CHECK(kind_of([&] { (void)lattice_join(bowtie, bowtie.index_of("a"), bowtie.index_of("b")); }) ==
        ErrorKind::NotALattice);
}

TEST_CASE("chain enumeration") {
  auto sq = fixtures::square();
  CHECK(count_chains(sq) == 17);
  std::size_t seen = 0;
  bool first_empty = false;
  enumerate_chains(sq, [&](const Chain& c) {
    if (seen++ == 0) first_empty = c.empty();
  });
  CHECK(seen == 17);
  CHECK(first_empty);
  CHECK(count_chains(boolean_algebra(3)) == 1 + 6 + 6);
}

TEST_CASE("constructive operators") {
  auto b2 = boolean_algebra(2);
  CHECK(join(b2, b2).rank() == 3);
  CHECK(cd_index(join(b2, b2)) == parse_cd("c^2"));
  CHECK(cd_index(join(fixtures::square(), fixtures::square())) == parse_cd("c^4 + 2*dc^2 + 2*c^2d + 4*d^2"));
  CHECK(isomorphic(suspension(face_poset(make_polygon(4), true)), face_poset(fixtures::octahedron_complex(), true)) ==
        false);
  CHECK(cd_index(suspension(fixtures::square())) == cd_index(fixtures::square()) * CdPolynomial::letter_first());
  CHECK(cd_index(pyramid(fixtures::square())) == cd_index(fixtures::square_pyramid()));
  CHECK(isomorphic(dual(boolean_algebra(4)), boolean_algebra(4)));
  CHECK(isomorphic(dual(fixtures::cube()), fixtures::octahedron()));
  CHECK(remove_max(fixtures::square()).size() == 9);
  CHECK(adjoin_max(remove_max(fixtures::square())).size() == 10);
  CHECK(isomorphic(boundary(fixtures::square()), remove_max(fixtures::square())));
  auto ss = semisuspension_with_tau(face_poset(SimplicialComplex::from_int_facets({{1, 2}, {2, 3}}), true));
  CHECK(ss.poset.id(ss.tau) != "");
  CHECK(isomorphic(ss.poset, face_poset(make_polygon(3), true)));
  CHECK(kind_of([] { (void)semisuspension(chain_poset(3)); }) == ErrorKind::NotNearEulerian);
}

TEST_CASE("isomorphism") {
  CHECK(isomorphic(fixtures::cube(), face_lattice_from_int_facets({{1, 2, 4, 3}, {5, 6, 8, 7}, {1, 2, 6, 5},
                                                                   {3, 4, 8, 7}, {1, 3, 7, 5}, {2, 4, 8, 6}})));
  CHECK_FALSE(isomorphic(fixtures::cube(), fixtures::octahedron()));
  CHECK_FALSE(isomorphic(fixtures::prism(), fixtures::square_pyramid()));
  CHECK_FALSE(isomorphic(boolean_algebra(3), chain_poset(3)));
}
