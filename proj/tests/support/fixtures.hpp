#pragma once

// Hand-built posets, complexes and subdivisions shared by the unit and
// acceptance tests.

#include <string>
#include <vector>

#include "cdindex/complexes.hpp"
#include "cdindex/poset.hpp"
#include "cdindex/subdivision.hpp"

namespace fixtures {

using namespace cdindex;

inline GradedPoset square() {
  return GradedPoset::build(
      {"0", "v1", "v2", "v3", "v4", "e12", "e23", "e34", "e41", "1"},
      {{"0", "v1"}, {"0", "v2"}, {"0", "v3"}, {"0", "v4"},
       {"v1", "e12"}, {"v2", "e12"}, {"v2", "e23"}, {"v3", "e23"},
       {"v3", "e34"}, {"v4", "e34"}, {"v4", "e41"}, {"v1", "e41"},
       {"e12", "1"}, {"e23", "1"}, {"e34", "1"}, {"e41", "1"}});
}

// 0̂ < c1 < ... < c_len as a chain, rank len.
inline GradedPoset chain(int len) { return chain_poset(len); }

inline GradedPoset polygon_poset(int n) { return face_poset(make_polygon(n), true); }

inline GradedPoset tetrahedron() { return face_poset(make_boundary_simplex(3), true); }

inline GradedPoset cube() { return make_cube3(); }

// Triangular bipyramid: apexes 4 and 5 over the triangle 1,2,3.
inline SimplicialComplex bipyramid_complex() {
  return SimplicialComplex::from_int_facets({{1, 2, 4}, {2, 3, 4}, {1, 3, 4}, {1, 2, 5}, {2, 3, 5}, {1, 3, 5}});
}
inline GradedPoset bipyramid() { return face_poset(bipyramid_complex(), true); }

inline SimplicialComplex octahedron_complex() {
  return SimplicialComplex::from_int_facets(
      {{1, 3, 5}, {1, 3, 6}, {1, 4, 5}, {1, 4, 6}, {2, 3, 5}, {2, 3, 6}, {2, 4, 5}, {2, 4, 6}});
}
inline GradedPoset octahedron() { return face_poset(octahedron_complex(), true); }

// Apex 1, upper ring 2..6, lower ring 7..11, apex 12.
inline SimplicialComplex icosahedron_complex() {
  return SimplicialComplex::from_int_facets(
      {{1, 2, 3},  {1, 3, 4},  {1, 4, 5},   {1, 5, 6},   {1, 2, 6},   {2, 3, 7},   {3, 4, 8},
       {4, 5, 9},  {5, 6, 10}, {2, 6, 11},  {3, 7, 8},   {4, 8, 9},   {5, 9, 10},  {6, 10, 11},
       {2, 7, 11}, {7, 8, 12}, {8, 9, 12},  {9, 10, 12}, {10, 11, 12}, {7, 11, 12}});
}

// Square pyramid, as a face lattice (non-simplicial).
inline GradedPoset square_pyramid() {
  return face_lattice_from_int_facets({{1, 2, 3, 4}, {1, 2, 5}, {2, 3, 5}, {3, 4, 5}, {1, 4, 5}});
}

// Triangular prism.
inline GradedPoset prism() {
  return face_lattice_from_int_facets({{1, 2, 3}, {4, 5, 6}, {1, 2, 5, 4}, {2, 3, 6, 5}, {1, 3, 6, 4}});
}

// Boundary of the tetrahedron on 1..4 with the edge {2,4} split by a new
// vertex 5; both face posets carry 1̂.
inline SimplicialComplex split_tetrahedron() {
  return SimplicialComplex::from_int_facets({{1, 2, 3}, {1, 3, 4}, {1, 2, 5}, {1, 4, 5}, {2, 3, 5}, {3, 4, 5}});
}
inline SubdivisionMap tetra_edge_subdivision() {
  return simplicial_subdivision_map(split_tetrahedron(), make_boundary_simplex(3),
                                    {{"1", {"1"}}, {"2", {"2"}}, {"3", {"3"}}, {"4", {"4"}}, {"5", {"2", "4"}}},
                                    true);
}

// Barycentric subdivision of the triangle boundary: a hexagon over a triangle.
inline SubdivisionMap barycentric_triangle_boundary() { return barycentric_map(make_boundary_simplex(2), true); }
inline SubdivisionMap barycentric_tetra_boundary() { return barycentric_map(make_boundary_simplex(3), true); }
// Barycentric subdivision of the solid triangle over B3 (no 1̂ adjoined).
inline SubdivisionMap barycentric_triangle() { return barycentric_map(make_simplex(2), false); }

// Boundary of a stacked polytope over the boundary of the simplex it started from:
// stacking one extra simplex onto facet {1,2,3} of the tetrahedron puts a vertex
// inside that triangle.
inline SubdivisionMap stellar_triangle_subdivision() {
  return simplicial_subdivision_map(
      SimplicialComplex::from_int_facets({{1, 2, 4}, {1, 3, 4}, {2, 3, 4}, {1, 2, 5}, {1, 3, 5}, {2, 3, 5}}),
      make_boundary_simplex(3),
      {{"1", {"1"}}, {"2", {"2"}}, {"3", {"3"}}, {"4", {"4"}}, {"5", {"1", "2", "3"}}}, true);
}

// Every strong Eulerian subdivision fixture between Eulerian posets.
inline std::vector<std::pair<std::string, SubdivisionMap>> eulerian_subdivisions() {
  return {{"tetra-edge", tetra_edge_subdivision()},
          {"bary-triangle-boundary", barycentric_triangle_boundary()},
          {"bary-tetra-boundary", barycentric_tetra_boundary()},
          {"stellar-triangle", stellar_triangle_subdivision()},
          {"identity-square", identity_map(square())},
          {"identity-cube", identity_map(cube())}};
}

}  // namespace fixtures
