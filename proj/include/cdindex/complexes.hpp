#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "cdindex/ncpoly.hpp"
#include "cdindex/poset.hpp"

namespace cdindex {

// Sorted vertex indices.
using Face = std::vector<int>;

// Abstract simplicial complex stored by its facets. The empty face is always
// present, so a complex without facets is {∅}.
class SimplicialComplex {
 public:
  SimplicialComplex() : SimplicialComplex(std::vector<std::string>{}, {}) {}

  // Vertex ids are taken from the facets (plus `extra_vertices`, which become
  // isolated points); non-maximal input facets are dropped.
  static SimplicialComplex from_facets(const std::vector<std::vector<std::string>>& facets,
                                       const std::vector<std::string>& extra_vertices = {});
  // Integer vertex labels, printed in decimal.
  static SimplicialComplex from_int_facets(const std::vector<std::vector<int>>& facets);

  const std::vector<std::string>& vertices() const noexcept { return vertices_; }
  const std::vector<Face>& facets() const noexcept { return facets_; }
  // Every face, the empty face first, ordered by size then lexicographically.
  const std::vector<Face>& faces() const noexcept { return faces_; }
  std::optional<std::size_t> face_index(const Face& f) const;
  bool contains(const Face& f) const { return face_index(f).has_value(); }

  int dim() const noexcept { return dim_; }
  bool is_pure() const noexcept { return pure_; }

  // "{v1,v2}", with "{}" for the empty face.
  std::string face_id(const Face& f) const;
  Face face_from_ids(const std::vector<std::string>& ids) const;  // throws FaceNotFound
  int vertex_index(const std::string& id) const;                   // throws FaceNotFound

 private:
  SimplicialComplex(std::vector<std::string> vertices, std::vector<Face> facets);

  std::vector<std::string> vertices_;
  std::unordered_map<std::string, int> vindex_;
  std::vector<Face> facets_;
  std::vector<Face> faces_;
  std::map<Face, std::size_t> face_pos_;
  int dim_ = -1;
  bool pure_ = true;
};

struct HVector {
  int d = 0;  // dimension + 1
  std::vector<Integer> h;
  bool operator==(const HVector&) const = default;
};

// 0̂ is the empty face, rank = dim + 1; with_max adjoins a top named "top".
GradedPoset face_poset(const SimplicialComplex& k, bool with_max);
// Vertices are the proper elements of p, faces its nondegenerate chains.
SimplicialComplex order_complex(const GradedPoset& p);

// Face lattice of a polytope given by the vertex sets of its facets: all
// intersections of facets, the empty face, and a top element "top".
GradedPoset face_lattice_from_facets(const std::vector<std::vector<std::string>>& facets);
GradedPoset face_lattice_from_int_facets(const std::vector<std::vector<int>>& facets);

struct Barycentric {
  SimplicialComplex complex;   // vertices named by the faces of the input
  std::vector<Face> carrier;   // carrier[i] = face of the input carrying complex.faces()[i]
};
Barycentric barycentric_subdivision(const SimplicialComplex& k);

SimplicialComplex star(const SimplicialComplex& k, const Face& f);  // throws FaceNotFound
SimplicialComplex link(const SimplicialComplex& k, const Face& f);  // throws FaceNotFound
// Closure of the codimension-one faces lying in exactly one facet.
SimplicialComplex pseudomanifold_boundary(const SimplicialComplex& k);

std::vector<Integer> f_vector(const SimplicialComplex& k);  // f_{-1}, f_0, ..., f_dim
HVector h_vector(const SimplicialComplex& k);               // throws NotPure
HVector flag_to_h(const GradedPoset& p);

// Reduced Betti numbers over Q; entry i is dimension i - 1, from -1 to dim.
std::vector<long> reduced_betti(const SimplicialComplex& k);
bool is_homology_sphere(const SimplicialComplex& k, int d);
bool is_acyclic(const SimplicialComplex& k);
bool is_gorenstein(const SimplicialComplex& k);                                        // throws NotPure
bool is_near_gorenstein(const SimplicialComplex& k, const SimplicialComplex& boundary);  // throws NotPure

// order lists facets (vertex index sets) in shelling order.
bool verify_shelling(const SimplicialComplex& k, const std::vector<Face>& order);
enum class ShellingStatus { Found, Exhausted, Cutoff };
struct ShellingSearch {
  ShellingStatus status = ShellingStatus::Exhausted;
  std::vector<Face> order;
  std::size_t nodes = 0;
};
ShellingSearch find_shelling(const SimplicialComplex& k, std::uint64_t seed = 0,
                             std::size_t node_limit = 1'000'000);

// Generators.
SimplicialComplex make_simplex(int d);           // the full d-simplex on 1..d+1
SimplicialComplex make_boundary_simplex(int d);  // its boundary
SimplicialComplex make_polygon(int n);           // n-cycle
GradedPoset make_cube3();                        // face lattice of the 3-cube
GradedPoset make_boolean(int n);

struct Stacked {
  SimplicialComplex boundary;  // the stacked polytope's boundary complex
  SimplicialComplex ball;      // the triangulation by k d-simplices
  std::vector<Face> order;     // d-simplices in gluing order (a shelling of the ball)
};
// k d-simplices glued facet to facet. Seed 0 always stacks onto the most
// recently created boundary facet; other seeds pick a pseudo-random one.
Stacked make_stacked(int d, int k, std::uint64_t seed = 0);

// k * Phi(boundary of the d-simplex) - (k - 1) * Phi(boundary of the
// (d-1)-simplex) * c, the cd-index of any stacked d-polytope built from k
// simplices. d >= 2, k >= 1.
CdPolynomial stacked_cd(int d, int k);

// One step of a shelling F_1..F_m of a pure complex. `before` and `after` are
// the local cd-indices of the face posets (1̂ adjoined) of F_1..F_i and
// F_1..F_{i+1}; gamma is F_{i+1} intersected with the earlier facets.
struct ShellingStep {
  int step = 0;  // i, 1-based
  Face facet;    // F_{i+1}
  SimplicialComplex gamma;
  CdPolynomial before, after;
  CdPolynomial gamma_local;     // local cd-index of gamma
  CdPolynomial gamma_boundary;  // cd-index of the boundary of gamma
  // after - before == gamma_local * c + gamma_boundary * d
  bool holds = false;
};
// Steps i = 1..m-2 of a verified shelling. Throws NotPure, DomainError when
// `order` is not a shelling, NotNearEulerian when a prefix is not a ball.
std::vector<ShellingStep> shelling_steps(const SimplicialComplex& k, const std::vector<Face>& order);

}  // namespace cdindex
