#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "cdindex/complexes.hpp"
#include "cdindex/flagcd.hpp"
#include "cdindex/poset.hpp"

namespace cdindex {

struct ValidationReport {
  bool ok = true;
  std::vector<std::string> failures;  // capped; first failures only
};

// Order-preserving surjection from a subdivided poset onto its base, given
// per source element as the carrying target element. Validation results are
// computed on first use and cached; copies share the cache.
class SubdivisionMap {
 public:
  SubdivisionMap(GradedPoset source, GradedPoset target, std::vector<Index> carrier);
  // Every source id must appear; throws UnknownElement / InvalidSubdivision.
  static SubdivisionMap from_ids(GradedPoset source, GradedPoset target,
                                 const std::map<std::string, std::string>& carrier);

  const GradedPoset& source() const noexcept;
  const GradedPoset& target() const noexcept;
  Index carrier(Index x) const;
  const std::vector<Index>& carriers() const noexcept;

  // Source elements carried into [0̂, sigma].
  const Bitset& preimage_ideal(Index sigma) const;

  const ValidationReport& strong_eulerian() const;
  const ValidationReport& strong_formal() const;

 private:
  struct Data;
  std::shared_ptr<Data> data_;
};

// Basic map checks shared by both validations: order preserving and surjective.
ValidationReport validate_map_basics(const SubdivisionMap& m);
ValidationReport validate_strong_eulerian(const SubdivisionMap& m);
ValidationReport validate_strong_formal(const SubdivisionMap& m);

// Source restricted to the preimage of [0̂, F], over the target interval.
SubdivisionMap restrict(const SubdivisionMap& m, Index f);
SubdivisionMap restrict(const SubdivisionMap& m, const std::string& f_id);  // throws FaceNotFound
// P1 of the preimage of [0̂, sigma].
GradedPoset hat(const SubdivisionMap& m, Index sigma);

// ---- skeletal decomposition ------------------------------------------------

struct SkeletalTag {
  bool is_new = false;  // true: element of the source; false: of the target
  Index origin = -1;    // index in source (new) or target (old)
};

struct SkeletalPoset {
  GradedPoset poset;  // ids are "old:<target id>" / "new:<source id>"
  std::vector<SkeletalTag> tags;
};

struct SkeletalFamily {
  int n = 0;
  SubdivisionMap map;
  std::vector<SkeletalPoset> levels;     // levels[i] = Pi_i, 0 <= i <= n
  std::vector<std::vector<Index>> maps;  // maps[i] : Pi_{i+1} -> Pi_i, 0 <= i < n
};

// Requires a validated strong Eulerian map; throws InvalidSubdivision.
SkeletalFamily skeletal_family(const SubdivisionMap& m);

enum class FlagKind { Old, New, Mixed };
struct FlagClass {
  FlagKind kind = FlagKind::Old;
  int switch_rank = -1;  // -1 for old flags
};
// chain: element ids of Pi_i; throws InvalidChain.
FlagClass classify_flag(const SkeletalFamily& fam, int i, const std::vector<std::string>& chain);

struct TelescopeResult {
  bool ok = false;
  AbPolynomial lhs;  // Upsilon(Pi_i) - Upsilon(Pi_{i-1})
  AbPolynomial rhs;  // sum over rank-i sigma of local flag(sigma hat) * Upsilon([sigma, 1̂])
  std::string reason;
};
TelescopeResult verify_rank_telescoping(const SkeletalFamily& fam, int i);
// Builds the family first; an invalid map yields ok = false with the reason.
TelescopeResult verify_rank_telescoping(const SubdivisionMap& m, int i);

struct DecompositionRow {
  Index sigma = -1;
  std::string id;
  int rank = 0;
  LocalIndex local;    // of sigma hat
  CdPolynomial upper;  // cd-index of [sigma, 1̂]
  CdPolynomial term;   // local.cd * upper
};
struct Decomposition {
  std::vector<DecompositionRow> rows;  // ordered by rank, then target index
  CdPolynomial total;
  CdPolynomial source_cd;
};
// Requires a validated strong Eulerian map between Eulerian posets; asserts
// the total equals the source cd-index and that the top row vanishes. Rows
// are computed on up to `jobs` threads; the result does not depend on it.
Decomposition decompose_cd(const SubdivisionMap& m, int jobs = 1);

// ---- constructors ----------------------------------------------------------

// Carrier of a face of `fine` = the smallest face of `coarse` containing the
// carriers of its vertices. Vertex carriers map fine vertex ids to coarse
// faces (given as vertex id lists). with_top adjoins 1̂ to both face posets.
SubdivisionMap simplicial_subdivision_map(const SimplicialComplex& fine, const SimplicialComplex& coarse,
                                          const std::map<std::string, std::vector<std::string>>& vertex_carrier,
                                          bool with_top);
SubdivisionMap barycentric_map(const SimplicialComplex& k, bool with_top);
SubdivisionMap identity_map(const GradedPoset& p);
// An edge with t interior points, over the edge B2 (no 1̂ adjoined).
SubdivisionMap subdivided_edge_map(int t);

}  // namespace cdindex
