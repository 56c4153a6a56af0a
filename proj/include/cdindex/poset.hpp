#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "cdindex/bitset.hpp"

namespace cdindex {

using ElementId = std::string;
using Index = int;

// A finite poset given by its cover relation. The order is closed eagerly into
// per-element bitset rows so that `leq` is a bit test and interval counts are
// a masked popcount. Values are immutable once built.
//
// Gradedness is checked at build time but a non-graded poset is still a valid
// value; rank-dependent operations throw NotGraded on it.
class GradedPoset {
 public:
  // Cover pairs are (lower, upper). Throws CycleDetected, UnknownElement.
  static GradedPoset build(std::vector<ElementId> elements,
                           const std::vector<std::pair<ElementId, ElementId>>& covers);

  // Same, over indices into `elements`. Pairs need not be a transitive
  // reduction: any generating relation is accepted and reduced.
  static GradedPoset from_relation(std::vector<ElementId> elements,
                                   const std::vector<std::pair<Index, Index>>& less);

  // `leq(i, j)` must be a partial order (reflexive, transitive) on indices.
  static GradedPoset from_order(std::vector<ElementId> elements,
                                const std::function<bool(Index, Index)>& leq);

  std::size_t size() const noexcept { return ids_.size(); }
  const ElementId& id(Index x) const { return ids_[static_cast<std::size_t>(x)]; }
  const std::vector<ElementId>& ids() const noexcept { return ids_; }
  std::optional<Index> find(std::string_view id) const;
  Index index_of(std::string_view id) const;  // throws UnknownElement

  bool leq(Index x, Index y) const { return up_[static_cast<std::size_t>(x)].test(static_cast<std::size_t>(y)); }
  bool less(Index x, Index y) const { return x != y && leq(x, y); }
  bool comparable(Index x, Index y) const { return leq(x, y) || leq(y, x); }

  // Rows of the closed order: up(x) = {y : x <= y}, down(x) = {y : y <= x}.
  const Bitset& up(Index x) const { return up_[static_cast<std::size_t>(x)]; }
  const Bitset& down(Index x) const { return down_[static_cast<std::size_t>(x)]; }

  const std::vector<Index>& covers_up(Index x) const { return cover_up_[static_cast<std::size_t>(x)]; }
  const std::vector<Index>& covers_down(Index x) const { return cover_down_[static_cast<std::size_t>(x)]; }
  std::vector<std::pair<Index, Index>> cover_pairs() const;

  // Elements in a topological order (lower before upper).
  const std::vector<Index>& linear_extension() const noexcept { return topo_; }

  bool is_graded() const noexcept { return graded_; }
  int rank(Index x) const;          // throws NotGraded
  int rank() const;                 // length of the poset; throws NotGraded
  std::vector<Index> elements_of_rank(int r) const;

  bool has_min() const noexcept { return min_.has_value(); }
  bool has_max() const noexcept { return max_.has_value(); }
  Index min() const;  // throws RequiresBounds
  Index max() const;  // throws RequiresBounds
  std::vector<Index> minimal_elements() const;
  std::vector<Index> maximal_elements() const;

  // Elements of even / odd rank, for parity counts over intervals.
  const Bitset& even_rank_mask() const;
  const Bitset& odd_rank_mask() const;

  // Induced subposet on the given elements (order inherited).
  GradedPoset subposet(const std::vector<Index>& keep) const;
  GradedPoset subposet(const Bitset& keep) const;
  // Closed interval [lo, hi] as a poset in its own right.
  GradedPoset interval(Index lo, Index hi) const;

  // Fresh id not already used in this poset, derived from `stem`.
  ElementId fresh_id(std::string_view stem) const;

 private:
  GradedPoset() = default;
  void finalize();  // expects ids_, cover lists set; computes everything else

  std::vector<ElementId> ids_;
  std::unordered_map<ElementId, Index> index_;
  std::vector<std::vector<Index>> cover_up_;
  std::vector<std::vector<Index>> cover_down_;
  std::vector<Bitset> up_;
  std::vector<Bitset> down_;
  std::vector<Index> topo_;
  std::vector<int> rank_;
  bool graded_ = false;
  int length_ = -1;
  std::optional<Index> min_;
  std::optional<Index> max_;
  Bitset even_;
  Bitset odd_;
};

// A nondegenerate chain: strictly increasing, containing neither 0̂ nor 1̂.
using Chain = std::vector<Index>;

// Structural predicates.
bool is_eulerian(const GradedPoset& p);        // throws RequiresBounds
bool is_lower_eulerian(const GradedPoset& p);  // throws RequiresMin / NotGraded
bool is_near_eulerian(const GradedPoset& p);
bool is_lattice(const GradedPoset& p);         // throws RequiresBounds
Index lattice_join(const GradedPoset& p, Index x, Index y);  // throws NotALattice
Index lattice_meet(const GradedPoset& p, Index x, Index y);  // throws NotALattice

// Visits every nondegenerate chain exactly once, the empty chain first.
void enumerate_chains(const GradedPoset& p, const std::function<void(const Chain&)>& visit);
std::size_t count_chains(const GradedPoset& p);

// Constructive operators.
GradedPoset join(const GradedPoset& p, const GradedPoset& q);
GradedPoset suspension(const GradedPoset& p);
GradedPoset pyramid(const GradedPoset& p);
GradedPoset adjoin_max(const GradedPoset& p);
GradedPoset dual(const GradedPoset& p);
GradedPoset remove_max(const GradedPoset& p);

// Near-Eulerian machinery. The semisuspension adds a coatom covering every y
// whose upper interval [y, 1̂] has exactly three elements.
struct Semisuspension {
  GradedPoset poset;
  Index tau;  // the added coatom, as an index into `poset`
};
Semisuspension semisuspension_with_tau(const GradedPoset& p);  // throws NotNearEulerian
GradedPoset semisuspension(const GradedPoset& p);
// Eulerian p: p minus 1̂. Near-Eulerian p: P1([0̂, tau)).
GradedPoset boundary(const GradedPoset& p);

// Isomorphism test by rank/degree colour refinement plus backtracking. Meant
// for the small posets the tests compare; exponential in the worst case.
bool isomorphic(const GradedPoset& p, const GradedPoset& q);

// Standard families.
GradedPoset boolean_algebra(int n);
GradedPoset chain_poset(int length);  // 0̂ = c0 < c1 < ... < c_length

}  // namespace cdindex
