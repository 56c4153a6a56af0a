#pragma once

#include <cstdint>
#include <vector>

#include "cdindex/ncpoly.hpp"
#include "cdindex/poset.hpp"

namespace cdindex {

// Values indexed by rank subsets S of {1..n}; bit i-1 of the mask is rank i.
struct FlagVector {
  int n = 0;
  std::vector<Integer> values;

  const Integer& operator[](std::uint64_t mask) const { return values[mask]; }
};

// p graded with 0̂ and 1̂ of rank n+1. A rank-0 poset is read as n = 0 with
// the single value 1.
FlagVector flag_f(const GradedPoset& p);
FlagVector flag_h(const GradedPoset& p);
FlagVector flag_h_from_f(const FlagVector& f);

// u_S has b exactly at the positions in S.
std::string rank_word(int n, std::uint64_t mask);
AbPolynomial flag_word_polynomial(const FlagVector& v);

AbPolynomial flag_polynomial(const GradedPoset& p);  // Upsilon
AbPolynomial ab_index(const GradedPoset& p);         // Psi

// Eulerian: to_cd(Psi). Near-Eulerian (and not Eulerian): local cd-index plus
// the cd-index of the boundary, a non-homogeneous polynomial.
CdPolynomial cd_index(const GradedPoset& p);

struct LocalIndex {
  AbPolynomial ab;    // Psi of the semisuspension minus Psi of the boundary times (a+b)
  CdPolynomial cd;
  AbPolynomial flag;  // Upsilon_P minus Upsilon of P1(boundary)
};
// p near-Eulerian; throws NotNearEulerian. Both the ab route and the flag
// route are computed and must agree (IdentityViolated otherwise).
LocalIndex local_index(const GradedPoset& p);

CdPolynomial polygon_cd(int n);
CdPolynomial three_polytope_cd(int f0, int f2);

}  // namespace cdindex
