#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "cdindex/ncpoly.hpp"
#include "cdindex/poset.hpp"
#include "cdindex/subdivision.hpp"

namespace cdindex {

// g([0̂, sigma]) for every element, by the general recursion
//   F(Q) = sum_{tau < 1̂_Q} g([0̂, tau]) (x-1)^{rk Q - 1 - rho(tau)},
//   g(Q) = U_{<= floor((rk Q - 1)/2)} [(1 - x) F(Q)],  g = 1 at rank 0.
// Needs a graded poset with 0̂; no Eulerian condition is imposed.
std::vector<UniPolynomial> lower_g_table(const GradedPoset& p);

// g of an Eulerian poset; the result is checked against
//   x^n g(1/x) = sum_{sigma in P} g([0̂, sigma]) (x-1)^{n - rho(sigma)}.
UniPolynomial g_poly(const GradedPoset& p);  // throws NotLowerEulerian, IdentityViolated

// x^n h(P, 1/x) = sum_{sigma in P} g([0̂, sigma]) (x-1)^{n - rho(sigma)}, P lower
// Eulerian of rank n (or of the given rank n).
UniPolynomial h_poly(const GradedPoset& p);  // throws NotLowerEulerian
UniPolynomial h_poly(const GradedPoset& p, int n);

// F(P) of the recursion above. For Eulerian P this is h(P minus 1̂), which is
// asserted, together with its symmetry.
UniPolynomial toric_h(const GradedPoset& p);  // throws RequiresBounds, NotGraded

struct ToricPair {
  UniPolynomial g;
  UniPolynomial h;
  int n = 0;
};
ToricPair toric_pair(const GradedPoset& p);  // Eulerian p

// g and g-of-dual for closed intervals of one poset, memoized by (lo, hi).
class IntervalG {
 public:
  explicit IntervalG(const GradedPoset& p) : p_(p) {}
  const UniPolynomial& g(Index lo, Index hi);
  const UniPolynomial& g_dual(Index lo, Index hi);

 private:
  const GradedPoset& p_;
  std::map<std::pair<Index, Index>, UniPolynomial> g_, gd_;
};

// ---- local h ---------------------------------------------------------------

struct LocalHRow {
  Index sigma = -1;
  std::string id;
  int rank = 0;
  UniPolynomial ell;
};
struct LocalHTable {
  std::vector<LocalHRow> rows;  // ordered by rank, then target index
  UniPolynomial total;          // h of the whole source, when the target has 1̂
  bool has_total = false;
};
// ell_sigma = sum_{tau <= sigma} h(Gamma_tau) (-1)^{rho(sigma) - rho(tau)} g([tau, sigma]^*),
// checked against the bottom-up solution of h(Gamma_sigma) = sum_{tau <= sigma} ell_tau g([tau, sigma]).
// The h(Gamma_sigma) are computed on up to `jobs` threads.
LocalHTable local_h(const SubdivisionMap& m, int jobs = 1);  // throws ValidationRequired, ConventionMismatch

// ---- Bayer-Ehrenborg morphism -------------------------------------------------

// f(v) = kappa(v) + sum g(v_(1)) kappa(v_(2)),  g(v) = U_{<= floor(deg v / 2)} [(1 - x) f(v)],
// over the deletion coproduct, kappa(a) = x - 1, kappa(b) = 0. Memoized by word
// for the lifetime of the object.
class Morphism {
 public:
  UniPolynomial f(const AbPolynomial& p);
  UniPolynomial g(const AbPolynomial& p);
  // Same maps evaluated directly in the c,d letters: C(c) = 2 (1 x 1),
  // C(d) = c x 1 + 1 x c, kappa(c) = x - 1, kappa(d) = 0.
  UniPolynomial f(const CdPolynomial& p);
  UniPolynomial g(const CdPolynomial& p);

  const UniPolynomial& f_word(const std::string& w);
  const UniPolynomial& g_word(const std::string& w);
  const UniPolynomial& f_cd_word(const std::string& w);
  const UniPolynomial& g_cd_word(const std::string& w);

 private:
  std::map<std::string, UniPolynomial> f_, g_, fcd_, gcd_;
};

UniPolynomial morphism_f(const AbPolynomial& p);
UniPolynomial morphism_g(const AbPolynomial& p);

struct CorrespondenceRow {
  Index sigma = -1;
  std::string id;
  UniPolynomial f_local;  // f(local ab-index of sigma hat)
  UniPolynomial ell;      // local h of the restriction to sigma
  UniPolynomial f_upper;  // f(cd-index of [sigma, 1̂]) = h([sigma, 1̂))
};
struct CorrespondenceReport {
  bool ok = true;
  std::vector<CorrespondenceRow> rows;
  UniPolynomial lhs;  // f(Psi of the source) = h(source minus 1̂)
  UniPolynomial rhs;  // sum over sigma < 1̂ of ell * f_upper
  std::vector<std::string> failures;
};
// Needs a strong Eulerian map between Eulerian posets (InvalidSubdivision).
CorrespondenceReport verify_local_correspondence(const SubdivisionMap& m);

}  // namespace cdindex
