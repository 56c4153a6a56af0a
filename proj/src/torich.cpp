#include "cdindex/torich.hpp"

#include <algorithm>

#include "cdindex/errors.hpp"
#include "cdindex/flagcd.hpp"
#include "parallel.hpp"

namespace cdindex {

namespace {

std::size_t u(Index x) { return static_cast<std::size_t>(x); }

const UniPolynomial& one_minus_x() {
  static const UniPolynomial p({1, -1});
  return p;
}

UniPolynomial xm1(int k) { return UniPolynomial::x_minus_one_power(k); }

void require_lower_eulerian(const GradedPoset& p) {
  if (!p.is_graded() || !p.has_min() || !is_lower_eulerian(p))
    fail(ErrorKind::NotLowerEulerian, "poset is not lower Eulerian");
}

void require_eulerian(const GradedPoset& p) {
  if (!p.is_graded() || !p.has_min() || !p.has_max() || !is_eulerian(p))
    fail(ErrorKind::NotLowerEulerian, "poset is not Eulerian");
}

// Targets in rank order, ties by index.
std::vector<Index> rank_order(const GradedPoset& t) {
  std::vector<Index> order(t.size());
  for (std::size_t k = 0; k < order.size(); ++k) order[k] = static_cast<Index>(k);
  std::stable_sort(order.begin(), order.end(), [&](Index a, Index b) { return t.rank(a) < t.rank(b); });
  return order;
}

}  // namespace

std::vector<UniPolynomial> lower_g_table(const GradedPoset& p) {
  if (!p.has_min()) fail(ErrorKind::RequiresMin, "g-polynomials need 0̂");
  if (!p.is_graded()) fail(ErrorKind::NotGraded, "g-polynomials need a graded poset");
  std::vector<UniPolynomial> g(p.size());
  for (Index s : p.linear_extension()) {
    const int r = p.rank(s);
    if (r == 0) {
      g[u(s)] = UniPolynomial::constant(1);
      continue;
    }
    UniPolynomial f;
    p.down(s).for_each([&](std::size_t t) {
      if (static_cast<Index>(t) != s) f += g[t] * xm1(r - 1 - p.rank(static_cast<Index>(t)));
    });
    g[u(s)] = truncate(one_minus_x() * f, (r - 1) / 2);
  }
  return g;
}

UniPolynomial g_poly(const GradedPoset& p) {
  require_eulerian(p);
  const int n = p.rank();
  const auto table = lower_g_table(p);
  const UniPolynomial& g = table[u(p.max())];
  if (n > 0 && 2 * g.degree() >= n) fail(ErrorKind::IdentityViolated, "g-polynomial degree bound fails");
  UniPolynomial rhs;
  for (std::size_t s = 0; s < p.size(); ++s) rhs += table[s] * xm1(n - p.rank(static_cast<Index>(s)));
  if (reverse(g, n) != rhs)
    fail(ErrorKind::IdentityViolated, "g-polynomial " + to_text(g) + " does not satisfy its defining identity");
  return g;
}

UniPolynomial h_poly(const GradedPoset& p) {
  if (!p.is_graded()) fail(ErrorKind::NotGraded, "h-polynomial needs a graded poset");
  return h_poly(p, p.rank());
}

UniPolynomial h_poly(const GradedPoset& p, int n) {
  require_lower_eulerian(p);
  const auto table = lower_g_table(p);
  UniPolynomial sum;
  for (std::size_t s = 0; s < p.size(); ++s) sum += table[s] * xm1(n - p.rank(static_cast<Index>(s)));
  return reverse(sum, n);
}

UniPolynomial toric_h(const GradedPoset& p) {
  if (!p.has_min() || !p.has_max()) fail(ErrorKind::RequiresBounds, "toric h needs 0̂ and 1̂");
  if (!p.is_graded()) fail(ErrorKind::NotGraded, "toric h needs a graded poset");
  const int n = p.rank();
  if (n == 0) return UniPolynomial::constant(1);
  const auto table = lower_g_table(p);
  UniPolynomial f;
  for (std::size_t s = 0; s < p.size(); ++s)
    if (static_cast<Index>(s) != p.max()) f += table[s] * xm1(n - 1 - p.rank(static_cast<Index>(s)));
  if (is_eulerian(p) && !f.is_palindrome(n - 1))
    fail(ErrorKind::IdentityViolated, "toric h " + to_text(f) + " of an Eulerian poset is not symmetric");
  return f;
}

ToricPair toric_pair(const GradedPoset& p) {
  ToricPair tp;
  tp.g = g_poly(p);
  tp.h = toric_h(p);
  tp.n = p.rank();
  return tp;
}

const UniPolynomial& IntervalG::g(Index lo, Index hi) {
  auto key = std::make_pair(lo, hi);
  auto it = g_.find(key);
  if (it == g_.end()) it = g_.emplace(key, g_poly(p_.interval(lo, hi))).first;
  return it->second;
}

const UniPolynomial& IntervalG::g_dual(Index lo, Index hi) {
  auto key = std::make_pair(lo, hi);
  auto it = gd_.find(key);
  if (it == gd_.end()) it = gd_.emplace(key, g_poly(dual(p_.interval(lo, hi)))).first;
  return it->second;
}

// ---- local h ---------------------------------------------------------------

LocalHTable local_h(const SubdivisionMap& m, int jobs) {
  const auto& rep = m.strong_formal();
  if (!rep.ok)
    fail(ErrorKind::ValidationRequired,
         "map is not a strong formal subdivision" + (rep.failures.empty() ? "" : ": " + rep.failures.front()));
  const auto& s = m.source();
  const auto& t = m.target();
  IntervalG ig(t);

  std::vector<UniPolynomial> h(t.size()), rec(t.size()), expl(t.size());
  detail::parallel_for(t.size(), jobs, [&](std::size_t sg) {
    const Index sigma = static_cast<Index>(sg);
    h[sg] = h_poly(s.subposet(m.preimage_ideal(sigma)), t.rank(sigma));
  });
  for (Index sigma : t.linear_extension()) {
    UniPolynomial r = h[u(sigma)];
    UniPolynomial e;
    t.down(sigma).for_each([&](std::size_t ti) {
      const Index tau = static_cast<Index>(ti);
      if (tau != sigma) r -= rec[ti] * ig.g(tau, sigma);
      UniPolynomial term = h[ti] * ig.g_dual(tau, sigma);
      if ((t.rank(sigma) - t.rank(tau)) % 2 != 0) term *= Integer(-1);
      e += term;
    });
    rec[u(sigma)] = std::move(r);
    expl[u(sigma)] = std::move(e);
    if (rec[u(sigma)] != expl[u(sigma)])
      fail(ErrorKind::ConventionMismatch, "local h at '" + t.id(sigma) + "': recursive " +
                                              to_text(rec[u(sigma)]) + ", explicit " + to_text(expl[u(sigma)]));
  }

  LocalHTable table;
  for (Index sigma : rank_order(t)) table.rows.push_back({sigma, t.id(sigma), t.rank(sigma), expl[u(sigma)]});
  if (t.has_max()) {
    table.has_total = true;
    table.total = h[u(t.max())];
    UniPolynomial sum;
    for (std::size_t sg = 0; sg < t.size(); ++sg) sum += expl[sg] * ig.g(static_cast<Index>(sg), t.max());
    if (sum != table.total)
      fail(ErrorKind::ConventionMismatch, "local h rows sum to " + to_text(sum) + ", not " + to_text(table.total));
  }
  return table;
}

// ---- Bayer-Ehrenborg morphism -------------------------------------------------

namespace {

UniPolynomial kappa_word(const std::string& w, char zero_letter) {
  if (w.find(zero_letter) != std::string::npos) return {};
  return xm1(static_cast<int>(w.size()));
}

int cd_degree(const std::string& w) { return static_cast<int>(w.size() + std::count(w.begin(), w.end(), 'd')); }

}  // namespace

const UniPolynomial& Morphism::f_word(const std::string& w) {
  if (auto it = f_.find(w); it != f_.end()) return it->second;
  UniPolynomial out = kappa_word(w, 'b');
  for (std::size_t i = 0; i < w.size(); ++i) {
    UniPolynomial k = kappa_word(w.substr(i + 1), 'b');
    if (!k.is_zero()) out += g_word(w.substr(0, i)) * k;
  }
  return f_.emplace(w, std::move(out)).first->second;
}

const UniPolynomial& Morphism::g_word(const std::string& w) {
  if (auto it = g_.find(w); it != g_.end()) return it->second;
  UniPolynomial out = truncate(one_minus_x() * f_word(w), static_cast<int>(w.size()) / 2);
  return g_.emplace(w, std::move(out)).first->second;
}

const UniPolynomial& Morphism::f_cd_word(const std::string& w) {
  if (auto it = fcd_.find(w); it != fcd_.end()) return it->second;
  UniPolynomial out = kappa_word(w, 'd');
  for (std::size_t i = 0; i < w.size(); ++i) {
    const std::string pre = w.substr(0, i), suf = w.substr(i + 1);
    if (w[i] == 'c') {
      UniPolynomial k = kappa_word(suf, 'd');
      if (!k.is_zero()) out += g_cd_word(pre) * k * Integer(2);
    } else {
      UniPolynomial k1 = kappa_word(suf, 'd');
      if (!k1.is_zero()) out += g_cd_word(pre + "c") * k1;
      UniPolynomial k2 = kappa_word("c" + suf, 'd');
      if (!k2.is_zero()) out += g_cd_word(pre) * k2;
    }
  }
  return fcd_.emplace(w, std::move(out)).first->second;
}

const UniPolynomial& Morphism::g_cd_word(const std::string& w) {
  if (auto it = gcd_.find(w); it != gcd_.end()) return it->second;
  UniPolynomial out = truncate(one_minus_x() * f_cd_word(w), cd_degree(w) / 2);
  return gcd_.emplace(w, std::move(out)).first->second;
}

UniPolynomial Morphism::f(const AbPolynomial& p) {
  UniPolynomial out;
  for (const auto& [w, k] : p.terms()) out += f_word(w) * k;
  return out;
}

UniPolynomial Morphism::g(const AbPolynomial& p) {
  UniPolynomial out;
  for (const auto& [w, k] : p.terms()) out += g_word(w) * k;
  return out;
}

UniPolynomial Morphism::f(const CdPolynomial& p) {
  UniPolynomial out;
  for (const auto& [w, k] : p.terms()) out += f_cd_word(w) * k;
  return out;
}

UniPolynomial Morphism::g(const CdPolynomial& p) {
  UniPolynomial out;
  for (const auto& [w, k] : p.terms()) out += g_cd_word(w) * k;
  return out;
}

UniPolynomial morphism_f(const AbPolynomial& p) { return Morphism().f(p); }
UniPolynomial morphism_g(const AbPolynomial& p) { return Morphism().g(p); }

CorrespondenceReport verify_local_correspondence(const SubdivisionMap& m) {
  const auto& s = m.source();
  const auto& t = m.target();
  if (!m.strong_eulerian().ok) fail(ErrorKind::InvalidSubdivision, "map is not a strong Eulerian subdivision");
  if (!s.has_max() || !t.has_max() || !is_eulerian(s) || !is_eulerian(t))
    fail(ErrorKind::InvalidSubdivision, "correspondence needs Eulerian source and target");

  CorrespondenceReport rep;
  auto note = [&](std::string msg) {
    rep.ok = false;
    rep.failures.push_back(std::move(msg));
  };
  const LocalHTable table = local_h(m);
  Morphism mor;
  for (const auto& row : table.rows) {
    CorrespondenceRow c;
    c.sigma = row.sigma;
    c.id = row.id;
    c.ell = row.ell;
    c.f_local = mor.f(local_index(hat(m, row.sigma)).ab);
    const GradedPoset upper = t.interval(row.sigma, t.max());
    c.f_upper = mor.f(cd_index(upper));
    // At 1̂ the local ab-index vanishes while the local h of the whole source
    // need not; the decomposition below only sums over sigma < 1̂.
    if (row.sigma == t.max() ? !c.f_local.is_zero() : c.f_local != c.ell)
      note("at '" + c.id + "': f(local index) = " + to_text(c.f_local) + ", local h = " + to_text(c.ell));
    const UniPolynomial hu = toric_h(upper);
    if (c.f_upper != hu)
      note("at '" + c.id + "': f(upper cd-index) = " + to_text(c.f_upper) + ", toric h = " + to_text(hu));
    if (row.sigma != t.max()) rep.rhs += c.ell * c.f_upper;
    rep.rows.push_back(std::move(c));
  }
  rep.lhs = mor.f(ab_index(s));
  const UniPolynomial hs = toric_h(s);
  if (rep.lhs != hs) note("f(ab-index of the source) = " + to_text(rep.lhs) + ", toric h = " + to_text(hs));
  if (rep.lhs != rep.rhs) note("decomposition sums to " + to_text(rep.rhs) + ", expected " + to_text(rep.lhs));
  return rep;
}

}  // namespace cdindex
