#include "cdindex/flagcd.hpp"

#include <functional>

#include "cdindex/errors.hpp"

namespace cdindex {

namespace {

int proper_rank(const GradedPoset& p) {
  if (!p.has_min() || !p.has_max()) fail(ErrorKind::RequiresBounds, "flag vectors need 0̂ and 1̂");
  if (!p.is_graded()) fail(ErrorKind::NotGraded, "flag vectors need a graded poset");
  const int n = std::max(p.rank() - 1, 0);
  if (n > 62) fail(ErrorKind::RankTooLarge, "rank " + std::to_string(p.rank()) + " exceeds 63");
  return n;
}

}  // namespace

FlagVector flag_f(const GradedPoset& p) {
  const int n = proper_rank(p);
  FlagVector f{n, std::vector<Integer>(std::size_t{1} << n, 0)};
  f.values[0] = 1;
  if (n == 0) return f;

  std::vector<std::vector<Index>> level(static_cast<std::size_t>(n) + 1);
  std::vector<int> pos(p.size(), -1);
  for (int r = 1; r <= n; ++r) {
    level[static_cast<std::size_t>(r)] = p.elements_of_rank(r);
    for (std::size_t i = 0; i < level[static_cast<std::size_t>(r)].size(); ++i)
      pos[static_cast<std::size_t>(level[static_cast<std::size_t>(r)][i])] = static_cast<int>(i);
  }
  // succ[x][r] = level positions of the elements of rank r above x
  std::vector<std::vector<std::vector<int>>> succ(p.size());
  for (int r = 1; r <= n; ++r)
    for (Index x : level[static_cast<std::size_t>(r)]) {
      auto& row = succ[static_cast<std::size_t>(x)];
      row.assign(static_cast<std::size_t>(n) + 1, {});
      p.up(x).for_each([&](std::size_t y) {
        const int ry = p.rank(static_cast<Index>(y));
        if (ry > r && ry <= n) row[static_cast<std::size_t>(ry)].push_back(pos[y]);
      });
    }

  // Extend chains one rank at a time; each mask is produced exactly once, by
  // appending its top rank to the chain counts of the mask below it.
  std::function<void(std::uint64_t, int, const std::vector<Integer>&)> grow =
      [&](std::uint64_t mask, int r, const std::vector<Integer>& cnt) {
        const auto& lv = level[static_cast<std::size_t>(r)];
        for (int s = r + 1; s <= n; ++s) {
          std::vector<Integer> next(level[static_cast<std::size_t>(s)].size(), 0);
          for (std::size_t i = 0; i < lv.size(); ++i) {
            if (cnt[i] == 0) continue;
            for (int j : succ[static_cast<std::size_t>(lv[i])][static_cast<std::size_t>(s)])
              next[static_cast<std::size_t>(j)] += cnt[i];
          }
          Integer total = 0;
          for (const auto& k : next) total += k;
          const std::uint64_t m = mask | (std::uint64_t{1} << (s - 1));
          f.values[m] = total;
          if (total != 0) grow(m, s, next);
        }
      };
  for (int r = 1; r <= n; ++r) {
    std::vector<Integer> ones(level[static_cast<std::size_t>(r)].size(), 1);
    const std::uint64_t m = std::uint64_t{1} << (r - 1);
    f.values[m] = static_cast<long>(ones.size());
    grow(m, r, ones);
  }
  return f;
}

FlagVector flag_h_from_f(const FlagVector& f) {
  FlagVector h = f;
  // subset Moebius transform: beta(S) = sum_{T subset S} (-1)^{|S-T|} alpha(T)
  for (int i = 0; i < f.n; ++i) {
    const std::uint64_t bit = std::uint64_t{1} << i;
    for (std::uint64_t m = 0; m < h.values.size(); ++m)
      if (m & bit) h.values[m] -= h.values[m ^ bit];
  }
  return h;
}

FlagVector flag_h(const GradedPoset& p) { return flag_h_from_f(flag_f(p)); }

std::string rank_word(int n, std::uint64_t mask) {
  std::string w(static_cast<std::size_t>(n), 'a');
  for (int i = 0; i < n; ++i)
    if (mask >> i & 1U) w[static_cast<std::size_t>(i)] = 'b';
  return w;
}

AbPolynomial flag_word_polynomial(const FlagVector& v) {
  AbPolynomial out;
  for (std::uint64_t m = 0; m < v.values.size(); ++m) out.add_term(rank_word(v.n, m), v.values[m]);
  return out;
}

AbPolynomial flag_polynomial(const GradedPoset& p) { return flag_word_polynomial(flag_f(p)); }
AbPolynomial ab_index(const GradedPoset& p) { return flag_word_polynomial(flag_h(p)); }

CdPolynomial cd_index(const GradedPoset& p) {
  if (p.has_min() && p.has_max() && p.is_graded()) {
    if (p.rank() == 0 || is_eulerian(p)) return to_cd(ab_index(p));
    if (is_near_eulerian(p)) return local_index(p).cd + cd_index(boundary(p));
  }
  return to_cd(ab_index(p));
}

LocalIndex local_index(const GradedPoset& p) {
  if (!p.is_graded() || !p.has_min() || !p.has_max())
    fail(ErrorKind::NotNearEulerian, "local index needs a graded poset with 0̂ and 1̂");
  // {0̂} and {0̂ < 1̂} = P1({0̂}) both carry the local index 1.
  if (p.rank() <= 1) return {AbPolynomial::one(), CdPolynomial::one(), AbPolynomial::one()};

  const auto semi = semisuspension_with_tau(p);
  const GradedPoset bd = semi.poset.interval(semi.poset.min(), semi.tau);
  const AbPolynomial c = AbPolynomial::letter_first() + AbPolynomial::letter_second();

  LocalIndex li;
  li.ab = ab_index(semi.poset) - ab_index(bd) * c;
  li.cd = to_cd(li.ab);
  li.flag = flag_polynomial(p) - flag_polynomial(adjoin_max(bd));
  if (substitute(li.ab, c, AbPolynomial::letter_second()) != li.flag)
    fail(ErrorKind::IdentityViolated, "local flag polynomial disagrees with the local ab-index");
  return li;
}

CdPolynomial polygon_cd(int n) {
  if (n < 3) fail(ErrorKind::DomainError, "a polygon needs at least 3 sides");
  return CdPolynomial::monomial("cc") + CdPolynomial::monomial("d", n - 2);
}

CdPolynomial three_polytope_cd(int f0, int f2) {
  if (f0 < 4 || f2 < 4) fail(ErrorKind::DomainError, "a 3-polytope has at least 4 vertices and facets");
  return CdPolynomial::monomial("ccc") + CdPolynomial::monomial("dc", f0 - 2) +
         CdPolynomial::monomial("cd", f2 - 2);
}

}  // namespace cdindex
