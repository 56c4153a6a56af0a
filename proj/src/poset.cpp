#include "cdindex/poset.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "cdindex/errors.hpp"

namespace cdindex {

namespace {

std::size_t u(Index x) { return static_cast<std::size_t>(x); }

}  // namespace

GradedPoset GradedPoset::build(std::vector<ElementId> elements,
                               const std::vector<std::pair<ElementId, ElementId>>& covers) {
  std::unordered_map<ElementId, Index> idx;
  for (std::size_t i = 0; i < elements.size(); ++i) {
    if (!idx.emplace(elements[i], static_cast<Index>(i)).second)
      fail(ErrorKind::Parse, "duplicate element id '" + elements[i] + "'");
  }
  std::vector<std::pair<Index, Index>> rel;
  rel.reserve(covers.size());
  for (const auto& [lo, hi] : covers) {
    auto a = idx.find(lo), b = idx.find(hi);
    if (a == idx.end()) fail(ErrorKind::UnknownElement, lo);
    if (b == idx.end()) fail(ErrorKind::UnknownElement, hi);
    rel.emplace_back(a->second, b->second);
  }
  return from_relation(std::move(elements), rel);
}

GradedPoset GradedPoset::from_order(std::vector<ElementId> elements,
                                    const std::function<bool(Index, Index)>& leq) {
  std::vector<std::pair<Index, Index>> rel;
  const auto n = static_cast<Index>(elements.size());
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j)
      if (i != j && leq(i, j)) rel.emplace_back(i, j);
  return from_relation(std::move(elements), rel);
}

GradedPoset GradedPoset::from_relation(std::vector<ElementId> elements,
                                       const std::vector<std::pair<Index, Index>>& less) {
  GradedPoset p;
  p.ids_ = std::move(elements);
  const std::size_t n = p.ids_.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (!p.index_.emplace(p.ids_[i], static_cast<Index>(i)).second)
      fail(ErrorKind::Parse, "duplicate element id '" + p.ids_[i] + "'");
  }

  std::vector<std::vector<Index>> succ(n);
  std::vector<int> indeg(n, 0);
  {
    std::set<std::pair<Index, Index>> seen;
    for (auto [a, b] : less) {
      if (a < 0 || b < 0 || u(a) >= n || u(b) >= n) fail(ErrorKind::UnknownElement, "index out of range");
      if (a == b) fail(ErrorKind::CycleDetected, "self-loop at '" + p.ids_[u(a)] + "'");
      if (!seen.emplace(a, b).second) continue;
      succ[u(a)].push_back(b);
      ++indeg[u(b)];
    }
  }

  // Kahn's algorithm; ties broken by index so the extension is deterministic.
  std::vector<Index> ready;
  for (std::size_t i = 0; i < n; ++i)
    if (indeg[i] == 0) ready.push_back(static_cast<Index>(i));
  std::make_heap(ready.begin(), ready.end(), std::greater<>());
  while (!ready.empty()) {
    std::pop_heap(ready.begin(), ready.end(), std::greater<>());
    Index x = ready.back();
    ready.pop_back();
    p.topo_.push_back(x);
    for (Index y : succ[u(x)]) {
      if (--indeg[u(y)] == 0) {
        ready.push_back(y);
        std::push_heap(ready.begin(), ready.end(), std::greater<>());
      }
    }
  }
  if (p.topo_.size() != n) {
    for (std::size_t i = 0; i < n; ++i)
      if (indeg[i] > 0) fail(ErrorKind::CycleDetected, "cycle through '" + p.ids_[i] + "'");
  }

  p.up_.assign(n, Bitset(n));
  for (auto it = p.topo_.rbegin(); it != p.topo_.rend(); ++it) {
    Bitset& row = p.up_[u(*it)];
    row.set(u(*it));
    for (Index y : succ[u(*it)]) row |= p.up_[u(y)];
  }
  p.down_.assign(n, Bitset(n));
  for (std::size_t x = 0; x < n; ++x)
    p.up_[x].for_each([&](std::size_t y) { p.down_[y].set(x); });

  // A generating edge x<y is a cover iff [x,y] has exactly two elements; every
  // cover must appear among the generating edges.
  p.cover_up_.assign(n, {});
  p.cover_down_.assign(n, {});
  for (std::size_t x = 0; x < n; ++x) {
    for (Index y : succ[x]) {
      if (p.up_[x].and_count(p.down_[u(y)]) == 2) {
        p.cover_up_[x].push_back(y);
        p.cover_down_[u(y)].push_back(static_cast<Index>(x));
      }
    }
  }
  for (auto& v : p.cover_up_) std::sort(v.begin(), v.end());
  for (auto& v : p.cover_down_) std::sort(v.begin(), v.end());
  p.finalize();
  return p;
}

void GradedPoset::finalize() {
  const std::size_t n = ids_.size();
  rank_.assign(n, 0);
  for (Index x : topo_)
    for (Index y : cover_up_[u(x)]) rank_[u(y)] = std::max(rank_[u(y)], rank_[u(x)] + 1);

  graded_ = n > 0;
  for (std::size_t x = 0; x < n && graded_; ++x)
    for (Index y : cover_up_[x])
      if (rank_[u(y)] != rank_[x] + 1) graded_ = false;
  length_ = -1;
  for (Index m : maximal_elements()) {
    if (length_ >= 0 && rank_[u(m)] != length_) graded_ = false;
    length_ = std::max(length_, rank_[u(m)]);
  }

  const auto mins = minimal_elements();
  const auto maxs = maximal_elements();
  min_.reset();
  max_.reset();
  if (mins.size() == 1) min_ = mins.front();
  if (maxs.size() == 1) max_ = maxs.front();

  even_ = Bitset(n);
  odd_ = Bitset(n);
  for (std::size_t x = 0; x < n; ++x) (rank_[x] % 2 == 0 ? even_ : odd_).set(x);
}

std::optional<Index> GradedPoset::find(std::string_view id) const {
  auto it = index_.find(ElementId(id));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Index GradedPoset::index_of(std::string_view id) const {
  auto r = find(id);
  if (!r) fail(ErrorKind::UnknownElement, std::string(id));
  return *r;
}

std::vector<std::pair<Index, Index>> GradedPoset::cover_pairs() const {
  std::vector<std::pair<Index, Index>> out;
  for (std::size_t x = 0; x < size(); ++x)
    for (Index y : cover_up_[x]) out.emplace_back(static_cast<Index>(x), y);
  return out;
}

int GradedPoset::rank(Index x) const {
  if (!graded_) fail(ErrorKind::NotGraded, "rank requested on a non-graded poset");
  return rank_[u(x)];
}

int GradedPoset::rank() const {
  if (!graded_) fail(ErrorKind::NotGraded, "rank requested on a non-graded poset");
  return length_;
}

std::vector<Index> GradedPoset::elements_of_rank(int r) const {
  if (!graded_) fail(ErrorKind::NotGraded, "rank requested on a non-graded poset");
  std::vector<Index> out;
  for (std::size_t x = 0; x < size(); ++x)
    if (rank_[x] == r) out.push_back(static_cast<Index>(x));
  return out;
}

Index GradedPoset::min() const {
  if (!min_) fail(ErrorKind::RequiresBounds, "poset has no minimum");
  return *min_;
}

Index GradedPoset::max() const {
  if (!max_) fail(ErrorKind::RequiresBounds, "poset has no maximum");
  return *max_;
}

std::vector<Index> GradedPoset::minimal_elements() const {
  std::vector<Index> out;
  for (std::size_t x = 0; x < size(); ++x)
    if (cover_down_[x].empty()) out.push_back(static_cast<Index>(x));
  return out;
}

std::vector<Index> GradedPoset::maximal_elements() const {
  std::vector<Index> out;
  for (std::size_t x = 0; x < size(); ++x)
    if (cover_up_[x].empty()) out.push_back(static_cast<Index>(x));
  return out;
}

const Bitset& GradedPoset::even_rank_mask() const {
  if (!graded_) fail(ErrorKind::NotGraded, "parity mask requested on a non-graded poset");
  return even_;
}

const Bitset& GradedPoset::odd_rank_mask() const {
  if (!graded_) fail(ErrorKind::NotGraded, "parity mask requested on a non-graded poset");
  return odd_;
}

GradedPoset GradedPoset::subposet(const std::vector<Index>& keep) const {
  std::vector<ElementId> ids;
  ids.reserve(keep.size());
  for (Index x : keep) ids.push_back(id(x));
  return from_order(std::move(ids), [&](Index i, Index j) { return leq(keep[u(i)], keep[u(j)]); });
}

GradedPoset GradedPoset::subposet(const Bitset& keep) const { return subposet(keep.indices()); }

GradedPoset GradedPoset::interval(Index lo, Index hi) const {
  if (!leq(lo, hi)) fail(ErrorKind::DomainError, "interval bounds not comparable");
  return subposet(up(lo) & down(hi));
}

ElementId GradedPoset::fresh_id(std::string_view stem) const {
  ElementId cand(stem);
  while (index_.count(cand)) cand += '\'';
  return cand;
}

namespace {

void require_bounds(const GradedPoset& p, const char* what) {
  if (!p.has_min() || !p.has_max())
    fail(ErrorKind::RequiresBounds, std::string(what) + " needs 0̂ and 1̂");
}

// Every interval [s,t], s<t, with s ranging over `from`, has as many even-rank
// as odd-rank elements.
bool intervals_balanced(const GradedPoset& p) {
  const Bitset& even = p.even_rank_mask();
  for (std::size_t s = 0; s < p.size(); ++s) {
    const Bitset& above = p.up(static_cast<Index>(s));
    bool ok = true;
    above.for_each([&](std::size_t t) {
      if (!ok || t == s) return;
      const Bitset& below = p.down(static_cast<Index>(t));
      const std::size_t total = above.and_count(below);
      const std::size_t evens = above.and_count(below, even);
      if (2 * evens != total) ok = false;
    });
    if (!ok) return false;
  }
  return true;
}

}  // namespace

bool is_eulerian(const GradedPoset& p) {
  require_bounds(p, "is_eulerian");
  if (!p.is_graded()) return false;
  return intervals_balanced(p);
}

bool is_lower_eulerian(const GradedPoset& p) {
  if (!p.has_min()) fail(ErrorKind::RequiresMin, "is_lower_eulerian needs 0̂");
  if (!p.is_graded()) fail(ErrorKind::NotGraded, "is_lower_eulerian needs a graded poset");
  return intervals_balanced(p);
}

bool is_near_eulerian(const GradedPoset& p) {
  if (!p.is_graded() || !p.has_min() || !p.has_max()) return false;
  // {0̂ < 1̂} is P1 of the one-element Eulerian poset: near-Eulerian by convention.
  if (p.rank() == 1) return true;
  try {
    semisuspension_with_tau(p);
    return true;
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::NotNearEulerian) return false;
    throw;
  }
}

namespace {

std::optional<Index> bound_of(const GradedPoset& p, const Bitset& candidates, bool least) {
  std::optional<Index> found;
  candidates.for_each([&](std::size_t c) {
    if (found) return;
    const Bitset& cone = least ? p.up(static_cast<Index>(c)) : p.down(static_cast<Index>(c));
    if (candidates.subset_of(cone)) found = static_cast<Index>(c);
  });
  return found;
}

}  // namespace

Index lattice_join(const GradedPoset& p, Index x, Index y) {
  auto j = bound_of(p, p.up(x) & p.up(y), true);
  if (!j) fail(ErrorKind::NotALattice, "no least upper bound of '" + p.id(x) + "' and '" + p.id(y) + "'");
  return *j;
}

Index lattice_meet(const GradedPoset& p, Index x, Index y) {
  auto m = bound_of(p, p.down(x) & p.down(y), false);
  if (!m) fail(ErrorKind::NotALattice, "no greatest lower bound of '" + p.id(x) + "' and '" + p.id(y) + "'");
  return *m;
}

bool is_lattice(const GradedPoset& p) {
  require_bounds(p, "is_lattice");
  const auto n = static_cast<Index>(p.size());
  for (Index x = 0; x < n; ++x)
    for (Index y = x + 1; y < n; ++y) {
      if (p.comparable(x, y)) continue;
      if (!bound_of(p, p.up(x) & p.up(y), true)) return false;
      if (!bound_of(p, p.down(x) & p.down(y), false)) return false;
    }
  return true;
}

void enumerate_chains(const GradedPoset& p, const std::function<void(const Chain&)>& visit) {
  require_bounds(p, "enumerate_chains");
  const Index lo = p.min(), hi = p.max();
  Chain chain;
  std::function<void(const Bitset&)> extend = [&](const Bitset& allowed) {
    visit(chain);
    allowed.for_each([&](std::size_t y) {
      const auto yi = static_cast<Index>(y);
      if (yi == lo || yi == hi) return;
      chain.push_back(yi);
      Bitset next = p.up(yi);
      next.reset(y);
      extend(next);
      chain.pop_back();
    });
  };
  extend(p.up(lo));
}

std::size_t count_chains(const GradedPoset& p) {
  require_bounds(p, "count_chains");
  const Index lo = p.min(), hi = p.max();
  // from[x] = number of chains whose least element is x
  std::vector<std::size_t> from(p.size(), 0);
  std::size_t total = 1;
  const auto& topo = p.linear_extension();
  for (auto it = topo.rbegin(); it != topo.rend(); ++it) {
    const Index x = *it;
    if (x == lo || x == hi) continue;
    std::size_t c = 1;
    p.up(x).for_each([&](std::size_t y) {
      if (static_cast<Index>(y) != x && static_cast<Index>(y) != hi) c += from[y];
    });
    from[u(x)] = c;
    total += c;
  }
  return total;
}

GradedPoset join(const GradedPoset& p, const GradedPoset& q) {
  if (!p.has_max()) fail(ErrorKind::MissingBounds, "left join factor needs 1̂");
  if (!q.has_min()) fail(ErrorKind::MissingBounds, "right join factor needs 0̂");
  const Index ptop = p.max(), qbot = q.min();
  std::vector<ElementId> ids;
  std::vector<Index> pmap(p.size(), -1), qmap(q.size(), -1);
  for (std::size_t x = 0; x < p.size(); ++x)
    if (static_cast<Index>(x) != ptop) {
      pmap[x] = static_cast<Index>(ids.size());
      ids.push_back("L:" + p.id(static_cast<Index>(x)));
    }
  for (std::size_t x = 0; x < q.size(); ++x)
    if (static_cast<Index>(x) != qbot) {
      qmap[x] = static_cast<Index>(ids.size());
      ids.push_back("R:" + q.id(static_cast<Index>(x)));
    }
  std::vector<std::pair<Index, Index>> rel;
  for (auto [a, b] : p.cover_pairs())
    if (b != ptop) rel.emplace_back(pmap[u(a)], pmap[u(b)]);
  for (auto [a, b] : q.cover_pairs())
    if (a != qbot) rel.emplace_back(qmap[u(a)], qmap[u(b)]);
  for (Index c : p.covers_down(ptop))
    for (Index a : q.covers_up(qbot)) rel.emplace_back(pmap[u(c)], qmap[u(a)]);
  return GradedPoset::from_relation(std::move(ids), rel);
}

GradedPoset suspension(const GradedPoset& p) {
  if (!p.has_min() || !p.has_max()) fail(ErrorKind::MissingBounds, "suspension needs 0̂ and 1̂");
  return join(p, boolean_algebra(2));
}

GradedPoset pyramid(const GradedPoset& p) {
  if (!p.is_graded()) fail(ErrorKind::NotGraded, "pyramid needs a graded poset");
  const std::size_t n = p.size();
  std::vector<ElementId> ids;
  ids.reserve(2 * n);
  for (std::size_t x = 0; x < n; ++x) ids.push_back("(" + p.id(static_cast<Index>(x)) + ",0)");
  for (std::size_t x = 0; x < n; ++x) ids.push_back("(" + p.id(static_cast<Index>(x)) + ",1)");
  std::vector<std::pair<Index, Index>> rel;
  const auto off = static_cast<Index>(n);
  for (auto [a, b] : p.cover_pairs()) {
    rel.emplace_back(a, b);
    rel.emplace_back(a + off, b + off);
  }
  for (Index x = 0; x < off; ++x) rel.emplace_back(x, x + off);
  return GradedPoset::from_relation(std::move(ids), rel);
}

GradedPoset adjoin_max(const GradedPoset& p) {
  auto ids = p.ids();
  const auto top = static_cast<Index>(ids.size());
  ids.push_back(p.fresh_id("top"));
  auto rel = p.cover_pairs();
  for (Index m : p.maximal_elements()) rel.emplace_back(m, top);
  return GradedPoset::from_relation(std::move(ids), rel);
}

GradedPoset dual(const GradedPoset& p) {
  auto rel = p.cover_pairs();
  for (auto& e : rel) std::swap(e.first, e.second);
  return GradedPoset::from_relation(p.ids(), rel);
}

GradedPoset remove_max(const GradedPoset& p) {
  Bitset keep(p.size());
  for (std::size_t x = 0; x < p.size(); ++x) keep.set(x);
  keep.reset(u(p.max()));
  return p.subposet(keep);
}

Semisuspension semisuspension_with_tau(const GradedPoset& p) {
  if (!p.is_graded() || !p.has_min() || !p.has_max())
    fail(ErrorKind::NotNearEulerian, "semisuspension needs a graded poset with 0̂ and 1̂");
  const int r = p.rank();
  if (r < 2) fail(ErrorKind::NotNearEulerian, "semisuspension needs rank at least 2");
  const Index top = p.max();
  std::vector<Index> feet;
  for (std::size_t y = 0; y < p.size(); ++y)
    if (p.up(static_cast<Index>(y)).count() == 3) feet.push_back(static_cast<Index>(y));
  if (feet.empty()) fail(ErrorKind::NotNearEulerian, "no element has a three-element upper interval");
  for (Index y : feet)
    if (p.rank(y) != r - 2)
      fail(ErrorKind::NotNearEulerian, "'" + p.id(y) + "' would put the new coatom off rank");

  auto ids = p.ids();
  const auto tau = static_cast<Index>(ids.size());
  ids.push_back(p.fresh_id("tau"));
  auto rel = p.cover_pairs();
  for (Index y : feet) rel.emplace_back(y, tau);
  rel.emplace_back(tau, top);
  GradedPoset q = GradedPoset::from_relation(std::move(ids), rel);
  if (!q.is_graded() || !is_eulerian(q))
    fail(ErrorKind::NotNearEulerian, "semisuspension is not Eulerian");
  return {std::move(q), tau};
}

GradedPoset semisuspension(const GradedPoset& p) { return semisuspension_with_tau(p).poset; }

GradedPoset boundary(const GradedPoset& p) {
  if (p.has_min() && p.has_max() && p.is_graded() && p.rank() >= 1 && is_eulerian(p))
    return remove_max(p);
  auto s = semisuspension_with_tau(p);
  return s.poset.interval(s.poset.min(), s.tau);
}

namespace {

// Colour refinement: start from (rank, in-degree, out-degree), then repeatedly
// refine by the multiset of neighbour colours until stable.
std::vector<int> refine_colours(const GradedPoset& p) {
  const std::size_t n = p.size();
  std::vector<int> colour(n);
  {
    std::map<std::tuple<int, std::size_t, std::size_t>, int> ids;
    std::vector<std::tuple<int, std::size_t, std::size_t>> keys(n);
    for (std::size_t x = 0; x < n; ++x) {
      const auto xi = static_cast<Index>(x);
      keys[x] = {p.is_graded() ? p.rank(xi) : 0, p.covers_down(xi).size(), p.covers_up(xi).size()};
      ids.emplace(keys[x], 0);
    }
    int k = 0;
    for (auto& [key, v] : ids) v = k++;
    for (std::size_t x = 0; x < n; ++x) colour[x] = ids[keys[x]];
  }
  for (std::size_t round = 0; round < n; ++round) {
    std::vector<std::vector<int>> sig(n);
    for (std::size_t x = 0; x < n; ++x) {
      const auto xi = static_cast<Index>(x);
      std::vector<int> dn, up;
      for (Index y : p.covers_down(xi)) dn.push_back(colour[u(y)]);
      for (Index y : p.covers_up(xi)) up.push_back(colour[u(y)]);
      std::sort(dn.begin(), dn.end());
      std::sort(up.begin(), up.end());
      sig[x].push_back(colour[x]);
      sig[x].insert(sig[x].end(), dn.begin(), dn.end());
      sig[x].push_back(-1);
      sig[x].insert(sig[x].end(), up.begin(), up.end());
    }
    std::map<std::vector<int>, int> ids;
    for (auto& s : sig) ids.emplace(s, 0);
    int k = 0;
    for (auto& [key, v] : ids) v = k++;
    std::vector<int> next(n);
    for (std::size_t x = 0; x < n; ++x) next[x] = ids[sig[x]];
    const bool stable = std::set<int>(next.begin(), next.end()).size() ==
                        std::set<int>(colour.begin(), colour.end()).size();
    colour = std::move(next);
    if (stable) break;
  }
  return colour;
}

}  // namespace

bool isomorphic(const GradedPoset& p, const GradedPoset& q) {
  if (p.size() != q.size() || p.is_graded() != q.is_graded()) return false;
  if (p.cover_pairs().size() != q.cover_pairs().size()) return false;
  // Refine both posets jointly by building colours on the disjoint union.
  const std::size_t n = p.size();
  std::vector<ElementId> ids;
  for (std::size_t x = 0; x < n; ++x) ids.push_back("p" + std::to_string(x));
  for (std::size_t x = 0; x < n; ++x) ids.push_back("q" + std::to_string(x));
  std::vector<std::pair<Index, Index>> rel = p.cover_pairs();
  for (auto [a, b] : q.cover_pairs()) rel.emplace_back(a + static_cast<Index>(n), b + static_cast<Index>(n));
  const GradedPoset both = GradedPoset::from_relation(std::move(ids), rel);
  // Ranks in the union agree with ranks in each component only when all
  // minimal elements sit at rank 0, which holds for graded inputs.
  const std::vector<int> colour = refine_colours(both);
  std::vector<int> cp(colour.begin(), colour.begin() + static_cast<std::ptrdiff_t>(n));
  std::vector<int> cq(colour.begin() + static_cast<std::ptrdiff_t>(n), colour.end());
  {
    auto a = cp, b = cq;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) return false;
  }

  std::vector<Index> order = p.linear_extension();
  std::vector<Index> img(n, -1);
  std::vector<bool> used(n, false);
  std::function<bool(std::size_t)> place = [&](std::size_t k) {
    if (k == n) return true;
    const Index x = order[k];
    for (std::size_t y = 0; y < n; ++y) {
      if (used[y] || cq[y] != cp[u(x)]) continue;
      const auto yi = static_cast<Index>(y);
      bool ok = true;
      for (std::size_t j = 0; j < k && ok; ++j) {
        const Index w = order[j];
        ok = p.leq(w, x) == q.leq(img[u(w)], yi) && p.leq(x, w) == q.leq(yi, img[u(w)]);
      }
      if (!ok) continue;
      img[u(x)] = yi;
      used[y] = true;
      if (place(k + 1)) return true;
      used[y] = false;
    }
    img[u(x)] = -1;
    return false;
  };
  return place(0);
}

GradedPoset boolean_algebra(int n) {
  if (n < 0 || n > 20) fail(ErrorKind::DomainError, "boolean_algebra needs 0 <= n <= 20");
  const std::size_t m = std::size_t{1} << n;
  std::vector<ElementId> ids(m);
  for (std::size_t s = 0; s < m; ++s) {
    std::string id = "{";
    bool first = true;
    for (int i = 0; i < n; ++i)
      if (s >> i & 1U) {
        if (!first) id += ',';
        id += std::to_string(i + 1);
        first = false;
      }
    ids[s] = id + "}";
  }
  std::vector<std::pair<Index, Index>> rel;
  for (std::size_t s = 0; s < m; ++s)
    for (int i = 0; i < n; ++i)
      if (!(s >> i & 1U)) rel.emplace_back(static_cast<Index>(s), static_cast<Index>(s | (std::size_t{1} << i)));
  return GradedPoset::from_relation(std::move(ids), rel);
}

GradedPoset chain_poset(int length) {
  if (length < 0) fail(ErrorKind::DomainError, "chain length must be non-negative");
  std::vector<ElementId> ids;
  std::vector<std::pair<Index, Index>> rel;
  for (int i = 0; i <= length; ++i) {
    ids.push_back("c" + std::to_string(i));
    if (i > 0) rel.emplace_back(i - 1, i);
  }
  return GradedPoset::from_relation(std::move(ids), rel);
}

}  // namespace cdindex
