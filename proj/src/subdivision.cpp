#include "cdindex/subdivision.hpp"

#include <algorithm>
#include <mutex>
#include <set>

#include "cdindex/errors.hpp"
#include "parallel.hpp"

namespace cdindex {

namespace {

constexpr std::size_t kMaxFailures = 50;

std::size_t u(Index x) { return static_cast<std::size_t>(x); }

void note(ValidationReport& r, std::string msg) {
  r.ok = false;
  if (r.failures.size() < kMaxFailures) r.failures.push_back(std::move(msg));
}

}  // namespace

struct SubdivisionMap::Data {
  Data(GradedPoset s, GradedPoset t, std::vector<Index> c)
      : source(std::move(s)), target(std::move(t)), carrier(std::move(c)) {}
  GradedPoset source;
  GradedPoset target;
  std::vector<Index> carrier;
  std::vector<Bitset> ideal;  // ideal[sigma] = preimage of [0̂, sigma]
  std::once_flag se_once, sf_once;
  ValidationReport se, sf;
};

SubdivisionMap::SubdivisionMap(GradedPoset source, GradedPoset target, std::vector<Index> carrier)
    : data_(std::make_shared<Data>(std::move(source), std::move(target), std::move(carrier))) {
  const auto& src = data_->source;
  const auto& tgt = data_->target;
  if (data_->carrier.size() != src.size())
    fail(ErrorKind::InvalidSubdivision, "carrier has " + std::to_string(data_->carrier.size()) +
                                            " entries for " + std::to_string(src.size()) + " source elements");
  for (Index c : data_->carrier)
    if (c < 0 || u(c) >= tgt.size()) fail(ErrorKind::InvalidSubdivision, "carrier index out of range");
  data_->ideal.assign(tgt.size(), Bitset(src.size()));
  for (std::size_t x = 0; x < src.size(); ++x)
    tgt.up(data_->carrier[x]).for_each([&](std::size_t s) { data_->ideal[s].set(x); });
}

const GradedPoset& SubdivisionMap::source() const noexcept { return data_->source; }
const GradedPoset& SubdivisionMap::target() const noexcept { return data_->target; }
Index SubdivisionMap::carrier(Index x) const { return data_->carrier[u(x)]; }
const std::vector<Index>& SubdivisionMap::carriers() const noexcept { return data_->carrier; }

SubdivisionMap SubdivisionMap::from_ids(GradedPoset source, GradedPoset target,
                                        const std::map<std::string, std::string>& carrier) {
  std::vector<Index> c(source.size(), -1);
  for (const auto& [from, to] : carrier) c[u(source.index_of(from))] = target.index_of(to);
  for (std::size_t x = 0; x < c.size(); ++x)
    if (c[x] < 0) fail(ErrorKind::InvalidSubdivision, "no carrier given for '" + source.id(static_cast<Index>(x)) + "'");
  return SubdivisionMap(std::move(source), std::move(target), std::move(c));
}

const Bitset& SubdivisionMap::preimage_ideal(Index sigma) const { return data_->ideal.at(u(sigma)); }

const ValidationReport& SubdivisionMap::strong_eulerian() const {
  std::call_once(data_->se_once, [this] { data_->se = validate_strong_eulerian(*this); });
  return data_->se;
}

const ValidationReport& SubdivisionMap::strong_formal() const {
  std::call_once(data_->sf_once, [this] { data_->sf = validate_strong_formal(*this); });
  return data_->sf;
}

ValidationReport validate_map_basics(const SubdivisionMap& m) {
  ValidationReport r;
  const auto& s = m.source();
  const auto& t = m.target();
  for (auto [x, y] : s.cover_pairs())
    if (!t.leq(m.carrier(x), m.carrier(y)))
      note(r, "not order preserving: '" + s.id(x) + "' < '" + s.id(y) + "' but '" + t.id(m.carrier(x)) +
                  "' is not below '" + t.id(m.carrier(y)) + "'");
  std::vector<bool> hit(t.size(), false);
  for (Index c : m.carriers()) hit[u(c)] = true;
  for (std::size_t y = 0; y < t.size(); ++y)
    if (!hit[y]) note(r, "not surjective: nothing is carried by '" + t.id(static_cast<Index>(y)) + "'");
  return r;
}

ValidationReport validate_strong_eulerian(const SubdivisionMap& m) {
  ValidationReport r = validate_map_basics(m);
  const auto& s = m.source();
  const auto& t = m.target();
  if (!s.is_graded() || !s.has_min()) note(r, "source is not graded with 0̂");
  if (!t.is_graded() || !t.has_min()) note(r, "target is not graded with 0̂");
  if (!r.ok) return r;
  if (s.rank() != t.rank())
    note(r, "source rank " + std::to_string(s.rank()) + " differs from target rank " + std::to_string(t.rank()));
  if (m.carrier(s.min()) != t.min()) note(r, "0̂ is not carried by 0̂");
  if (s.has_max()) {
    if (!t.has_max()) {
      note(r, "source has 1̂ but target does not");
    } else {
      for (std::size_t x = 0; x < s.size(); ++x) {
        const bool top = static_cast<Index>(x) == s.max();
        if ((m.carrier(static_cast<Index>(x)) == t.max()) != top)
          note(r, top ? "1̂ is not carried by 1̂" : "'" + s.id(static_cast<Index>(x)) + "' is carried by 1̂");
      }
    }
  }
  for (std::size_t sg = 0; sg < t.size(); ++sg) {
    const Index sigma = static_cast<Index>(sg);
    const GradedPoset sub = s.subposet(m.preimage_ideal(sigma));
    const std::string name = "preimage of '" + t.id(sigma) + "'";
    if (!sub.is_graded() || !sub.has_min()) {
      note(r, name + " is not graded with 0̂");
      continue;
    }
    if (sub.rank() != t.rank(sigma)) {
      note(r, name + " has rank " + std::to_string(sub.rank()) + ", expected " + std::to_string(t.rank(sigma)));
      continue;
    }
    if (!is_near_eulerian(adjoin_max(sub))) note(r, name + " with 1̂ adjoined is not near-Eulerian");
  }
  return r;
}

ValidationReport validate_strong_formal(const SubdivisionMap& m) {
  ValidationReport r = validate_map_basics(m);
  const auto& s = m.source();
  const auto& t = m.target();
  if (!s.is_graded() || !s.has_min()) note(r, "source is not lower Eulerian");
  if (!t.is_graded() || !t.has_min()) note(r, "target is not lower Eulerian");
  if (!r.ok) return r;
  if (!is_lower_eulerian(s)) note(r, "source is not lower Eulerian");
  if (!is_lower_eulerian(t)) note(r, "target is not lower Eulerian");
  for (std::size_t y = 0; y < s.size(); ++y)
    if (t.rank(m.carrier(static_cast<Index>(y))) < s.rank(static_cast<Index>(y)))
      note(r, "not rank increasing at '" + s.id(static_cast<Index>(y)) + "'");
  if (!r.ok) return r;

  const int top = s.rank();
  std::vector<Bitset> level(static_cast<std::size_t>(std::max(top, t.rank())) + 1, Bitset(s.size()));
  for (std::size_t y = 0; y < s.size(); ++y) level[u(s.rank(static_cast<Index>(y)))].set(y);
  const Bitset& even = s.even_rank_mask();

  for (std::size_t zi = 0; zi < s.size(); ++zi) {
    const Index z = static_cast<Index>(zi);
    t.up(m.carrier(z)).for_each([&](std::size_t xi) {
      const Index x = static_cast<Index>(xi);
      const Bitset& ideal = m.preimage_ideal(x);
      const int rx = t.rank(x);
      const long total = static_cast<long>(s.up(z).and_count(ideal));
      const long ev = static_cast<long>(s.up(z).and_count(ideal, even));
      const long sum = rx % 2 == 0 ? ev - (total - ev) : (total - ev) - ev;
      const long want = m.carrier(z) == x ? 1 : 0;
      auto where = [&] { return "z='" + s.id(z) + "', x='" + t.id(x) + "'"; };
      if (sum != want) note(r, "alternating sum " + std::to_string(sum) + " at " + where());
      if (u(rx) >= level.size() || s.up(z).and_count(ideal, level[u(rx)]) == 0)
        note(r, "not strongly surjective at " + where());
    });
  }
  return r;
}

SubdivisionMap restrict(const SubdivisionMap& m, Index f) {
  const auto& t = m.target();
  if (f < 0 || u(f) >= t.size()) fail(ErrorKind::FaceNotFound, "no such target element");
  const std::vector<int> keep = m.preimage_ideal(f).indices();
  GradedPoset src = m.source().subposet(keep);
  GradedPoset tgt = t.interval(t.min(), f);
  std::vector<Index> c(keep.size());
  for (std::size_t k = 0; k < keep.size(); ++k) c[k] = tgt.index_of(t.id(m.carrier(keep[k])));
  return SubdivisionMap(std::move(src), std::move(tgt), std::move(c));
}

SubdivisionMap restrict(const SubdivisionMap& m, const std::string& f_id) {
  auto f = m.target().find(f_id);
  if (!f) fail(ErrorKind::FaceNotFound, "no target element '" + f_id + "'");
  return restrict(m, *f);
}

GradedPoset hat(const SubdivisionMap& m, Index sigma) {
  return adjoin_max(m.source().subposet(m.preimage_ideal(sigma)));
}

// ---- skeletal decomposition ------------------------------------------------

namespace {

void require_valid(const SubdivisionMap& m) {
  const auto& rep = m.strong_eulerian();
  if (!rep.ok)
    fail(ErrorKind::InvalidSubdivision,
         "map is not a strong Eulerian subdivision" + (rep.failures.empty() ? "" : ": " + rep.failures.front()));
}

SkeletalPoset build_level(const SubdivisionMap& m, int i) {
  const auto& s = m.source();
  const auto& t = m.target();
  std::vector<SkeletalTag> tags;
  std::vector<ElementId> ids;
  for (std::size_t x = 0; x < s.size(); ++x)
    if (t.rank(m.carrier(static_cast<Index>(x))) <= i) {
      tags.push_back({true, static_cast<Index>(x)});
      ids.push_back("new:" + s.id(static_cast<Index>(x)));
    }
  for (std::size_t y = 0; y < t.size(); ++y)
    if (t.rank(static_cast<Index>(y)) >= i + 1) {
      tags.push_back({false, static_cast<Index>(y)});
      ids.push_back("old:" + t.id(static_cast<Index>(y)));
    }
  GradedPoset p = GradedPoset::from_order(std::move(ids), [&](Index a, Index b) {
    const auto& ta = tags[u(a)];
    const auto& tb = tags[u(b)];
    if (ta.is_new && tb.is_new) return s.leq(ta.origin, tb.origin);
    if (!ta.is_new && !tb.is_new) return t.leq(ta.origin, tb.origin);
    if (ta.is_new) return t.leq(m.carrier(ta.origin), tb.origin);
    return false;
  });
  return SkeletalPoset{std::move(p), std::move(tags)};
}

Index find_tag(const SkeletalPoset& lv, SkeletalTag tag) {
  for (std::size_t k = 0; k < lv.tags.size(); ++k)
    if (lv.tags[k].is_new == tag.is_new && lv.tags[k].origin == tag.origin) return static_cast<Index>(k);
  fail(ErrorKind::InvalidSubdivision, "skeletal map leaves its level");
}

}  // namespace

SkeletalFamily skeletal_family(const SubdivisionMap& m) {
  require_valid(m);
  const auto& t = m.target();
  SkeletalFamily fam{t.rank(), m, {}, {}};
  for (int i = 0; i <= fam.n; ++i) {
    fam.levels.push_back(build_level(m, i));
    const auto& p = fam.levels.back().poset;
    if (!p.is_graded() || p.rank() != fam.n)
      fail(ErrorKind::InvalidSubdivision, "skeletal poset " + std::to_string(i) + " is not graded of rank " +
                                              std::to_string(fam.n));
  }
  for (int i = 0; i < fam.n; ++i) {
    const auto& from = fam.levels[u(i + 1)];
    const auto& to = fam.levels[u(i)];
    std::vector<Index> phi(from.tags.size());
    for (std::size_t k = 0; k < from.tags.size(); ++k) {
      SkeletalTag tag = from.tags[k];
      if (tag.is_new && t.rank(m.carrier(tag.origin)) == i + 1) tag = {false, m.carrier(tag.origin)};
      phi[k] = find_tag(to, tag);
    }
    fam.maps.push_back(std::move(phi));
  }
  // The composite down to level 0 must agree with the original map.
  const auto& top = fam.levels[u(fam.n)];
  for (std::size_t k = 0; k < top.tags.size(); ++k) {
    Index e = static_cast<Index>(k);
    for (int i = fam.n - 1; i >= 0; --i) e = fam.maps[u(i)][u(e)];
    const SkeletalTag tag = fam.levels[0].tags[u(e)];
    const Index image = tag.is_new ? m.carrier(tag.origin) : tag.origin;
    if (image != m.carrier(top.tags[k].origin))
      fail(ErrorKind::InvalidSubdivision, "composite skeletal map disagrees at '" + top.poset.id(e) + "'");
  }
  return fam;
}

FlagClass classify_flag(const SkeletalFamily& fam, int i, const std::vector<std::string>& chain) {
  if (i < 0 || i > fam.n) fail(ErrorKind::DomainError, "level out of range");
  const auto& lv = fam.levels[u(i)];
  const auto& p = lv.poset;
  std::vector<Index> idx;
  for (const auto& id : chain) {
    auto x = p.find(id);
    if (!x) fail(ErrorKind::InvalidChain, "no element '" + id + "' in level " + std::to_string(i));
    if (*x == p.min() || *x == p.max()) fail(ErrorKind::InvalidChain, "chain contains 0̂ or 1̂");
    if (!idx.empty() && !p.less(idx.back(), *x))
      fail(ErrorKind::InvalidChain, "'" + p.id(idx.back()) + "' is not below '" + id + "'");
    idx.push_back(*x);
  }
  const auto& t = fam.map.target();
  std::size_t new_count = 0;
  while (new_count < idx.size() && lv.tags[u(idx[new_count])].is_new) ++new_count;
  // a chain is an order ideal in "new" since new elements never sit above old ones
  if (new_count == 0) return {FlagKind::Old, -1};
  const int sw = t.rank(fam.map.carrier(lv.tags[u(idx[new_count - 1])].origin));
  return {new_count == idx.size() ? FlagKind::New : FlagKind::Mixed, sw};
}

TelescopeResult verify_rank_telescoping(const SkeletalFamily& fam, int i) {
  if (i < 1 || i > fam.n) fail(ErrorKind::DomainError, "telescoping level must lie in 1..n");
  const auto& m = fam.map;
  const auto& t = m.target();
  TelescopeResult res;
  res.lhs = flag_polynomial(fam.levels[u(i)].poset) - flag_polynomial(fam.levels[u(i - 1)].poset);
  for (Index sigma : t.elements_of_rank(i)) {
    const LocalIndex li = local_index(hat(m, sigma));
    res.rhs = res.rhs + li.flag * flag_polynomial(t.interval(sigma, t.max()));
  }
  res.ok = res.lhs == res.rhs;
  if (!res.ok) res.reason = "level difference " + to_text(res.lhs) + " != " + to_text(res.rhs);
  return res;
}

TelescopeResult verify_rank_telescoping(const SubdivisionMap& m, int i) {
  try {
    return verify_rank_telescoping(skeletal_family(m), i);
  } catch (const Error& e) {
    TelescopeResult res;
    res.reason = e.what();
    return res;
  }
}

Decomposition decompose_cd(const SubdivisionMap& m, int jobs) {
  require_valid(m);
  const auto& s = m.source();
  const auto& t = m.target();
  if (!s.has_max() || !t.has_max() || !is_eulerian(s) || !is_eulerian(t))
    fail(ErrorKind::InvalidSubdivision, "decomposition needs Eulerian source and target");
  Decomposition d;
  std::vector<Index> order(t.size());
  for (std::size_t k = 0; k < order.size(); ++k) order[k] = static_cast<Index>(k);
  std::stable_sort(order.begin(), order.end(), [&](Index a, Index b) { return t.rank(a) < t.rank(b); });
  d.rows.resize(order.size());
  detail::parallel_for(order.size(), jobs, [&](std::size_t k) {
    DecompositionRow& row = d.rows[k];
    row.sigma = order[k];
    row.id = t.id(row.sigma);
    row.rank = t.rank(row.sigma);
    row.local = local_index(hat(m, row.sigma));
    row.upper = cd_index(t.interval(row.sigma, t.max()));
    row.term = row.local.cd * row.upper;
  });
  for (const auto& row : d.rows) {
    if (row.sigma == t.max() && !row.local.cd.is_zero())
      fail(ErrorKind::IdentityViolated, "local cd-index of the whole subdivision is " + to_text(row.local.cd));
    d.total = d.total + row.term;
  }
  d.source_cd = cd_index(s);
  if (d.total != d.source_cd)
    fail(ErrorKind::IdentityViolated,
         "decomposition total " + to_text(d.total) + " differs from " + to_text(d.source_cd));
  return d;
}

// ---- constructors ----------------------------------------------------------

SubdivisionMap simplicial_subdivision_map(const SimplicialComplex& fine, const SimplicialComplex& coarse,
                                          const std::map<std::string, std::vector<std::string>>& vertex_carrier,
                                          bool with_top) {
  std::vector<Face> vc(fine.vertices().size());
  for (std::size_t v = 0; v < fine.vertices().size(); ++v) {
    auto it = vertex_carrier.find(fine.vertices()[v]);
    if (it == vertex_carrier.end())
      fail(ErrorKind::InvalidSubdivision, "no carrier for vertex '" + fine.vertices()[v] + "'");
    vc[v] = coarse.face_from_ids(it->second);
  }
  GradedPoset src = face_poset(fine, with_top);
  GradedPoset tgt = face_poset(coarse, with_top);
  std::map<std::string, std::string> carrier;
  for (const Face& f : fine.faces()) {
    std::set<int> un;
    for (int v : f) un.insert(vc[u(v)].begin(), vc[u(v)].end());
    const Face g(un.begin(), un.end());
    if (!coarse.contains(g))
      fail(ErrorKind::InvalidSubdivision, "vertices of " + fine.face_id(f) + " are not carried by one face");
    carrier[fine.face_id(f)] = coarse.face_id(g);
  }
  if (with_top) carrier[src.id(src.max())] = tgt.id(tgt.max());
  return SubdivisionMap::from_ids(std::move(src), std::move(tgt), carrier);
}

SubdivisionMap barycentric_map(const SimplicialComplex& k, bool with_top) {
  const Barycentric b = barycentric_subdivision(k);
  GradedPoset src = face_poset(b.complex, with_top);
  GradedPoset tgt = face_poset(k, with_top);
  std::map<std::string, std::string> carrier;
  const auto& faces = b.complex.faces();
  for (std::size_t i = 0; i < faces.size(); ++i) carrier[b.complex.face_id(faces[i])] = k.face_id(b.carrier[i]);
  if (with_top) carrier[src.id(src.max())] = tgt.id(tgt.max());
  return SubdivisionMap::from_ids(std::move(src), std::move(tgt), carrier);
}

SubdivisionMap identity_map(const GradedPoset& p) {
  std::vector<Index> c(p.size());
  for (std::size_t x = 0; x < c.size(); ++x) c[x] = static_cast<Index>(x);
  return SubdivisionMap(p, p, std::move(c));
}

SubdivisionMap subdivided_edge_map(int t) {
  if (t < 0) fail(ErrorKind::DomainError, "number of interior points must be nonnegative");
  std::vector<std::string> path{"1"};
  for (int k = 1; k <= t; ++k) path.push_back("m" + std::to_string(k));
  path.push_back("2");
  std::vector<std::vector<std::string>> facets;
  std::map<std::string, std::vector<std::string>> vc{{"1", {"1"}}, {"2", {"2"}}};
  for (std::size_t k = 0; k + 1 < path.size(); ++k) facets.push_back({path[k], path[k + 1]});
  for (int k = 1; k <= t; ++k) vc["m" + std::to_string(k)] = {"1", "2"};
  return simplicial_subdivision_map(SimplicialComplex::from_facets(facets), make_simplex(1), vc, false);
}

}  // namespace cdindex
