#include "cdindex/complexes.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>
#include <set>

#include "cdindex/errors.hpp"
#include "cdindex/flagcd.hpp"

namespace cdindex {

namespace {

bool all_digits(const std::string& s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

// Numeric labels sort numerically, everything else lexicographically after them.
bool natural_less(const std::string& a, const std::string& b) {
  const bool da = all_digits(a), db = all_digits(b);
  if (da != db) return da;
  if (da && a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

std::size_t uz(int i) { return static_cast<std::size_t>(i); }

std::vector<std::vector<std::string>> facet_names(const SimplicialComplex& k, const std::vector<Face>& facets) {
  std::vector<std::vector<std::string>> out;
  for (const auto& f : facets) {
    std::vector<std::string> names;
    for (int v : f) names.push_back(k.vertices()[uz(v)]);
    out.push_back(std::move(names));
  }
  return out;
}

}  // namespace

SimplicialComplex::SimplicialComplex(std::vector<std::string> vertices, std::vector<Face> facets)
    : vertices_(std::move(vertices)) {
  for (std::size_t i = 0; i < vertices_.size(); ++i) vindex_.emplace(vertices_[i], static_cast<int>(i));
  for (auto& f : facets) {
    std::sort(f.begin(), f.end());
    f.erase(std::unique(f.begin(), f.end()), f.end());
  }
  std::sort(facets.begin(), facets.end());
  facets.erase(std::unique(facets.begin(), facets.end()), facets.end());
  for (const auto& f : facets) {
    const bool dominated = std::any_of(facets.begin(), facets.end(), [&](const Face& g) {
      return g.size() > f.size() && std::includes(g.begin(), g.end(), f.begin(), f.end());
    });
    if (!dominated) facets_.push_back(f);
  }
  if (facets_.empty()) facets_.push_back({});

  std::set<Face> all;
  for (const auto& f : facets_) {
    const std::size_t m = f.size();
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << m); ++s) {
      Face g;
      for (std::size_t i = 0; i < m; ++i)
        if (s >> i & 1U) g.push_back(f[i]);
      all.insert(std::move(g));
    }
  }
  faces_.assign(all.begin(), all.end());
  std::stable_sort(faces_.begin(), faces_.end(),
                   [](const Face& a, const Face& b) { return a.size() < b.size(); });
  for (std::size_t i = 0; i < faces_.size(); ++i) face_pos_.emplace(faces_[i], i);

  dim_ = -1;
  for (const auto& f : facets_) dim_ = std::max(dim_, static_cast<int>(f.size()) - 1);
  pure_ = std::all_of(facets_.begin(), facets_.end(),
                      [&](const Face& f) { return static_cast<int>(f.size()) - 1 == dim_; });
}

SimplicialComplex SimplicialComplex::from_facets(const std::vector<std::vector<std::string>>& facets,
                                                 const std::vector<std::string>& extra_vertices) {
  std::set<std::string> names(extra_vertices.begin(), extra_vertices.end());
  for (const auto& f : facets) names.insert(f.begin(), f.end());
  std::vector<std::string> vertices(names.begin(), names.end());
  std::sort(vertices.begin(), vertices.end(), natural_less);
  std::unordered_map<std::string, int> idx;
  for (std::size_t i = 0; i < vertices.size(); ++i) idx.emplace(vertices[i], static_cast<int>(i));
  std::vector<Face> fs;
  for (const auto& f : facets) {
    Face g;
    for (const auto& v : f) g.push_back(idx.at(v));
    fs.push_back(std::move(g));
  }
  for (const auto& v : extra_vertices) fs.push_back({idx.at(v)});
  return SimplicialComplex(std::move(vertices), std::move(fs));
}

SimplicialComplex SimplicialComplex::from_int_facets(const std::vector<std::vector<int>>& facets) {
  std::vector<std::vector<std::string>> named;
  for (const auto& f : facets) {
    std::vector<std::string> g;
    for (int v : f) g.push_back(std::to_string(v));
    named.push_back(std::move(g));
  }
  return from_facets(named);
}

std::optional<std::size_t> SimplicialComplex::face_index(const Face& f) const {
  auto it = face_pos_.find(f);
  if (it == face_pos_.end()) return std::nullopt;
  return it->second;
}

std::string SimplicialComplex::face_id(const Face& f) const {
  std::string s = "{";
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (i) s += ',';
    s += f[i] >= 0 && uz(f[i]) < vertices_.size() ? vertices_[uz(f[i])] : "#" + std::to_string(f[i]);
  }
  return s + "}";
}

int SimplicialComplex::vertex_index(const std::string& id) const {
  auto it = vindex_.find(id);
  if (it == vindex_.end()) fail(ErrorKind::FaceNotFound, "unknown vertex '" + id + "'");
  return it->second;
}

Face SimplicialComplex::face_from_ids(const std::vector<std::string>& ids) const {
  Face f;
  for (const auto& v : ids) f.push_back(vertex_index(v));
  std::sort(f.begin(), f.end());
  f.erase(std::unique(f.begin(), f.end()), f.end());
  if (!contains(f)) fail(ErrorKind::FaceNotFound, face_id(f));
  return f;
}

// ---- posets of complexes -------------------------------------------------

GradedPoset face_poset(const SimplicialComplex& k, bool with_max) {
  std::vector<ElementId> ids;
  for (const auto& f : k.faces()) ids.push_back(k.face_id(f));
  std::vector<std::pair<Index, Index>> rel;
  for (std::size_t i = 0; i < k.faces().size(); ++i) {
    const Face& f = k.faces()[i];
    for (std::size_t j = 0; j < f.size(); ++j) {
      Face g = f;
      g.erase(g.begin() + static_cast<std::ptrdiff_t>(j));
      rel.emplace_back(static_cast<Index>(*k.face_index(g)), static_cast<Index>(i));
    }
  }
  if (with_max) {
    const auto top = static_cast<Index>(ids.size());
    std::string name = "top";
    while (std::find(ids.begin(), ids.end(), name) != ids.end()) name += '\'';
    ids.push_back(name);
    for (const auto& f : k.facets()) rel.emplace_back(static_cast<Index>(*k.face_index(f)), top);
  }
  return GradedPoset::from_relation(std::move(ids), rel);
}

SimplicialComplex order_complex(const GradedPoset& p) {
  if (!p.has_min() || !p.has_max()) fail(ErrorKind::RequiresBounds, "order complex needs 0̂ and 1̂");
  const Index lo = p.min(), hi = p.max();
  std::vector<std::vector<std::string>> facets;
  std::vector<std::string> chain;
  std::function<void(Index)> walk = [&](Index x) {
    chain.push_back(p.id(x));
    bool extended = false;
    for (Index y : p.covers_up(x)) {
      if (y == hi) continue;
      extended = true;
      walk(y);
    }
    if (!extended) facets.push_back(chain);
    chain.pop_back();
  };
  for (Index a : p.covers_up(lo))
    if (a != hi) walk(a);
  return SimplicialComplex::from_facets(facets);
}

GradedPoset face_lattice_from_facets(const std::vector<std::vector<std::string>>& facets) {
  std::set<std::string> names;
  for (const auto& f : facets) names.insert(f.begin(), f.end());
  std::vector<std::string> vertices(names.begin(), names.end());
  std::sort(vertices.begin(), vertices.end(), natural_less);
  std::unordered_map<std::string, int> idx;
  for (std::size_t i = 0; i < vertices.size(); ++i) idx.emplace(vertices[i], static_cast<int>(i));

  std::vector<Face> base;
  for (const auto& f : facets) {
    Face g;
    for (const auto& v : f) g.push_back(idx.at(v));
    std::sort(g.begin(), g.end());
    g.erase(std::unique(g.begin(), g.end()), g.end());
    base.push_back(std::move(g));
  }
  std::set<Face> closed(base.begin(), base.end());
  std::vector<Face> frontier(base.begin(), base.end());
  while (!frontier.empty()) {
    std::vector<Face> next;
    for (const auto& f : frontier)
      for (const auto& g : base) {
        Face h;
        std::set_intersection(f.begin(), f.end(), g.begin(), g.end(), std::back_inserter(h));
        if (closed.insert(h).second) next.push_back(h);
      }
    frontier = std::move(next);
  }
  closed.insert(Face{});
  std::vector<Face> faces(closed.begin(), closed.end());
  std::stable_sort(faces.begin(), faces.end(), [](const Face& a, const Face& b) { return a.size() < b.size(); });

  std::vector<ElementId> ids;
  for (const auto& f : faces) {
    std::string s = "{";
    for (std::size_t i = 0; i < f.size(); ++i) s += (i ? "," : "") + vertices[uz(f[i])];
    ids.push_back(s + "}");
  }
  ids.push_back("top");
  const auto top = static_cast<Index>(faces.size());
  return GradedPoset::from_order(std::move(ids), [&](Index i, Index j) {
    if (j == top) return true;
    if (i == top) return false;
    return std::includes(faces[uz(j)].begin(), faces[uz(j)].end(), faces[uz(i)].begin(), faces[uz(i)].end());
  });
}

GradedPoset face_lattice_from_int_facets(const std::vector<std::vector<int>>& facets) {
  std::vector<std::vector<std::string>> named;
  for (const auto& f : facets) {
    std::vector<std::string> g;
    for (int v : f) g.push_back(std::to_string(v));
    named.push_back(std::move(g));
  }
  return face_lattice_from_facets(named);
}

Barycentric barycentric_subdivision(const SimplicialComplex& k) {
  Barycentric b{order_complex(face_poset(k, true)), {}};
  std::unordered_map<std::string, const Face*> by_id;
  for (const auto& f : k.faces()) by_id.emplace(k.face_id(f), &f);
  for (const auto& chain : b.complex.faces()) {
    const Face* best = &k.faces().front();
    for (int v : chain) {
      const Face* f = by_id.at(b.complex.vertices()[uz(v)]);
      if (f->size() > best->size()) best = f;
    }
    b.carrier.push_back(*best);
  }
  return b;
}

SimplicialComplex star(const SimplicialComplex& k, const Face& f) {
  if (!k.contains(f)) fail(ErrorKind::FaceNotFound, k.face_id(f));
  std::vector<Face> keep;
  for (const auto& g : k.facets())
    if (std::includes(g.begin(), g.end(), f.begin(), f.end())) keep.push_back(g);
  return SimplicialComplex::from_facets(facet_names(k, keep));
}

SimplicialComplex link(const SimplicialComplex& k, const Face& f) {
  if (!k.contains(f)) fail(ErrorKind::FaceNotFound, k.face_id(f));
  std::vector<Face> keep;
  for (const auto& g : k.facets())
    if (std::includes(g.begin(), g.end(), f.begin(), f.end())) {
      Face h;
      std::set_difference(g.begin(), g.end(), f.begin(), f.end(), std::back_inserter(h));
      keep.push_back(std::move(h));
    }
  return SimplicialComplex::from_facets(facet_names(k, keep));
}

SimplicialComplex pseudomanifold_boundary(const SimplicialComplex& k) {
  std::map<Face, int> count;
  for (const auto& f : k.facets())
    for (std::size_t j = 0; j < f.size(); ++j) {
      Face g = f;
      g.erase(g.begin() + static_cast<std::ptrdiff_t>(j));
      ++count[g];
    }
  std::vector<Face> keep;
  for (const auto& [g, c] : count)
    if (c == 1) keep.push_back(g);
  return SimplicialComplex::from_facets(facet_names(k, keep));
}

// ---- f and h -------------------------------------------------------------

std::vector<Integer> f_vector(const SimplicialComplex& k) {
  std::vector<Integer> f(uz(k.dim() + 2), 0);
  for (const auto& g : k.faces()) f[g.size()] += 1;
  return f;
}

namespace {

Integer binomial(int n, int r) {
  if (r < 0 || r > n) return 0;
  Integer b = 1;
  for (int i = 0; i < r; ++i) b = b * (n - i) / (i + 1);
  return b;
}

}  // namespace

HVector h_vector(const SimplicialComplex& k) {
  if (!k.is_pure()) fail(ErrorKind::NotPure, "h-vector needs a pure complex");
  const int d = k.dim() + 1;
  const auto f = f_vector(k);
  HVector hv{d, std::vector<Integer>(uz(d + 1), 0)};
  for (int j = 0; j <= d; ++j)
    for (int i = 0; i <= j; ++i) {
      const Integer term = binomial(d - i, j - i) * f[uz(i)];
      hv.h[uz(j)] += (j - i) % 2 ? Integer(-term) : term;
    }
  return hv;
}

HVector flag_to_h(const GradedPoset& p) {
  const FlagVector beta = flag_h(p);
  HVector hv{beta.n, std::vector<Integer>(uz(beta.n + 1), 0)};
  for (std::uint64_t m = 0; m < beta.values.size(); ++m)
    hv.h[static_cast<std::size_t>(std::popcount(m))] += beta.values[m];
  return hv;
}

// ---- homology ------------------------------------------------------------

namespace {

using SparseRow = std::map<int, Integer>;

void normalize(SparseRow& row) {
  Integer g = 0;
  for (const auto& [c, v] : row) g = gcd(g, v);
  if (g > 1)
    for (auto& [c, v] : row) v /= g;
}

// Rank over Q of the rows, by fraction-free elimination on the leading column
// with content removal after each step to keep entries small.
std::size_t rational_rank(std::vector<SparseRow> rows) {
  std::map<int, SparseRow> pivots;
  std::size_t rank = 0;
  for (auto& row : rows) {
    while (!row.empty()) {
      const int lead = row.begin()->first;
      auto it = pivots.find(lead);
      if (it == pivots.end()) {
        normalize(row);
        pivots.emplace(lead, std::move(row));
        ++rank;
        break;
      }
      const Integer p = it->second.begin()->second;
      const Integer q = row.begin()->second;
      SparseRow next;
      for (const auto& [c, v] : row) next[c] += p * v;
      for (const auto& [c, v] : it->second) next[c] -= q * v;
      for (auto e = next.begin(); e != next.end();) e = e->second == 0 ? next.erase(e) : std::next(e);
      normalize(next);
      row = std::move(next);
    }
  }
  return rank;
}

}  // namespace

std::vector<long> reduced_betti(const SimplicialComplex& k) {
  const int top = k.dim() + 1;  // largest face size
  std::vector<std::vector<std::size_t>> by_size(uz(top + 1));
  std::vector<long> pos(k.faces().size());
  for (std::size_t i = 0; i < k.faces().size(); ++i) {
    auto& bucket = by_size[k.faces()[i].size()];
    pos[i] = static_cast<long>(bucket.size());
    bucket.push_back(i);
  }
  // rank of the boundary map from faces of size s to size s-1
  std::vector<std::size_t> rk(uz(top + 2), 0);
  for (int s = 1; s <= top; ++s) {
    std::vector<SparseRow> rows;
    for (std::size_t i : by_size[uz(s)]) {
      const Face& f = k.faces()[i];
      SparseRow row;
      for (std::size_t j = 0; j < f.size(); ++j) {
        Face g = f;
        g.erase(g.begin() + static_cast<std::ptrdiff_t>(j));
        row[static_cast<int>(pos[*k.face_index(g)])] = j % 2 ? -1 : 1;
      }
      rows.push_back(std::move(row));
    }
    rk[uz(s)] = rational_rank(std::move(rows));
  }
  std::vector<long> betti(uz(top + 1));
  for (int s = 0; s <= top; ++s)
    betti[uz(s)] = static_cast<long>(by_size[uz(s)].size()) - static_cast<long>(rk[uz(s)]) -
                   static_cast<long>(rk[uz(s + 1)]);
  return betti;
}

bool is_homology_sphere(const SimplicialComplex& k, int d) {
  if (k.dim() != d) return false;
  const auto b = reduced_betti(k);
  for (std::size_t i = 0; i < b.size(); ++i)
    if (b[i] != (static_cast<int>(i) - 1 == d ? 1 : 0)) return false;
  return true;
}

bool is_acyclic(const SimplicialComplex& k) {
  const auto b = reduced_betti(k);
  return std::all_of(b.begin(), b.end(), [](long x) { return x == 0; });
}

bool is_gorenstein(const SimplicialComplex& k) {
  if (!k.is_pure()) fail(ErrorKind::NotPure, "Gorenstein test needs a pure complex");
  const int d = k.dim();
  for (const auto& f : k.faces()) {
    if (static_cast<int>(f.size()) == d + 1) continue;  // link is {∅}
    if (!is_homology_sphere(link(k, f), d - static_cast<int>(f.size()))) return false;
  }
  return true;
}

bool is_near_gorenstein(const SimplicialComplex& k, const SimplicialComplex& boundary) {
  if (!k.is_pure()) fail(ErrorKind::NotPure, "near-Gorenstein test needs a pure complex");
  const int d = k.dim();
  if (boundary.dim() != d - 1 || !boundary.is_pure() || !is_gorenstein(boundary)) return false;
  std::set<Face> on_boundary;
  for (const auto& g : boundary.faces()) {
    Face f;
    for (int v : g) {
      const auto& name = boundary.vertices()[uz(v)];
      if (std::find(k.vertices().begin(), k.vertices().end(), name) == k.vertices().end()) return false;
      f.push_back(k.vertex_index(name));
    }
    std::sort(f.begin(), f.end());
    if (!k.contains(f)) return false;
    on_boundary.insert(std::move(f));
  }
  for (const auto& f : k.faces()) {
    const SimplicialComplex lk = link(k, f);
    if (on_boundary.count(f)) {
      if (!is_acyclic(lk)) return false;
    } else if (!is_homology_sphere(lk, d - static_cast<int>(f.size()))) {
      return false;
    }
  }
  return true;
}

// ---- shelling ------------------------------------------------------------

namespace {

struct ShellState {
  std::vector<Bitset> masks;  // vertex sets of the facets
  std::size_t width = 0;      // facet size

  // F can follow the placed facets iff its intersection with their union is
  // pure of codimension one: every F ∩ G misses some vertex v whose removal
  // from F is itself such an intersection.
  bool can_follow(const std::vector<int>& placed, int f) const {
    if (placed.empty()) return true;
    const Bitset& F = masks[uz(f)];
    Bitset corners(F.size());  // vertices v with F - v = F ∩ G for some placed G
    for (int g : placed) {
      const Bitset meet = F & masks[uz(g)];
      if (meet.count() + 1 == width) {
        Bitset missing = F;
        missing.for_each([&](std::size_t v) {
          if (!meet.test(v)) corners.set(v);
        });
      }
    }
    if (!corners.any()) return false;
    for (int g : placed) {
      const Bitset meet = F & masks[uz(g)];
      if (corners.subset_of(meet)) return false;
    }
    return true;
  }
};

ShellState shell_state(const SimplicialComplex& k, const std::vector<Face>& facets) {
  ShellState s;
  s.width = facets.empty() ? 0 : facets.front().size();
  for (const auto& f : facets) {
    Bitset b(k.vertices().size());
    for (int v : f) b.set(uz(v));
    s.masks.push_back(std::move(b));
  }
  return s;
}

}  // namespace

bool verify_shelling(const SimplicialComplex& k, const std::vector<Face>& order) {
  if (!k.is_pure()) fail(ErrorKind::NotPure, "shelling needs a pure complex");
  {
    std::vector<Face> a = order, b = k.facets();
    for (auto& f : a) std::sort(f.begin(), f.end());
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) return false;
  }
  const ShellState s = shell_state(k, order);
  std::vector<int> placed;
  for (std::size_t j = 0; j < order.size(); ++j) {
    if (!s.can_follow(placed, static_cast<int>(j))) return false;
    placed.push_back(static_cast<int>(j));
  }
  return true;
}

ShellingSearch find_shelling(const SimplicialComplex& k, std::uint64_t seed, std::size_t node_limit) {
  if (!k.is_pure()) fail(ErrorKind::NotPure, "shelling needs a pure complex");
  const auto& facets = k.facets();
  const ShellState s = shell_state(k, facets);
  const std::size_t m = facets.size();

  // static order: most codimension-one neighbours first, seeded tie-break
  std::vector<int> ridge_count(m, 0);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      if (i != j && s.masks[i].and_count(s.masks[j]) + 1 == s.width) ++ridge_count[i];
  std::vector<std::uint64_t> tie(m);
  std::iota(tie.begin(), tie.end(), 0);
  if (seed != 0) {
    std::mt19937_64 rng(seed);
    std::shuffle(tie.begin(), tie.end(), rng);
  }
  std::vector<int> base(m);
  std::iota(base.begin(), base.end(), 0);
  std::sort(base.begin(), base.end(), [&](int a, int b) {
    if (ridge_count[uz(a)] != ridge_count[uz(b)]) return ridge_count[uz(a)] > ridge_count[uz(b)];
    return tie[uz(a)] < tie[uz(b)];
  });

  ShellingSearch out;
  std::vector<int> placed;
  std::vector<bool> used(m, false);
  bool cut = false;
  std::function<bool()> dfs = [&]() -> bool {
    if (placed.size() == m) return true;
    if (++out.nodes > node_limit) {
      cut = true;
      return false;
    }
    std::vector<std::pair<int, int>> cands;  // (-shared ridges with placed, facet)
    for (int f : base) {
      if (used[uz(f)] || !s.can_follow(placed, f)) continue;
      int shared = 0;
      for (int g : placed)
        if (s.masks[uz(f)].and_count(s.masks[uz(g)]) + 1 == s.width) ++shared;
      cands.emplace_back(-shared, f);
    }
    std::stable_sort(cands.begin(), cands.end(),
                     [](const auto& a, const auto& b) { return a.first < b.first; });
    for (auto [neg, f] : cands) {
      placed.push_back(f);
      used[uz(f)] = true;
      if (dfs()) return true;
      used[uz(f)] = false;
      placed.pop_back();
      if (cut) return false;
    }
    return false;
  };
  if (dfs()) {
    out.status = ShellingStatus::Found;
    for (int f : placed) out.order.push_back(facets[uz(f)]);
  } else {
    out.status = cut ? ShellingStatus::Cutoff : ShellingStatus::Exhausted;
  }
  return out;
}

// ---- generators ----------------------------------------------------------

SimplicialComplex make_simplex(int d) {
  if (d < 0) fail(ErrorKind::DomainError, "simplex dimension must be >= 0");
  std::vector<int> f(uz(d + 1));
  std::iota(f.begin(), f.end(), 1);
  return SimplicialComplex::from_int_facets({f});
}

SimplicialComplex make_boundary_simplex(int d) {
  if (d < 1) fail(ErrorKind::DomainError, "boundary simplex needs dimension >= 1");
  std::vector<std::vector<int>> facets;
  for (int skip = 1; skip <= d + 1; ++skip) {
    std::vector<int> f;
    for (int v = 1; v <= d + 1; ++v)
      if (v != skip) f.push_back(v);
    facets.push_back(std::move(f));
  }
  return SimplicialComplex::from_int_facets(facets);
}

SimplicialComplex make_polygon(int n) {
  if (n < 3) fail(ErrorKind::DomainError, "a polygon needs at least 3 vertices");
  std::vector<std::vector<int>> edges;
  for (int i = 1; i <= n; ++i) edges.push_back({i, i % n + 1});
  return SimplicialComplex::from_int_facets(edges);
}

GradedPoset make_cube3() {
  // vertex 1 + (x + 2y + 4z) for x, y, z in {0, 1}
  std::vector<std::vector<int>> facets;
  for (int axis = 0; axis < 3; ++axis)
    for (int side = 0; side < 2; ++side) {
      std::vector<int> f;
      for (int v = 0; v < 8; ++v)
        if ((v >> axis & 1) == side) f.push_back(v + 1);
      facets.push_back(std::move(f));
    }
  return face_lattice_from_int_facets(facets);
}

GradedPoset make_boolean(int n) { return boolean_algebra(n); }

Stacked make_stacked(int d, int k, std::uint64_t seed) {
  if (d < 1) fail(ErrorKind::DomainError, "stacked polytope needs dimension >= 1");
  if (k < 1) fail(ErrorKind::DomainError, "stacked polytope needs k >= 1");
  std::vector<int> first(uz(d + 1));
  std::iota(first.begin(), first.end(), 1);
  std::vector<std::vector<int>> simplices{first};
  std::vector<std::vector<int>> surface;
  for (int skip = 0; skip <= d; ++skip) {
    std::vector<int> f;
    for (int v : first)
      if (v != first[uz(skip)]) f.push_back(v);
    surface.push_back(std::move(f));
  }
  std::mt19937_64 rng(seed);
  int next_vertex = d + 2;
  for (int step = 1; step < k; ++step) {
    std::size_t pick = surface.size() - 1;
    if (seed != 0) pick = std::uniform_int_distribution<std::size_t>(0, surface.size() - 1)(rng);
    const std::vector<int> base = surface[pick];
    surface.erase(surface.begin() + static_cast<std::ptrdiff_t>(pick));
    const int v = next_vertex++;
    for (std::size_t skip = 0; skip < base.size(); ++skip) {
      std::vector<int> f;
      for (std::size_t i = 0; i < base.size(); ++i)
        if (i != skip) f.push_back(base[i]);
      f.push_back(v);
      surface.push_back(std::move(f));
    }
    std::vector<int> simplex = base;
    simplex.push_back(v);
    simplices.push_back(std::move(simplex));
  }
  Stacked st{SimplicialComplex::from_int_facets(surface), SimplicialComplex::from_int_facets(simplices), {}};
  for (const auto& s : simplices) {
    std::vector<std::string> names;
    for (int v : s) names.push_back(std::to_string(v));
    st.order.push_back(st.ball.face_from_ids(names));
  }
  return st;
}

CdPolynomial stacked_cd(int d, int k) {
  if (d < 2 || k < 1) fail(ErrorKind::DomainError, "stacked_cd needs d >= 2 and k >= 1");
  const CdPolynomial top = cd_index(face_poset(make_boundary_simplex(d), true));
  const CdPolynomial facet = cd_index(face_poset(make_boundary_simplex(d - 1), true));
  return top * Integer(k) - facet * CdPolynomial::letter_first() * Integer(k - 1);
}

std::vector<ShellingStep> shelling_steps(const SimplicialComplex& k, const std::vector<Face>& order) {
  if (!verify_shelling(k, order)) fail(ErrorKind::DomainError, "order is not a shelling");
  auto names = [&](const Face& f) {
    std::vector<std::string> out;
    for (int v : f) out.push_back(k.vertices()[uz(v)]);
    return out;
  };
  auto prefix_local = [&](std::size_t count) {
    std::vector<std::vector<std::string>> facets;
    for (std::size_t j = 0; j < count; ++j) facets.push_back(names(order[j]));
    return local_index(face_poset(SimplicialComplex::from_facets(facets), true)).cd;
  };
  const CdPolynomial c = CdPolynomial::letter_first(), d = CdPolynomial::letter_second();
  std::vector<ShellingStep> steps;
  CdPolynomial before = order.size() >= 3 ? prefix_local(1) : CdPolynomial{};
  for (std::size_t i = 1; i + 2 <= order.size(); ++i) {
    ShellingStep st;
    st.step = static_cast<int>(i);
    Face facet = order[i];
    std::sort(facet.begin(), facet.end());
    st.facet = facet;
    std::vector<std::vector<std::string>> ridges;
    for (std::size_t skip = 0; skip < facet.size(); ++skip) {
      Face ridge;
      for (std::size_t t = 0; t < facet.size(); ++t)
        if (t != skip) ridge.push_back(facet[t]);
      for (std::size_t j = 0; j < i; ++j) {
        Face prev = order[j];
        std::sort(prev.begin(), prev.end());
        if (std::includes(prev.begin(), prev.end(), ridge.begin(), ridge.end())) {
          ridges.push_back(names(ridge));
          break;
        }
      }
    }
    st.gamma = SimplicialComplex::from_facets(ridges);
    st.before = before;
    st.after = prefix_local(i + 1);
    st.gamma_local = local_index(face_poset(st.gamma, true)).cd;
    st.gamma_boundary = cd_index(face_poset(pseudomanifold_boundary(st.gamma), true));
    st.holds = st.after - st.before == st.gamma_local * c + st.gamma_boundary * d;
    before = st.after;
    steps.push_back(std::move(st));
  }
  return steps;
}

}  // namespace cdindex
