#include "cdindex/io.hpp"

#include <algorithm>
#include <limits>

#include "cdindex/errors.hpp"

namespace cdindex::io {

namespace {

[[noreturn]] void bad(const std::string& what) { fail(ErrorKind::Parse, what); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) bad("expected a JSON object");
  auto it = j.find(key);
  if (it == j.end()) bad(std::string("missing field \"") + key + "\"");
  return *it;
}

std::string id_of(const Json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer()) return std::to_string(j.get<long long>());
  bad("element ids must be strings or integers, got " + j.dump());
}

std::vector<std::string> id_list(const Json& j) {
  if (!j.is_array()) bad("expected an array of ids, got " + j.dump());
  std::vector<std::string> out;
  for (const auto& e : j) out.push_back(id_of(e));
  return out;
}

template <class Poly>
Json poly_json(const Poly& p) {
  Json j = Json::object();
  for (const auto& [w, k] : p.display_terms()) j[w.empty() ? "1" : w] = k.str();
  return j;
}

template <class Poly>
Poly poly_from(const Json& j, char first, char second) {
  if (!j.is_object()) bad("polynomial must be an object of word -> coefficient");
  Poly p;
  for (const auto& [w, k] : j.items()) {
    const std::string word = w == "1" ? "" : w;
    for (char ch : word)
      if (ch != first && ch != second) bad("bad letter in word \"" + w + "\"");
    p.add_term(word, integer_from_json(k));
  }
  return p;
}

}  // namespace

Json parse(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    bad(std::string("invalid JSON: ") + e.what());
  }
}

Json integer_json(const Integer& k) {
  if (k >= std::numeric_limits<long long>::min() && k <= std::numeric_limits<long long>::max())
    return static_cast<long long>(k);
  return k.str();
}

Integer integer_from_json(const Json& j) {
  if (j.is_number_integer()) return Integer(j.get<long long>());
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    const std::size_t start = !s.empty() && (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (start == s.size() || !std::all_of(s.begin() + static_cast<std::ptrdiff_t>(start), s.end(),
                                          [](char c) { return c >= '0' && c <= '9'; }))
      bad("bad integer \"" + s + "\"");
    return Integer(s);
  }
  bad("expected an integer, got " + j.dump());
}

Json to_json(const GradedPoset& p) {
  Json j;
  j["elements"] = p.ids();
  auto pairs = p.cover_pairs();
  std::sort(pairs.begin(), pairs.end());
  Json covers = Json::array();
  for (auto [lo, hi] : pairs) covers.push_back({p.id(lo), p.id(hi)});
  j["covers"] = covers;
  return j;
}

bool is_complex(const Json& j) { return j.is_object() && j.contains("facets"); }

GradedPoset poset_from_json(const Json& j) {
  if (is_complex(j)) return face_poset(complex_from_json(j), j.value("with_top", true));
  const auto elements = id_list(field(j, "elements"));
  std::vector<std::pair<ElementId, ElementId>> covers;
  const Json& cv = field(j, "covers");
  if (!cv.is_array()) bad("\"covers\" must be an array");
  for (const auto& c : cv) {
    if (!c.is_array() || c.size() != 2) bad("each cover must be a [lower, upper] pair, got " + c.dump());
    covers.emplace_back(id_of(c[0]), id_of(c[1]));
  }
  std::vector<std::string> sorted = elements;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) bad("duplicate element ids");
  return GradedPoset::build(elements, covers);
}

Json to_json(const SimplicialComplex& k, bool with_top) {
  Json facets = Json::array();
  for (const auto& f : k.facets()) {
    Json vs = Json::array();
    for (int v : f) vs.push_back(k.vertices()[static_cast<std::size_t>(v)]);
    facets.push_back(vs);
  }
  Json j;
  j["facets"] = facets;
  j["with_top"] = with_top;
  return j;
}

SimplicialComplex complex_from_json(const Json& j) {
  const Json& fs = field(j, "facets");
  if (!fs.is_array()) bad("\"facets\" must be an array");
  std::vector<std::vector<std::string>> facets;
  for (const auto& f : fs) facets.push_back(id_list(f));
  std::vector<std::string> extra;
  if (j.contains("vertices")) extra = id_list(j["vertices"]);
  return SimplicialComplex::from_facets(facets, extra);
}

Json to_json(const SubdivisionMap& m) {
  Json j;
  j["source"] = to_json(m.source());
  j["target"] = to_json(m.target());
  Json c = Json::object();
  for (std::size_t x = 0; x < m.source().size(); ++x)
    c[m.source().id(static_cast<Index>(x))] = m.target().id(m.carrier(static_cast<Index>(x)));
  j["carrier"] = c;
  return j;
}

SubdivisionMap subdivision_from_json(const Json& j) {
  const Json& src = field(j, "source");
  const Json& tgt = field(j, "target");
  if (j.contains("vertex_carrier")) {
    if (!is_complex(src) || !is_complex(tgt)) bad("\"vertex_carrier\" needs complexes on both sides");
    const Json& vc = j["vertex_carrier"];
    if (!vc.is_object()) bad("\"vertex_carrier\" must be an object");
    std::map<std::string, std::vector<std::string>> carrier;
    for (const auto& [v, face] : vc.items()) carrier[v] = id_list(face);
    const bool top = src.value("with_top", true);
    if (top != tgt.value("with_top", true)) bad("source and target disagree on \"with_top\"");
    return simplicial_subdivision_map(complex_from_json(src), complex_from_json(tgt), carrier, top);
  }
  const Json& c = field(j, "carrier");
  if (!c.is_object()) bad("\"carrier\" must be an object");
  std::map<std::string, std::string> carrier;
  for (const auto& [from, to] : c.items()) carrier[from] = id_of(to);
  return SubdivisionMap::from_ids(poset_from_json(src), poset_from_json(tgt), carrier);
}

Json to_json(const AbPolynomial& p) { return poly_json(p); }
Json to_json(const CdPolynomial& p) { return poly_json(p); }
AbPolynomial ab_from_json(const Json& j) { return poly_from<AbPolynomial>(j, 'a', 'b'); }
CdPolynomial cd_from_json(const Json& j) { return poly_from<CdPolynomial>(j, 'c', 'd'); }

Json to_json(const UniPolynomial& p) {
  Json j = Json::array();
  for (const auto& k : p.coeffs()) j.push_back(integer_json(k));
  return j;
}

UniPolynomial uni_from_json(const Json& j) {
  if (!j.is_array()) bad("polynomial must be a coefficient array");
  std::vector<Integer> c;
  for (const auto& k : j) c.push_back(integer_from_json(k));
  return UniPolynomial(std::move(c));
}

Json to_json(const FlagVector& v) {
  Json out = Json::array();
  for (std::uint64_t m = 0; m < v.values.size(); ++m) {
    Json ranks = Json::array();
    for (int i = 0; i < v.n; ++i)
      if (m >> i & 1U) ranks.push_back(i + 1);
    Json e;
    e["ranks"] = ranks;
    e["value"] = integer_json(v.values[m]);
    out.push_back(e);
  }
  return out;
}

}  // namespace cdindex::io
