#pragma once

#include <json.hpp>
#include <string>

#include "cdindex/complexes.hpp"
#include "cdindex/flagcd.hpp"
#include "cdindex/ncpoly.hpp"
#include "cdindex/poset.hpp"
#include "cdindex/subdivision.hpp"

namespace cdindex::io {

// Insertion-ordered so that reports serialize byte-for-byte reproducibly.
using Json = nlohmann::ordered_json;

inline constexpr int kSchema = 1;

// All readers throw Error(Parse) on malformed input. Ids may be given as JSON
// strings or integers; integers are read as their decimal text.
Json parse(const std::string& text);

// {"elements": [...], "covers": [[lo, hi], ...]}
Json to_json(const GradedPoset& p);
// Accepts a poset object or a complex object (its face poset, 1̂ adjoined
// when "with_top" is true).
GradedPoset poset_from_json(const Json& j);

// {"facets": [[v, ...], ...], "with_top": bool}
Json to_json(const SimplicialComplex& k, bool with_top);
SimplicialComplex complex_from_json(const Json& j);
bool is_complex(const Json& j);

// {"source": <poset|complex>, "target": <poset|complex>, "carrier": {src: tgt}}.
// With complexes on both sides, "vertex_carrier": {v: [w, ...]} may replace
// "carrier"; face ids are then "{v1,v2}" and 1̂ is "top".
Json to_json(const SubdivisionMap& m);
SubdivisionMap subdivision_from_json(const Json& j);

// {"word": "coefficient"}, the empty word keyed "1".
Json to_json(const AbPolynomial& p);
Json to_json(const CdPolynomial& p);
AbPolynomial ab_from_json(const Json& j);
CdPolynomial cd_from_json(const Json& j);

// Coefficient list, constant term first. Integers beyond 64 bits are strings.
Json to_json(const UniPolynomial& p);
UniPolynomial uni_from_json(const Json& j);

Json integer_json(const Integer& k);
Integer integer_from_json(const Json& j);

// [{"ranks": [..], "value": ..}, ...] over every rank set, in mask order.
Json to_json(const FlagVector& v);

}  // namespace cdindex::io
