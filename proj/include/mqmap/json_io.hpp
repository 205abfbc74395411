#pragma once

#include <json.hpp>

#include "mqmap/classify.hpp"
#include "mqmap/error.hpp"
#include "mqmap/field.hpp"
#include "mqmap/homprod.hpp"
#include "mqmap/qmap.hpp"
#include "mqmap/report.hpp"
#include "mqmap/tensor.hpp"

namespace mqm {

using json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

// Parsers throw InvalidArgument on schema errors.

// {"p", "n", "modulus"} or a shorthand name such as "F4" or "GF(8)".
FieldPtr field_from_json(const json& j);
json to_json(const FieldDesc& d);

// A field descriptor, "Z4" or {"m": 4}, an explicit table
// {"size", "add", "mul", "zero", "one"}, or {"product": [a, b]}.
RingPtr ring_from_json(const json& j);
json ring_to_json(const Ring& r);

// Field elements are coefficient arrays (constant term first); plain
// integers are read as element indices. Other rings use indices.
Elem elem_from_json(const Ring& r, const json& j);
json elem_to_json(const Ring& r, Elem x);
Vec vec_from_json(const Field& L, const json& j);
json vec_to_json(const Field& L, const Vec& v);

// {"domain", "codomain", "form": "table" | "basis" | "power", ...}
// table: "values"; basis: "basis_vals", "gram"; power: "exponent".
QuadMapTable map_from_json(const json& j);
json map_to_json(const QuadMapTable& q);
json map_to_json(const QuadMapBasis& q);

json to_json(const TensorAlgebra& A);
json to_json(const ExtendedQuadMap& qt);

HomSpec hom_from_json(const FieldPtr& K, const FieldPtr& L, const json& j);
json to_json(const HomSpec& h);

// Witness arguments are element indices.
json to_json(const Report& r);
Report report_from_json(const json& j);
json to_json(const Decomposition& d);
// Witness elements are written as elements of K.
json to_json(const Verdict& v, const Field& K);
Verdict verdict_from_json(const json& j, const Field& K);
json to_json(const ScanReport& s);
json to_json(const ArtinResult& a, const Field& L);
json to_json(const SymsumResult& s, const Field& K);
json to_json(const Error& e);

}  // namespace mqm
