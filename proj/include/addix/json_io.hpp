#pragma once

// JSON forms of fields, witnesses and search results.

#include <json.hpp>

#include "addix/additive_index.hpp"
#include "addix/field.hpp"

namespace addix {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

Json digits_json(const FieldCtx& ctx, Elem e);
Elem elem_from_json(const FieldCtx& ctx, const Json& j);

/// {"p","n","modulus","basis","generator"}; null entries use the defaults.
FieldSpec field_spec_from_json(const Json& j);
Json field_json(const FieldCtx& ctx);

/// {k, subspace_rref, M_coeffs, constants: [[label, digits], ...]}
Json witness_json(const FieldCtx& ctx, const AffineWitness& w);
AffineWitness witness_from_json(const FieldCtx& ctx, const Json& j);

Json index_result_json(const FieldCtx& ctx, const IndexResult& r);

}  // namespace addix
