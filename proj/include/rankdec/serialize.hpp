#pragma once
// JSON and CSV formats. Elements are written as their integer encodings.

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"
#include "rankdec/analysis.hpp"
#include "rankdec/code.hpp"
#include "rankdec/geometry.hpp"
#include "rankdec/subspace.hpp"

namespace rankdec {

using Json = nlohmann::ordered_json;

/// Parses text; syntax errors become ParseError with line and column.
Json parse_json(const std::string& text, const std::string& source = "input");
Json read_json_file(const std::string& path);

/// {"p", "a", "m", "modulus"} plus "fq_basis" when Γ is not the power basis.
Json to_json(const FieldContext& F);
ContextPtr context_from_json(const Json& j);

Json to_json(const Vector& v);
Vector vector_from_json(const FieldContext& F, const Json& j, const std::string& where);
Json to_json(const Matrix& M);
Matrix matrix_from_json(const FieldContext& F, const Json& j, const std::string& where);

/// {"base_e", "dim", "basis"}.
Json to_json(const Subspace& U);
Subspace subspace_from_json(const ContextPtr& ctx, const Json& j);

/// {"k", "dim", "basis"}: basis rows of length k.
Json to_json(const System& U);
System system_from_json(const ContextPtr& ctx, const Json& j);

/// Code spec: {"field": {...}, "blocks": [{"entries": [...]} | {"geometric": {"lambda_degree", "t", "lambda"?}}]}.
/// A geometric block without "lambda" uses find_element_of_degree(lambda_degree, seed).
RankCode code_from_spec(const Json& spec, std::uint64_t seed = 0);

/// Canonical code file: field, n, k, generator and the decomposition record when present.
Json to_json(const RankCode& C);
/// Accepts a canonical code file or a code spec.
RankCode code_from_json(const Json& j, std::uint64_t seed = 0);

/// {"counts", "min_distance", "messages"}.
Json to_json(const WeightDistribution& d);
/// "weight,count" then one row per weight.
std::string to_csv(const WeightDistribution& d);

Json to_json(const MinWeightReport& r);
Json to_json(const NonprimeVerdict& v);
Json to_json(const PrimeVerdict& v);

}  // namespace rankdec
