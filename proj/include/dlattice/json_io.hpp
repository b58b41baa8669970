#pragma once

#include <string>

#include <json.hpp>

#include "dlattice/report.hpp"
#include "dlattice/submeasures.hpp"

namespace dlat::json {

using Json = nlohmann::ordered_json;

/// {"n", "zero", "one", "labels", "sum"} with null for undefined sums.
Json algebra_to_json(const EffectAlgebra& alg);
/// Throws Error(Format) on malformed input; axiom failures surface from
/// `EffectAlgebra::build` with their own kinds.
AlgebraPtr algebra_from_json(const Json& j);

/// Integers as numbers, other rationals as "p/q".
Json rational_to_json(const Rational& q);
/// Accepts integers, integral floats and strings such as "3/4" or "0.25".
Rational rational_from_json(const Json& j);

/// {"values": [rational | "inf"], "k": rational}
Json submeasure_to_json(const KSubmeasure& eta);
KSubmeasure submeasure_from_json(const AlgebraPtr& alg, const Json& j);

/// {"dim", "mu": [[rational]], "norm": "max" | "sum"}; "norm" is optional.
Json measure_to_json(const ModularMeasure& mu);
ModularMeasure measure_from_json(const AlgebraPtr& alg, const Json& j);

/// Serialized report; timings are included only when requested.
Json report_to_json(const Report& report, bool with_timings = false);

/// Parses text, mapping parser failures to Error(Format).
Json parse(const std::string& text);
Json read_file(const std::string& path);

}  // namespace dlat::json
