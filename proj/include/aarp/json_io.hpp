#pragma once

#include <string>

#include <json.hpp>

#include "aarp/data.hpp"
#include "aarp/relation.hpp"
#include "aarp/verdict.hpp"

namespace aarp {

using Json = nlohmann::ordered_json;

/// Data set schema:
///   {"universe": [label | [rationals] | {"label": ..., "point": [...]}],
///    "observations": [{"budget": {"explicit": [refs]} | {"linear": {"p": [...], "m": "10"}},
///                      "chosen": [refs]}]}
/// A ref is a label, a point, or an integer index. Rationals are strings
/// ("3", "-1/2"); JSON integers are accepted, floating-point numbers are not.
/// Errors are ParseError with the offending field path.
DataSet dataset_from_json(const Json& j);
DataSet dataset_from_text(const std::string& text);
Json dataset_to_json(const DataSet& d);

Json transform_to_json(const Transform& f);
Transform transform_from_json(const Json& j, const std::string& path = "transform");

Json bundle_to_json(const Bundle& b, const Universe& u);
Bundle bundle_from_json(const Json& j, const Universe& u, const std::string& path = "bundle");

Json verdict_to_json(const Verdict& v, const Universe& u);
Verdict verdict_from_json(const Json& j, const Universe& u);

Json relation_to_json(const Relation& r, const Universe& u);
Relation relation_from_json(const Json& j, const Universe& u);

Json regularity_to_json(const RegularityReport& r, const Universe& u);

/// Human-readable rendering of a verdict document (as produced by
/// verdict_to_json); observation numbers are printed 1-based.
std::string render_human(const Json& verdict);

}  // namespace aarp
