#pragma once

// JSON encodings of the library objects. Parsing failures throw InvalidInput.

#include "json.hpp"

#include "nak/brauer.hpp"
#include "nak/complexes.hpp"
#include "nak/disc.hpp"
#include "nak/modcat.hpp"
#include "nak/smscfg.hpp"

namespace nak {

using Json = nlohmann::ordered_json;

Json to_json(const Arc& a, int e);
Arc arc_from_json(const Json& j, int e);

Json to_json(const Triangulation& X);
Triangulation triangulation_from_json(const Json& j);

Json to_json(const BrauerTree& G);
BrauerTree brauer_from_json(const Json& j);

Json to_json(const Summand& X);
Summand summand_from_json(const Json& j, const Algebra& A);
/// Summands in canonical order.
Json to_json(const TwoTerm& T);
TwoTerm twoterm_from_json(const Json& j);

Json to_json(const Ind& p);
Ind ind_from_json(const Json& j);
Json to_json(const Configuration& C);
Configuration configuration_from_json(const Json& j);

Json parse_json(const std::string& text);

}  // namespace nak
