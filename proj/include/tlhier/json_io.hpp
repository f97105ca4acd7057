#pragma once

#include <json.hpp>

#include "tlhier/monoid.hpp"
#include "tlhier/rating.hpp"
#include "tlhier/tl_logic.hpp"

namespace tlhier {

using Json = nlohmann::json;

Json alphabet_to_json(const Alphabet& a);
Alphabet alphabet_from_json(const Json& j);

Json dfa_to_json(const Dfa& d);
Dfa dfa_from_json(const Json& j);

Json monoid_to_json(const Monoid& m);
Monoid monoid_from_json(const Json& j);

Json morphism_to_json(const Morphism& m);
Morphism morphism_from_json(const Json& j);

Json semiring_to_json(const IdemSemiring& r);
IdemSemiring semiring_from_json(const Json& j);

Json formula_to_json(const TlPtr& f, const Alphabet& a);
TlPtr formula_from_json(const Json& j, const Alphabet& a);

// Standard result envelope for the command-line tool.
Json envelope(const std::string& command, Json result);

}  // namespace tlhier
