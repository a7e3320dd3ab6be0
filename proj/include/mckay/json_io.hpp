#pragma once

// JSON schemas for every exported object.  ordered_json keeps key order
// stable so identical runs serialize byte-identically.

#include <json.hpp>

#include "mckay/catalog.hpp"
#include "mckay/characters.hpp"
#include "mckay/fold.hpp"

namespace mckay {

using Json = nlohmann::ordered_json;

// {"m": m, "terms": [[exponent, numerator, denominator], ...]}
Json cyclotomic_to_json(const Cyclotomic& z);
Cyclotomic cyclotomic_from_json(const Json& j);

// {"m": order, "generators": [[4 entries] ...]}; an entry may be an integer,
// a terms array, or a full cyclotomic object.
GroupPtr group_from_json(const Json& j);

Json table_to_json(const CharacterTable& table);

Json matrix_to_json(const IntMatrix& m, const std::vector<std::string>& labels);

Json classification_to_json(const CartanClassification& c);

Json fold_to_json(const FoldResult& fold);

}  // namespace mckay
