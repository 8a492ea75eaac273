#pragma once

#include "clifford/multivector.hpp"

#include "json.hpp"

namespace clifford {

// {"signature": "euclidean" | {"p": n}, "mode": "rational" | "float",
//  "terms": [{"indices": [...], "coeff": "n/d" | number}, ...]}
// Terms come out in grade-then-lexicographic order.
nlohmann::json to_json(const Multivector &a);
// Throws DomainError on malformed records.
Multivector from_json(const nlohmann::json &record);

} // namespace clifford
