#pragma once

#include <json.hpp>

#include "burnside/induction.hpp"

namespace burnside {

/// Wire format of a formula:
/// {group, decomposition, ring_primes,
///  terms: [{subgroup: {generators, order}, class_size, coefficient}],
///  verified, hypothesis_ok}.
/// Rationals are strings "p/q" (or "p"); generators are 0-based cycle strings.
nlohmann::json formula_to_json(const InductionFormula& f);
InductionFormula formula_from_json(const nlohmann::json& j, std::size_t cap = order_cap());

/// Array of {subgroup_class_key, order, index, class_size, coefficient}.
nlohmann::json burnside_to_json(const BurnsideElement& x);

/// {labels, leq} adjacency form; labels are canonical subgroup keys when the
/// poset came from a collection.
nlohmann::json poset_to_json(const Poset& P);

/// {objects, zeta, iso_classes, ei}; test-fixture format.
nlohmann::json fincat_to_json(const FinCat& C);
FinCat fincat_from_json(const nlohmann::json& j);

nlohmann::json character_report_to_json(const CharacterReport& r, const PermGroup& G);
nlohmann::json support_report_to_json(const SupportReport& r, const PermGroup& G);
nlohmann::json wedge_report_to_json(const WedgeReport& w);

}  // namespace burnside
