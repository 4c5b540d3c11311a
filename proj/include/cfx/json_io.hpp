#pragma once

#include <json.hpp>

#include <string>

#include "cfx/cf_core.hpp"
#include "cfx/recurrence_sequences.hpp"
#include "cfx/theta_transforms.hpp"

namespace cfx::json {

using nlohmann::json;

// Integers and rationals are always decimal strings ("p" or "p/q").

json to_json(const Integer& v);
json to_json(const Rational& v);

Integer integer_from_json(const json& j);
Rational rational_from_json(const json& j);

/// [[deg_x, deg_y, "coeff"], ...]
json to_json(const BivarPoly& f);
/// Accepts the triple list or a polynomial string such as "X+Y".
BivarPoly poly_from_json(const json& j);

/// {"integer_part": "p/q", "terms": [["a", "b"], ...]}
json to_json(const GeneralizedCF& cf);
GeneralizedCF cf_from_json(const json& j);

/// {"a0": "n", "quotients": ["n", ...]}
json to_json(const RegularCF& rcf);
RegularCF regular_from_json(const json& j);

/// {"x": [...], "y": [...]}
json to_json(const SumSpec& s);
SumSpec sumspec_from_json(const json& j);

/// {"name": "...", "values": ["1", "1", "2", ...]}
json sequence_to_json(const std::string& name, const SequencePrefix& seq);
SequencePrefix sequence_from_json(const json& j);

/*
 * Recurrence config:
 *   {"F": <poly>, "x1": "1", "description": "..."}        stationary
 *   {"family": [<poly>, ...], "x1": "1"}                  per-index list
 * where <poly> is anything poly_from_json accepts.
 */
json to_json(const PolyRecurrence& rec);
PolyRecurrence recurrence_from_json(const json& j);

}  // namespace cfx::json
