#pragma once

#include <string>

#include <json.hpp>

#include "affhecke/grothendieck.hpp"
#include "affhecke/multisegment.hpp"
#include "affhecke/rmatrix.hpp"
#include "affhecke/uqn.hpp"

namespace affhecke::report {

// nlohmann::json keeps object keys in a std::map, so dumps are key-sorted.
using Json = nlohmann::json;

enum class Format { json, table };

/// "json" or "table"; anything else throws DomainError.
Format parse_format(const std::string& name);

/// Deterministic text: JSON with two-space indentation, or a two-column
/// key/value table for objects (nested values are printed as compact JSON).
std::string emit(const Json& j, Format f);

/// Integers as JSON numbers, everything else as "p/q" strings.
Json rational(const Rational& r);

/// [{i, j, mult}] in PBW order.
Json multisegment(const Multisegment& m);

/// [{multisegment, text, coeff}] sorted by multisegment.
Json expansion(const DualExpansion& e);

/// {weight, index, entries} with Laurent strings.
Json kmatrix(const KMatrix& K);

Json hook_verdict(const Partition& lambda, const std::vector<int>& points, const HookVerdict& v);

Json singularities(const SingularityReport& r);

}  // namespace affhecke::report
