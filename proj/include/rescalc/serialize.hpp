#pragma once

// JSON forms of the engine's values. Objects are key-sorted, scalars are exact
// ("num"/"den" decimal strings) and variable indices are 1-based.

#include "rescalc/current.hpp"
#include "rescalc/monomial_algebra.hpp"
#include "rescalc/residue_decomposition.hpp"

#include <json.hpp>

namespace rescalc {

inline constexpr int kJsonSchemaVersion = 1;

using Json = nlohmann::json;

Json to_json(const Current& t);
Current current_from_json(const Json& j, int n);

Json to_json(const CurrentVector& t);
CurrentVector current_vector_from_json(const Json& j, int n);

Json to_json(const MonIdeal& ideal);
MonIdeal ideal_from_json(const Json& j, int n);

Json to_json(const MonModule& m);
MonModule module_from_json(const Json& j, int n);

Json to_json(MonPrime p, int n);
MonPrime prime_from_json(const Json& j);

Json to_json(const DecompositionReport& rep);
DecompositionReport report_from_json(const Json& j);

// {version, command, inputs, result}
Json envelope(const std::string& command, Json inputs, Json result);

} // namespace rescalc
