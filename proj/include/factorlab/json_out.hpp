#pragma once

#include <json.hpp>

#include "factorlab/verify.hpp"

namespace factorlab {

// Stable JSON shapes for every report the CLI can emit. Documented in the
// README; tests pin the field names.
nlohmann::json to_json(const SolveReport& r);
nlohmann::json to_json(const Graph& g, const Decomposition& d);
nlohmann::json to_json(const Graph& g, const Certificate& c);
nlohmann::json to_json(const ConditionReport& r);
nlohmann::json to_json(const CheckResult& r);
nlohmann::json to_json(const VerificationSummary& s);

}  // namespace factorlab
