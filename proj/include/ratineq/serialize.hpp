#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "ratineq/checks.hpp"
#include "ratineq/generators.hpp"
#include "ratineq/norms.hpp"
#include "ratineq/rational.hpp"

namespace ratineq {

/// Complex numbers serialize as [re, im]; absent root lists as null.
nlohmann::json to_json(cplx value);
nlohmann::json to_json(const Polynomial& p);
nlohmann::json to_json(const RationalFn& r);
nlohmann::json to_json(const NormEstimate& est);
nlohmann::json to_json(const CheckReport& rep);
nlohmann::json to_json(const SuiteCounts& counts);
nlohmann::json to_json(const SuiteOptions& opts);
nlohmann::json to_json(const SuiteReport& report);
nlohmann::json to_json(const InstanceSpec& spec);

cplx cplx_from_json(const nlohmann::json& j);
Polynomial polynomial_from_json(const nlohmann::json& j);
RationalFn rational_from_json(const nlohmann::json& j);
InstanceSpec instance_spec_from_json(const nlohmann::json& j);

/// True when expanding leading * prod (z - z_j) reproduces the stored
/// coefficients to the given relative tolerance.
bool roots_consistent(const Polynomial& p, double rel_tol = 1e-8);

/// CSV with one row per report; fields match the JSON keys, doubles printed
/// with 17 significant digits, theta empty for global checks.
std::string reports_csv(const std::vector<CheckReport>& reports);

} // namespace ratineq
