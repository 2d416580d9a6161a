#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ratineq/checks.hpp"
#include "ratineq/generators.hpp"

namespace ratineq {

/// Canonical beta set exercised by the beta-dependent checks.
std::vector<cplx> default_betas();

struct VerifyConfig {
    std::string suite = "all"; // identities|rational|polynomial|lemmas|sharpness|all
    int instances = 50;
    int grid = 128;
    std::uint64_t seed = 0;
    std::vector<double> k_values{1.0, 1.5, 2.0};
    std::vector<cplx> betas; // empty -> default_betas()
    Tolerances tol;
    // extremal family swept by the sharpness suite
    std::vector<int> sharp_n{1, 2, 3};
    std::vector<double> sharp_k{1.0, 2.0};
    std::vector<double> sharp_a{2.0, 3.0};
};

bool is_known_suite(std::string_view name);

/// Deterministic random instances in the style of the named suites: per k in
/// k_values, `count` instances with n in 1..8 and occasional boundary zeros.
std::vector<SuiteInstance> make_instances(const std::vector<double>& k_values, int count,
                                          std::uint64_t seed);

/// Runs the named suite (or all of them) over generated instances, or over
/// `file_instances` when provided (identities and sharpness always generate
/// their own subjects).
SuiteReport run_verify(const VerifyConfig& cfg,
                       const std::vector<SuiteInstance>* file_instances = nullptr);

struct SweepRow {
    double k = 1.0;
    double beta_mod = 0.0;
    double beta_arg = 0.0;
    std::string check_id;
    double min_slack = 0.0;
    std::int64_t points = 0;
};

struct SweepConfig {
    int beta_moduli = 8;  // modulus grid 0..1 inclusive
    int beta_phases = 16; // phase grid over [0, 2pi)
    std::vector<double> k_values{1.0, 1.5, 2.0};
    int instances = 20;
    int grid = 64;
    std::uint64_t seed = 0;
    Tolerances tol;
    bool extremal = false; // sweep the extremal family instead of random instances
    std::vector<int> extremal_n{2};
    std::vector<double> extremal_a{2.0};
};

/// Min-over-instances-and-grid slack of the beta-dependent bounds on a polar
/// beta grid; rows ordered by (k, |beta|, arg beta, check).
std::vector<SweepRow> sweep_beta(const SweepConfig& cfg);

std::string sweep_csv(const std::vector<SweepRow>& rows);

} // namespace ratineq
