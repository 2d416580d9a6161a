#pragma once

#include <cstdint>
#include <vector>

#include "ratineq/rational.hpp"

namespace ratineq {

/// Recipe for one random instance. Zero moduli are drawn from
/// [k, k + zero_width] (exactly k for boundary draws), pole moduli from
/// [1 + pole_margin, 1 + pole_margin + pole_width], all angles uniform in
/// [0, 2pi). The draw order (zeros, poles, leading coefficient) is fixed so
/// a given spec always produces the same instance.
struct InstanceSpec {
    int n = 4;
    double k = 1.0;
    double zero_width = 1.0;
    double pole_margin = 0.5;
    double pole_width = 1.0;
    double boundary_prob = 0.0; // chance that a zero lands exactly on |z| = k
    bool force_boundary = false;
    std::uint64_t seed = 0;

    void validate() const; // throws std::invalid_argument
};

/// Child stream index -> decorrelated 64-bit seed (splitmix64 scramble).
std::uint64_t split_seed(std::uint64_t base, std::uint64_t index);

/// Poles only; reads just the pole fields of the recipe.
PoleSet gen_poles(const InstanceSpec& spec);

/// Full instance with the zero list attached to the numerator.
RationalFn gen_instance(const InstanceSpec& spec);

/// ((z + k)/(z - a))^n with a > 1, k >= 1: the equality family of the
/// sharp bounds.
RationalFn extremal_instance(int n, double k, double a);

/// r = B for the given poles; the numerator carries the reflected zeros
/// 1/conj(a_j) and leading coefficient prod(-conj(a_j)).
RationalFn blaschke_instance(const PoleSet& poles);

/// {B, B + 1}: equality witnesses for the derivative bounds.
std::vector<RationalFn> boundary_cases(const PoleSet& poles);

/// Random tuples for the scalar product inequality: lengths in [1, max_len],
/// entries in [1, zeta_max].
std::vector<std::vector<double>> gen_zeta_tuples(int count, int max_len, double zeta_max,
                                                 std::uint64_t seed);

} // namespace ratineq
