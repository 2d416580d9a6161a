#pragma once

#include <complex>
#include <functional>

#include "ratineq/rational.hpp"

namespace ratineq {

/// Result of a circle sup-norm computation. argmax_theta is a witness angle:
/// re-evaluating |f| there reproduces value to 1e-12 relative.
struct NormEstimate {
    double value = 0.0;
    double argmax_theta = 0.0;
    int samples_used = 0;
    bool refined = false;
};

/// Tuning of the coarse-grid + golden-section procedure.
struct NormConfig {
    int coarse_samples = 4096;
    int refine_top = 8;
    double refine_tol = 1e-12;
    int max_refine_iters = 200;

    void validate() const;
};

using CircleFn = std::function<cplx(cplx)>;

/// sup over the unit circle of |f(e^{i theta})|: maximum of a uniform coarse
/// grid, with the refine_top largest local maxima sharpened by golden-section
/// search over their neighboring-grid brackets. The estimate never falls
/// below the coarse-grid maximum.
NormEstimate sup_norm_circle(const CircleFn& f, const NormConfig& cfg = {});

NormEstimate sup_norm_circle(const RationalFn& r, const NormConfig& cfg = {});
NormEstimate sup_norm_circle(const Polynomial& p, const NormConfig& cfg = {});

/// Norms of r and of its numerator, in that order.
std::pair<NormEstimate, NormEstimate> norm_pair(const RationalFn& r,
                                                const NormConfig& cfg = {});

} // namespace ratineq
