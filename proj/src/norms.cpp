#include "ratineq/norms.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace ratineq {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
// 2 - phi; interior points split the bracket 0.382 / 0.618
constexpr double kGoldenC = 0.3819660112501051;

double modulus_at(const CircleFn& f, double theta) {
    return std::abs(f(std::polar(1.0, theta)));
}

// Golden-section maximization of |f(e^{i theta})| over [lo, hi].
// Returns (theta, value) of the best interior point seen.
std::pair<double, double> refine_bracket(const CircleFn& f, double lo, double hi,
                                         double tol, int max_iters, int& evals) {
    double x1 = lo + kGoldenC * (hi - lo);
    double x2 = hi - kGoldenC * (hi - lo);
    double f1 = modulus_at(f, x1);
    double f2 = modulus_at(f, x2);
    evals += 2;
    for (int it = 0; it < max_iters && (hi - lo) > tol; ++it) {
        if (f1 > f2) {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = lo + kGoldenC * (hi - lo);
            f1 = modulus_at(f, x1);
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = hi - kGoldenC * (hi - lo);
            f2 = modulus_at(f, x2);
        }
        ++evals;
    }
    return (f1 > f2) ? std::pair{x1, f1} : std::pair{x2, f2};
}

} // namespace

void NormConfig::validate() const {
    if (coarse_samples < 16)
        throw std::invalid_argument("NormConfig: coarse_samples must be at least 16");
    if (refine_tol <= 0.0)
        throw std::invalid_argument("NormConfig: refine_tol must be positive");
    if (refine_top < 0 || max_refine_iters < 0)
        throw std::invalid_argument("NormConfig: negative refinement parameters");
}

NormEstimate sup_norm_circle(const CircleFn& f, const NormConfig& cfg) {
    cfg.validate();
    const int n = cfg.coarse_samples;
    const double step = kTwoPi / n;

    std::vector<double> vals(n);
    for (int i = 0; i < n; ++i) vals[i] = modulus_at(f, i * step);

    NormEstimate est;
    est.samples_used = n;
    int best = 0;
    for (int i = 1; i < n; ++i)
        if (vals[i] > vals[best]) best = i;
    est.value = vals[best];
    est.argmax_theta = best * step;

    // cyclic local maxima of the coarse profile, strongest first
    std::vector<int> maxima;
    for (int i = 0; i < n; ++i) {
        const double prev = vals[(i + n - 1) % n];
        const double next = vals[(i + 1) % n];
        if (vals[i] >= prev && vals[i] >= next) maxima.push_back(i);
    }
    std::sort(maxima.begin(), maxima.end(),
              [&](int a, int b) { return vals[a] > vals[b] || (vals[a] == vals[b] && a < b); });
    if (static_cast<int>(maxima.size()) > cfg.refine_top) maxima.resize(cfg.refine_top);

    for (int idx : maxima) {
        const double lo = (idx - 1) * step;
        const double hi = (idx + 1) * step;
        auto [theta, value] = refine_bracket(f, lo, hi, cfg.refine_tol,
                                             cfg.max_refine_iters, est.samples_used);
        est.refined = true;
        if (value > est.value) {
            est.value = value;
            est.argmax_theta = theta;
        }
    }

    est.argmax_theta = std::fmod(est.argmax_theta, kTwoPi);
    if (est.argmax_theta < 0.0) est.argmax_theta += kTwoPi;
    return est;
}

NormEstimate sup_norm_circle(const RationalFn& r, const NormConfig& cfg) {
    return sup_norm_circle(CircleFn([&r](cplx z) { return r.eval(z); }), cfg);
}

NormEstimate sup_norm_circle(const Polynomial& p, const NormConfig& cfg) {
    return sup_norm_circle(CircleFn([&p](cplx z) { return p.eval(z); }), cfg);
}

std::pair<NormEstimate, NormEstimate> norm_pair(const RationalFn& r, const NormConfig& cfg) {
    return {sup_norm_circle(r, cfg), sup_norm_circle(r.numerator(), cfg)};
}

} // namespace ratineq
