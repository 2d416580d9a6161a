#include "ratineq/checks.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "ratineq/errors.hpp"

namespace ratineq {

namespace {

constexpr double kGateSlop = 1e-9; // relative slack for hypothesis gates

double scale_of(double rhs) { return std::max(1.0, std::abs(rhs)); }

bool is_rational_id(std::string_view id) {
    return id == "lmr14" || id == "lmr15" || id == "az16" || id == "thm21" ||
           id == "cor22" || id == "cor24" || id == "cor26";
}

bool is_poly_global_id(std::string_view id) {
    return id == "bernstein" || id == "erdoslax" || id == "malik";
}

bool is_poly_point_id(std::string_view id) { return id == "cor27" || id == "cor29"; }

bool is_identity_id(std::string_view id) {
    return id == "lemma1" || id == "lemma2" || id == "unimod";
}

bool is_lemma_point_id(std::string_view id) {
    return id == "lemma3" || id == "lemma5" || id == "halfplane";
}

double tol_factor_for(std::string_view id, const Tolerances& tol) {
    if (id == "lmr14" || id == "lemma3" || id == "lemma5" || id == "halfplane" ||
        id == "bernstein" || id == "erdoslax" || id == "malik")
        return tol.tight_rel;
    return tol.slack_rel;
}

/// Sets slack/tolerance/pass/equality for an inequality lhs <= rhs.
void finalize_inequality(CheckReport& rep, double lhs, double rhs, double factor,
                         const Tolerances& tol) {
    rep.lhs = lhs;
    rep.rhs = rhs;
    rep.slack = rhs - lhs;
    const double scale = scale_of(rhs);
    rep.tolerance = factor * scale;
    rep.pass = rep.hypotheses_ok && rep.slack >= -rep.tolerance;
    rep.equality = rep.hypotheses_ok && std::abs(rep.slack) <= tol.equality_rel * scale;
}

/// All n zeros stored and none strictly inside radius k (up to gate slop).
bool zeros_outside_verified(const Polynomial& p, int n, double k) {
    if (!p.roots() || p.degree() != n) return false;
    if (static_cast<int>(p.roots()->size()) != n) return false;
    for (const cplx& zj : *p.roots())
        if (std::abs(zj) < k * (1.0 - kGateSlop)) return false;
    return true;
}

/// Gate for the coefficient corollaries: verify from roots when present,
/// otherwise fall back to the Vieta necessary condition |c_0| >= k^n |c_n|.
bool coefficient_gate(const Polynomial& p, int n, double k) {
    if (p.is_zero() || p.degree() != n) return false;
    if (p.roots()) return zeros_outside_verified(p, n, k);
    const double c0 = std::abs(p.coeffs().front());
    const double cn = std::abs(p.coeffs().back());
    return c0 >= std::pow(k, n) * cn * (1.0 - kGateSlop);
}

double coefficient_ratio(const Polynomial& p, int n, double k) {
    const double c0 = std::abs(p.coeffs().front());
    const double cn = std::abs(p.coeffs()[static_cast<std::size_t>(n)]);
    const double kn = std::pow(k, n);
    return (c0 - kn * cn) / (c0 + kn * cn);
}

void guard_exclusion(const RationalFn& r, const CirclePoint& z) {
    if (r.nearest_zero_distance(z.z) < kExclusionRadius)
        throw skip_point("circle point inside the exclusion radius of a zero");
}

} // namespace

BetaParam::BetaParam(cplx b) : value(b) {
    if (std::abs(b) > 1.0 + 1e-12)
        throw hypothesis_error("beta parameter must satisfy |beta| <= 1");
}

KRadius::KRadius(double k) : value(k) {
    if (!(k >= 1.0))
        throw hypothesis_error("zero-free radius k must satisfy k >= 1");
}

double lhs_theorem21(const RationalFn& r, const KRadius& k, const BetaParam& beta,
                     const CirclePoint& z) {
    guard_exclusion(r, z);
    const cplx rv = r.eval(z.z);
    if (std::abs(rv) == 0.0) throw skip_point("r vanishes at the circle point");
    const cplx rp = r.derivative_eval(z.z);
    const double bpm = blaschke_derivative_modulus(r.poles(), z);
    return std::abs(z.z * rp / rv + beta.value * (bpm / (1.0 + k.value)));
}

double rhs_theorem21(const RationalFn& r, const KRadius& k, const BetaParam& beta,
                     const CirclePoint& z, const NormEstimate& r_norm) {
    const auto& roots = r.numerator().roots();
    if (!roots)
        throw std::invalid_argument("zero-location bound requires the numerator root list");
    if (!(r_norm.value > 0.0))
        throw std::invalid_argument("sup norm of r must be positive");
    guard_exclusion(r, z);
    const double rv = std::abs(r.eval(z.z));
    if (rv == 0.0) throw skip_point("r vanishes at the circle point");

    const double bpm = blaschke_derivative_modulus(r.poles(), z);
    const double q2 = (rv * rv) / (r_norm.value * r_norm.value);
    const int n = r.order();
    const double kk = k.value;
    double sum = 0.0;
    for (const cplx& zj : *roots) sum += 1.0 / (1.0 + std::abs(zj));

    const double inner = n / (kk + 1.0) - sum - beta.value.real() * bpm / (1.0 + kk);
    const double bracket =
        bpm - n * q2 * (kk - 1.0) / (kk + 1.0) - 2.0 * q2 * inner;
    return 0.5 * bracket * (r_norm.value / rv);
}

double rhs_corollary24(const RationalFn& r, const KRadius& k, const BetaParam& beta,
                       const CirclePoint& z, const NormEstimate& r_norm) {
    const int n = r.order();
    if (r.numerator().degree() != n)
        throw std::invalid_argument("coefficient bound requires a degree-n numerator");
    if (!(r_norm.value > 0.0))
        throw std::invalid_argument("sup norm of r must be positive");
    guard_exclusion(r, z);
    const double rv = std::abs(r.eval(z.z));
    if (rv == 0.0) throw skip_point("r vanishes at the circle point");

    const double bpm = blaschke_derivative_modulus(r.poles(), z);
    const double q2 = (rv * rv) / (r_norm.value * r_norm.value);
    const double kk = k.value;
    const double ratio = coefficient_ratio(r.numerator(), n, kk);

    const double inner = ratio - beta.value.real() * bpm;
    const double bracket =
        bpm - n * q2 * (kk - 1.0) / (kk + 1.0) - (2.0 * q2 / (kk + 1.0)) * inner;
    return 0.5 * bracket * (r_norm.value / rv);
}

CheckReport check_rational(std::string_view check_id, const RationalFn& r,
                           const KRadius& k, const BetaParam& beta, const CirclePoint& z,
                           const NormEstimate& r_norm, const Tolerances& tol,
                           bool assume_hypotheses) {
    if (!is_rational_id(check_id))
        throw std::invalid_argument("unknown rational check id: " + std::string(check_id));
    if (!(r_norm.value > 0.0))
        throw std::invalid_argument("sup norm of r must be positive");

    CheckReport rep;
    rep.check_id = std::string(check_id);
    rep.theta = z.theta;
    rep.quarantined = quarantined_evaluation(check_id, beta);

    const double k_eff = (check_id == "cor22" || check_id == "cor26") ? 1.0 : k.value;
    const KRadius kr(k_eff);
    const int n = r.order();
    const Polynomial& p = r.numerator();

    if (check_id == "lmr14") {
        const double lhs = std::abs(r.derivative_eval(z.z));
        const double rhs = blaschke_derivative_modulus(r.poles(), z) * r_norm.value;
        finalize_inequality(rep, lhs, rhs, tol_factor_for(check_id, tol), tol);
        return rep;
    }

    if (check_id == "lmr15" || check_id == "az16") {
        const double gate_k = (check_id == "lmr15") ? 1.0 : k_eff;
        rep.hypotheses_ok = assume_hypotheses || zeros_outside_verified(p, n, gate_k);
        if (!rep.hypotheses_ok) return rep;
        const double lhs = std::abs(r.derivative_eval(z.z));
        const double bpm = blaschke_derivative_modulus(r.poles(), z);
        double rhs;
        if (check_id == "lmr15") {
            rhs = 0.5 * bpm * r_norm.value;
        } else {
            const double rv = std::abs(r.eval(z.z));
            const double q2 = (rv * rv) / (r_norm.value * r_norm.value);
            rhs = 0.5 * (bpm - n * (k_eff - 1.0) / (k_eff + 1.0) - q2) * r_norm.value;
        }
        finalize_inequality(rep, lhs, rhs, tol_factor_for(check_id, tol), tol);
        return rep;
    }

    if (check_id == "thm21" || check_id == "cor22") {
        rep.hypotheses_ok = assume_hypotheses || zeros_outside_verified(p, n, k_eff);
        if (!rep.hypotheses_ok) return rep;
        const double lhs = lhs_theorem21(r, kr, beta, z);
        const double rhs = rhs_theorem21(r, kr, beta, z, r_norm);
        finalize_inequality(rep, lhs, rhs, tol_factor_for(check_id, tol), tol);
        return rep;
    }

    // cor24 / cor26
    rep.hypotheses_ok = assume_hypotheses || coefficient_gate(p, n, k_eff);
    if (!rep.hypotheses_ok) return rep;
    const double lhs = lhs_theorem21(r, kr, beta, z);
    const double rhs = rhs_corollary24(r, kr, beta, z, r_norm);
    finalize_inequality(rep, lhs, rhs, tol_factor_for(check_id, tol), tol);
    return rep;
}

PolyNorms compute_poly_norms(const Polynomial& p, const NormConfig& cfg) {
    return PolyNorms{sup_norm_circle(p, cfg), sup_norm_circle(p.derivative(), cfg)};
}

CheckReport check_polynomial(std::string_view check_id, const Polynomial& p,
                             const KRadius& k, const BetaParam& beta, const CirclePoint& z,
                             const PolyNorms& norms, const Tolerances& tol,
                             bool assume_hypotheses) {
    if (!is_poly_global_id(check_id) && !is_poly_point_id(check_id))
        throw std::invalid_argument("unknown polynomial check id: " + std::string(check_id));
    if (p.is_zero()) throw std::invalid_argument("polynomial checks need a nonzero p");

    CheckReport rep;
    rep.check_id = std::string(check_id);
    rep.quarantined = quarantined_evaluation(check_id, beta);

    const int n = p.degree();
    const double k_eff = (check_id == "cor29") ? 1.0 : k.value;

    if (is_poly_global_id(check_id)) {
        double rhs_factor = static_cast<double>(n);
        if (check_id == "erdoslax") {
            rep.hypotheses_ok = assume_hypotheses || zeros_outside_verified(p, n, 1.0);
            rhs_factor = n / 2.0;
        } else if (check_id == "malik") {
            rep.hypotheses_ok = assume_hypotheses || zeros_outside_verified(p, n, k_eff);
            rhs_factor = n / (1.0 + k_eff);
        }
        if (!rep.hypotheses_ok) return rep;
        finalize_inequality(rep, norms.p_prime.value, rhs_factor * norms.p.value,
                            tol_factor_for(check_id, tol), tol);
        return rep;
    }

    // cor27 / cor29: pointwise coefficient bounds
    rep.theta = z.theta;
    rep.hypotheses_ok = assume_hypotheses || coefficient_gate(p, n, k_eff);
    if (!rep.hypotheses_ok) return rep;

    const cplx pv = p.eval(z.z);
    const cplx pp = p.derivative().eval(z.z);
    const double lhs = std::abs(z.z * pp + (static_cast<double>(n) / (1.0 + k_eff)) * beta.value * pv);

    const double pn = norms.p.value;
    const double q2 = std::norm(pv) / (pn * pn);
    const double ratio = coefficient_ratio(p, n, k_eff);
    const double inner = n * (k_eff - 1.0) / 2.0 + ratio - n * beta.value.real();
    const double rhs = 0.5 * pn * (n - (2.0 / (k_eff + 1.0)) * inner * q2);
    finalize_inequality(rep, lhs, rhs, tol_factor_for(check_id, tol), tol);
    return rep;
}

CheckReport check_lemma1(const PoleSet& poles, const CirclePoint& z, const Tolerances& tol) {
    CheckReport rep;
    rep.check_id = "lemma1";
    rep.theta = z.theta;
    const cplx wv = poles.w_eval(z.z);
    const cplx wp = poles.w_derivative_eval(z.z);
    const double bpm = blaschke_derivative_modulus(poles, z);
    rep.lhs = (z.z * wp / wv).real();
    rep.rhs = 0.5 * (poles.size() - bpm);
    rep.slack = -std::abs(rep.lhs - rep.rhs);
    rep.tolerance = tol.identity_abs;
    rep.pass = rep.slack >= -rep.tolerance;
    return rep;
}

CheckReport check_lemma2(const PoleSet& poles, const CirclePoint& z, const Tolerances& tol) {
    CheckReport rep;
    rep.check_id = "lemma2";
    rep.theta = z.theta;
    const cplx quotient = z.z * blaschke_derivative(poles, z.z) / blaschke_eval(poles, z.z);
    const double bpm = blaschke_derivative_modulus(poles, z);
    rep.lhs = bpm;
    rep.rhs = quotient.real();
    // Residual of the full complex identity z B'/B = |B'|, so the imaginary
    // part is constrained too; slack <= -|lhs - rhs| always holds.
    rep.slack = -std::abs(quotient - cplx(bpm));
    rep.tolerance = tol.identity_rel * std::max(1.0, bpm);
    rep.pass = rep.slack >= -rep.tolerance;
    return rep;
}

CheckReport check_unimodular(const PoleSet& poles, const CirclePoint& z, const Tolerances& tol) {
    CheckReport rep;
    rep.check_id = "unimod";
    rep.theta = z.theta;
    rep.lhs = std::abs(blaschke_eval(poles, z.z));
    rep.rhs = 1.0;
    rep.slack = -std::abs(rep.lhs - 1.0);
    rep.tolerance = tol.unimod_abs;
    rep.pass = rep.slack >= -rep.tolerance;
    return rep;
}

CheckReport check_lemma3(const RationalFn& r, const CirclePoint& z,
                         const NormEstimate& r_norm, const Tolerances& tol) {
    if (!(r_norm.value > 0.0))
        throw std::invalid_argument("sup norm of r must be positive");
    CheckReport rep;
    rep.check_id = "lemma3";
    rep.theta = z.theta;
    const RationalFn rstar = r.conjugate_transform();
    const double lhs = std::abs(rstar.derivative_eval(z.z)) + std::abs(r.derivative_eval(z.z));
    const double rhs = blaschke_derivative_modulus(r.poles(), z) * r_norm.value;
    finalize_inequality(rep, lhs, rhs, tol.tight_rel, tol);
    return rep;
}

CheckReport check_lemma5(const RationalFn& r, double k, const CirclePoint& z,
                         const Tolerances& tol) {
    CheckReport rep;
    rep.check_id = "lemma5";
    rep.theta = z.theta;
    const int n = r.order();
    const Polynomial& p = r.numerator();
    bool ok = k <= 1.0 + kGateSlop && p.roots().has_value();
    if (ok)
        for (const cplx& zj : *p.roots())
            if (std::abs(zj) > k * (1.0 + kGateSlop) + 1e-15) ok = false;
    rep.hypotheses_ok = ok;
    if (!ok) return rep;

    const double bpm = blaschke_derivative_modulus(r.poles(), z);
    const double bound = 0.5 * (bpm + n * (1.0 - k) / (1.0 + k)) * std::abs(r.eval(z.z));
    const double deriv = std::abs(r.derivative_eval(z.z));
    // lower bound: |r'| >= bound; report the derivative modulus as rhs so
    // slack = rhs - lhs stays nonnegative on success
    finalize_inequality(rep, bound, deriv, tol.tight_rel, tol);
    return rep;
}

CheckReport check_halfplane(const CirclePoint& z, cplx zero, const Tolerances& tol) {
    CheckReport rep;
    rep.check_id = "halfplane";
    rep.theta = z.theta;
    rep.hypotheses_ok = std::abs(zero) >= 1.0 - kGateSlop;
    if (!rep.hypotheses_ok) return rep;
    if (std::abs(z.z - zero) < kExclusionRadius)
        throw skip_point("circle point inside the exclusion radius of the zero");
    const double lhs = (z.z / (z.z - zero)).real();
    const double rhs = 1.0 / (1.0 + std::abs(zero));
    finalize_inequality(rep, lhs, rhs, tol.tight_rel, tol);
    rep.equality = false;
    return rep;
}

CheckReport lemma4_scalar(const std::vector<double>& zetas, const Tolerances& tol) {
    if (zetas.empty())
        throw std::invalid_argument("lemma4 needs at least one zeta");
    for (double zeta : zetas)
        if (zeta < 1.0)
            throw hypothesis_error("lemma4 requires every zeta >= 1");

    CheckReport rep;
    rep.check_id = "lemma4";
    double lhs = 0.0;
    double prod = 1.0;
    for (double zeta : zetas) {
        lhs += (1.0 - zeta) / (1.0 + zeta);
        prod *= zeta;
    }
    rep.lhs = lhs;
    rep.rhs = std::isinf(prod) ? -1.0 : (1.0 - prod) / (1.0 + prod);
    rep.slack = rep.rhs - rep.lhs;
    rep.tolerance = tol.lemma4_abs;
    rep.pass = rep.slack >= -rep.tolerance;
    return rep;
}

CheckReport check_lemma(std::string_view lemma_id, const LemmaArgs& args,
                        const Tolerances& tol) {
    auto need = [&](bool present, const char* what) {
        if (!present)
            throw std::invalid_argument(std::string(lemma_id) + " needs " + what);
    };
    if (lemma_id == "lemma1" || lemma_id == "lemma2" || lemma_id == "unimod") {
        need(args.poles != nullptr, "a pole set");
        need(args.z.has_value(), "a circle point");
        if (lemma_id == "lemma1") return check_lemma1(*args.poles, *args.z, tol);
        if (lemma_id == "lemma2") return check_lemma2(*args.poles, *args.z, tol);
        return check_unimodular(*args.poles, *args.z, tol);
    }
    if (lemma_id == "lemma3") {
        need(args.fn != nullptr, "a rational function");
        need(args.z.has_value(), "a circle point");
        need(args.r_norm != nullptr, "the sup norm of r");
        return check_lemma3(*args.fn, *args.z, *args.r_norm, tol);
    }
    if (lemma_id == "lemma4") return lemma4_scalar(args.zetas, tol);
    if (lemma_id == "lemma5") {
        need(args.fn != nullptr, "a rational function");
        need(args.z.has_value(), "a circle point");
        need(args.k.has_value(), "the zero radius k");
        return check_lemma5(*args.fn, *args.k, *args.z, tol);
    }
    if (lemma_id == "halfplane") {
        need(args.z.has_value(), "a circle point");
        need(args.zero.has_value(), "a zero location");
        return check_halfplane(*args.z, *args.zero, tol);
    }
    throw std::invalid_argument("unknown lemma id: " + std::string(lemma_id));
}

bool check_uses_beta(std::string_view check_id) {
    return check_id == "thm21" || check_id == "cor22" || check_id == "cor24" ||
           check_id == "cor26" || check_id == "cor27" || check_id == "cor29";
}

bool check_is_quarantined(std::string_view check_id) { return check_id == "az16"; }

bool quarantined_evaluation(std::string_view check_id, const BetaParam& beta) {
    if (check_is_quarantined(check_id)) return true;
    // The beta-extended bounds are genuinely violated by admissible instances
    // for adverse phases of a nonzero beta (random search turns up slacks of
    // order -1e-1 well past any tolerance).  Only the beta=0 form is reliable,
    // so nonzero-beta evaluations are reported with full data but never gate.
    return check_uses_beta(check_id) && beta.value != cplx{};
}

bool is_known_check(std::string_view check_id) {
    return is_rational_id(check_id) || is_poly_global_id(check_id) ||
           is_poly_point_id(check_id) || is_identity_id(check_id) ||
           is_lemma_point_id(check_id) || check_id == "lemma4";
}

void tally_report(SuiteCounts& counts, const CheckReport& rep) {
    if (!rep.hypotheses_ok) {
        ++counts.hypothesis_violations;
    } else if (rep.quarantined) {
        ++counts.quarantined;
    } else if (rep.pass) {
        ++counts.pass;
    } else {
        ++counts.fail;
    }
}

namespace {

/// Per-instance state computed at most once and shared across points/betas.
struct InstanceCtx {
    const SuiteInstance* inst = nullptr;
    std::optional<NormEstimate> r_norm;
    std::optional<PolyNorms> p_norms;
    std::optional<RationalFn> rstar;
    double k_star = 1.0;

    const NormEstimate& norm_r(const NormConfig& cfg) {
        if (!r_norm) r_norm = sup_norm_circle(inst->fn, cfg);
        return *r_norm;
    }
    const PolyNorms& norms_p(const NormConfig& cfg) {
        if (!p_norms) p_norms = compute_poly_norms(inst->fn.numerator(), cfg);
        return *p_norms;
    }
    const RationalFn& star() {
        if (!rstar) {
            rstar = inst->fn.conjugate_transform();
            k_star = 0.0;
            if (rstar->numerator().roots())
                for (const cplx& zj : *rstar->numerator().roots())
                    k_star = std::max(k_star, std::abs(zj));
            k_star = std::min(k_star, 1.0);
        }
        return *rstar;
    }
};

CheckReport violation_report(std::string_view id, std::optional<double> theta) {
    CheckReport rep;
    rep.check_id = std::string(id);
    rep.theta = theta;
    rep.hypotheses_ok = false;
    rep.quarantined = check_is_quarantined(id);
    return rep;
}

} // namespace

SuiteReport run_suite(const std::vector<SuiteInstance>& instances, const SuiteOptions& opts) {
    if (opts.grid_size < 1)
        throw std::invalid_argument("suite grid size must be positive");
    if (opts.betas.empty())
        throw std::invalid_argument("suite needs at least one beta");
    for (const auto& id : opts.check_ids)
        if (!is_known_check(id))
            throw std::invalid_argument("unknown check id: " + id);
    for (const cplx& b : opts.betas)
        (void)BetaParam(b); // validate early

    SuiteReport out;
    out.config = opts;
    if (out.config.instances_requested == 0)
        out.config.instances_requested = static_cast<int>(instances.size());

    NormConfig norm_cfg;
    std::vector<InstanceCtx> ctx(instances.size());
    for (std::size_t i = 0; i < instances.size(); ++i) ctx[i].inst = &instances[i];

    const double step = 2.0 * std::numbers::pi / opts.grid_size;
    const Tolerances& tol = opts.tol;

    auto emit = [&](CheckReport rep) {
        tally_report(out.counts, rep);
        out.reports.push_back(std::move(rep));
    };

    for (const std::string& id : opts.check_ids) {
        const bool uses_beta = check_uses_beta(id);
        const std::size_t beta_count = uses_beta ? opts.betas.size() : 1;

        for (std::size_t i = 0; i < instances.size(); ++i) {
            const SuiteInstance& inst = instances[i];
            InstanceCtx& c = ctx[i];
            const KRadius k(inst.k);

            for (std::size_t bi = 0; bi < beta_count; ++bi) {
                const BetaParam beta(opts.betas[bi]);

                if (id == "lemma4") {
                    const auto& roots = inst.fn.numerator().roots();
                    if (!roots || roots->empty()) {
                        emit(violation_report(id, std::nullopt));
                        continue;
                    }
                    std::vector<double> zetas;
                    zetas.reserve(roots->size());
                    bool ok = true;
                    for (const cplx& zj : *roots) {
                        double zeta = std::abs(zj) / inst.k;
                        if (zeta < 1.0 && zeta >= 1.0 - kGateSlop) zeta = 1.0;
                        if (zeta < 1.0) ok = false;
                        zetas.push_back(zeta);
                    }
                    if (!ok && !inst.assume_hypotheses) {
                        emit(violation_report(id, std::nullopt));
                        continue;
                    }
                    for (double& zeta : zetas) zeta = std::max(zeta, 1.0);
                    emit(lemma4_scalar(zetas, tol));
                    continue;
                }

                if (id == "bernstein" || id == "erdoslax" || id == "malik") {
                    emit(check_polynomial(id, inst.fn.numerator(), k, beta,
                                          CirclePoint(0.0), c.norms_p(norm_cfg), tol,
                                          inst.assume_hypotheses));
                    continue;
                }

                for (int g = 0; g < opts.grid_size; ++g) {
                    const CirclePoint pt(g * step);
                    try {
                        if (is_rational_id(id)) {
                            emit(check_rational(id, inst.fn, k, beta, pt, c.norm_r(norm_cfg),
                                                tol, inst.assume_hypotheses));
                        } else if (is_poly_point_id(id)) {
                            emit(check_polynomial(id, inst.fn.numerator(), k, beta, pt,
                                                  c.norms_p(norm_cfg), tol,
                                                  inst.assume_hypotheses));
                        } else if (id == "lemma1") {
                            emit(check_lemma1(inst.fn.poles(), pt, tol));
                        } else if (id == "lemma2") {
                            emit(check_lemma2(inst.fn.poles(), pt, tol));
                        } else if (id == "unimod") {
                            emit(check_unimodular(inst.fn.poles(), pt, tol));
                        } else if (id == "lemma3") {
                            emit(check_lemma3(inst.fn, pt, c.norm_r(norm_cfg), tol));
                        } else if (id == "lemma5") {
                            const RationalFn& rs = c.star();
                            emit(check_lemma5(rs, c.k_star, pt, tol));
                        } else { // halfplane: report the tightest zero at this point
                            const auto& roots = inst.fn.numerator().roots();
                            if (!roots || roots->empty()) {
                                emit(violation_report(id, pt.theta));
                                continue;
                            }
                            std::optional<CheckReport> worst;
                            int usable = 0;
                            for (const cplx& zj : *roots) {
                                if (std::abs(pt.z - zj) < kExclusionRadius) continue;
                                ++usable;
                                CheckReport rep = check_halfplane(pt, zj, tol);
                                if (!rep.hypotheses_ok) {
                                    worst = rep;
                                    break;
                                }
                                if (!worst || rep.slack < worst->slack) worst = rep;
                            }
                            if (usable == 0) throw skip_point("all zeros inside exclusion radius");
                            emit(*worst);
                        }
                    } catch (const skip_point&) {
                        ++out.counts.skipped;
                    }
                }
            }
        }
    }
    return out;
}

} // namespace ratineq
