#include "ratineq/suites.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "ratineq/errors.hpp"
#include "ratineq/norms.hpp"

namespace ratineq {

namespace {

// fixed child-stream indices so each suite draws from its own seed stream
constexpr std::uint64_t kSaltIdentities = 101;
constexpr std::uint64_t kSaltRational = 102;
constexpr std::uint64_t kSaltPolynomial = 103;
constexpr std::uint64_t kSaltLemmas = 104;
constexpr std::uint64_t kSaltTuples = 106;
constexpr std::uint64_t kSaltSweep = 107;

double scale_of(double rhs) { return std::max(1.0, std::abs(rhs)); }

SuiteOptions base_options(const VerifyConfig& cfg, std::string suite,
                          std::vector<std::string> ids, std::vector<cplx> betas) {
    SuiteOptions opts;
    opts.check_ids = std::move(ids);
    opts.grid_size = cfg.grid;
    opts.betas = std::move(betas);
    opts.tol = cfg.tol;
    opts.seed = cfg.seed;
    opts.suite_name = std::move(suite);
    opts.instances_requested = cfg.instances;
    return opts;
}

void merge_into(SuiteReport& base, SuiteReport&& extra) {
    base.counts.pass += extra.counts.pass;
    base.counts.fail += extra.counts.fail;
    base.counts.skipped += extra.counts.skipped;
    base.counts.hypothesis_violations += extra.counts.hypothesis_violations;
    base.counts.quarantined += extra.counts.quarantined;
    base.reports.reserve(base.reports.size() + extra.reports.size());
    for (auto& rep : extra.reports) base.reports.push_back(std::move(rep));
    for (auto& id : extra.config.check_ids)
        base.config.check_ids.push_back(std::move(id));
}

SuiteReport identities_suite(const VerifyConfig& cfg) {
    std::vector<SuiteInstance> instances;
    instances.reserve(static_cast<std::size_t>(cfg.instances));
    const std::uint64_t base = split_seed(cfg.seed, kSaltIdentities);
    for (int i = 0; i < cfg.instances; ++i) {
        const std::uint64_t sub = split_seed(base, static_cast<std::uint64_t>(i));
        InstanceSpec spec;
        spec.n = 1 + static_cast<int>(sub % 8);
        spec.seed = sub;
        instances.push_back({blaschke_instance(gen_poles(spec)), 1.0, false});
    }
    return run_suite(instances,
                     base_options(cfg, "identities", {"unimod", "lemma1", "lemma2"},
                                  {cplx(0.0)}));
}

SuiteReport rational_suite(const VerifyConfig& cfg,
                           const std::vector<SuiteInstance>* file_instances) {
    const std::vector<SuiteInstance> instances =
        file_instances ? *file_instances
                       : make_instances(cfg.k_values, cfg.instances,
                                        split_seed(cfg.seed, kSaltRational));
    return run_suite(instances,
                     base_options(cfg, "rational",
                                  {"lmr14", "lmr15", "az16", "thm21", "cor22", "cor24",
                                   "cor26"},
                                  cfg.betas));
}

SuiteReport polynomial_suite(const VerifyConfig& cfg,
                             const std::vector<SuiteInstance>* file_instances) {
    const std::vector<SuiteInstance> instances =
        file_instances ? *file_instances
                       : make_instances(cfg.k_values, cfg.instances,
                                        split_seed(cfg.seed, kSaltPolynomial));
    return run_suite(instances,
                     base_options(cfg, "polynomial",
                                  {"bernstein", "erdoslax", "malik", "cor27", "cor29"},
                                  cfg.betas));
}

SuiteReport lemmas_suite(const VerifyConfig& cfg,
                         const std::vector<SuiteInstance>* file_instances) {
    const std::vector<SuiteInstance> instances =
        file_instances ? *file_instances
                       : make_instances(cfg.k_values, cfg.instances,
                                        split_seed(cfg.seed, kSaltLemmas));
    SuiteReport rep = run_suite(
        instances,
        base_options(cfg, "lemmas", {"lemma3", "lemma5", "halfplane"}, {cplx(0.0)}));

    const auto tuples = gen_zeta_tuples(cfg.instances * 4, 10, 100.0,
                                        split_seed(cfg.seed, kSaltTuples));
    for (const auto& zetas : tuples) {
        CheckReport r = lemma4_scalar(zetas, cfg.tol);
        tally_report(rep.counts, r);
        rep.reports.push_back(std::move(r));
    }
    rep.config.check_ids.push_back("lemma4");
    return rep;
}

SuiteReport sharpness_suite(const VerifyConfig& cfg) {
    SuiteReport out;
    out.config = base_options(cfg, "sharpness", {"thm21", "cor24"}, {cplx(0.0)});
    out.config.instances_requested = static_cast<int>(
        cfg.sharp_n.size() * cfg.sharp_k.size() * cfg.sharp_a.size());

    const NormConfig norm_cfg;
    const BetaParam beta0{cplx(0.0)};
    const CirclePoint z1(0.0);
    for (int n : cfg.sharp_n) {
        for (double k : cfg.sharp_k) {
            for (double a : cfg.sharp_a) {
                const RationalFn r = extremal_instance(n, k, a);
                const NormEstimate nrm = sup_norm_circle(r, norm_cfg);
                for (const char* id : {"thm21", "cor24"}) {
                    CheckReport rep =
                        check_rational(id, r, KRadius(k), beta0, z1, nrm, cfg.tol);
                    // sharpness demands equality, not mere validity
                    rep.tolerance = cfg.tol.equality_rel * scale_of(rep.rhs);
                    rep.pass = rep.hypotheses_ok && std::abs(rep.slack) <= rep.tolerance;
                    tally_report(out.counts, rep);
                    out.reports.push_back(std::move(rep));
                }
            }
        }
    }
    return out;
}

} // namespace

std::vector<cplx> default_betas() {
    return {cplx(0.0), cplx(0.5), cplx(-0.5), cplx(0.0, 0.5),
            std::polar(0.7, std::numbers::pi / 4.0)};
}

bool is_known_suite(std::string_view name) {
    return name == "identities" || name == "rational" || name == "polynomial" ||
           name == "lemmas" || name == "sharpness" || name == "all";
}

std::vector<SuiteInstance> make_instances(const std::vector<double>& k_values, int count,
                                          std::uint64_t seed) {
    if (count < 0) throw std::invalid_argument("instance count must be nonnegative");
    std::vector<SuiteInstance> out;
    out.reserve(k_values.size() * static_cast<std::size_t>(count));
    for (std::size_t ki = 0; ki < k_values.size(); ++ki) {
        for (int i = 0; i < count; ++i) {
            const std::uint64_t sub =
                split_seed(seed, ki * static_cast<std::uint64_t>(count) +
                                     static_cast<std::uint64_t>(i));
            InstanceSpec spec;
            spec.n = 1 + static_cast<int>(sub % 8);
            spec.k = k_values[ki];
            spec.boundary_prob = 0.25;
            spec.seed = sub;
            out.push_back({gen_instance(spec), k_values[ki], false});
        }
    }
    return out;
}

SuiteReport run_verify(const VerifyConfig& cfg,
                       const std::vector<SuiteInstance>* file_instances) {
    if (!is_known_suite(cfg.suite))
        throw std::invalid_argument("unknown suite: " + cfg.suite);
    if (cfg.instances < 0) throw std::invalid_argument("instance count must be nonnegative");
    if (cfg.grid < 1) throw std::invalid_argument("grid size must be positive");
    for (double k : cfg.k_values)
        if (!(k >= 1.0)) throw hypothesis_error("k values must satisfy k >= 1");

    VerifyConfig c = cfg;
    if (c.betas.empty()) c.betas = default_betas();
    for (const cplx& b : c.betas) (void)BetaParam(b);

    if (c.suite == "identities") return identities_suite(c);
    if (c.suite == "rational") return rational_suite(c, file_instances);
    if (c.suite == "polynomial") return polynomial_suite(c, file_instances);
    if (c.suite == "lemmas") return lemmas_suite(c, file_instances);
    if (c.suite == "sharpness") return sharpness_suite(c);

    SuiteReport all;
    all.config = base_options(c, "all", {}, c.betas);
    merge_into(all, identities_suite(c));
    merge_into(all, rational_suite(c, file_instances));
    merge_into(all, polynomial_suite(c, file_instances));
    merge_into(all, lemmas_suite(c, file_instances));
    merge_into(all, sharpness_suite(c));
    return all;
}

namespace {

/// Beta-independent data of one admissible instance at one grid point; the
/// beta loop then costs a handful of flops per point. Matches the formulas of
/// lhs_theorem21 / rhs_theorem21 / rhs_corollary24 (unit-tested against them).
struct SweepPoint {
    cplx logderiv;   // z r'(z)/r(z)
    double bpm = 0;  // |B'(z)|
    double q2 = 0;   // |r(z)|^2 / ||r||^2
    double r_over = 0; // ||r|| / |r(z)|
};

struct SweepInstance {
    double k = 1.0;
    int n = 0;
    double sum_recip = 0; // sum 1/(1 + |z_j|)
    double ratio = 0;     // (|c_0| - k^n |c_n|)/(|c_0| + k^n |c_n|)
    std::vector<SweepPoint> points;
};

} // namespace

std::vector<SweepRow> sweep_beta(const SweepConfig& cfg) {
    if (cfg.beta_moduli < 1 || cfg.beta_phases < 1)
        throw std::invalid_argument("beta grid must have at least one modulus and phase");
    if (cfg.grid < 1) throw std::invalid_argument("grid size must be positive");
    for (double k : cfg.k_values)
        if (!(k >= 1.0)) throw hypothesis_error("k values must satisfy k >= 1");

    std::vector<SuiteInstance> pool;
    if (cfg.extremal) {
        for (double k : cfg.k_values)
            for (int n : cfg.extremal_n)
                for (double a : cfg.extremal_a)
                    pool.push_back({extremal_instance(n, k, a), k, false});
    } else {
        pool = make_instances(cfg.k_values, cfg.instances, split_seed(cfg.seed, kSaltSweep));
    }

    const NormConfig norm_cfg;
    const double grid_step = 2.0 * std::numbers::pi / cfg.grid;

    std::vector<SweepInstance> prepared;
    prepared.reserve(pool.size());
    for (const SuiteInstance& inst : pool) {
        const RationalFn& fn = inst.fn;
        SweepInstance prep;
        prep.k = inst.k;
        prep.n = fn.order();
        const auto& coeffs = fn.numerator().coeffs();
        const double c0 = std::abs(coeffs.front());
        const double cn = std::abs(coeffs.back());
        const double kn = std::pow(inst.k, prep.n);
        prep.ratio = (c0 - kn * cn) / (c0 + kn * cn);
        for (const cplx& zj : *fn.numerator().roots())
            prep.sum_recip += 1.0 / (1.0 + std::abs(zj));

        const NormEstimate nrm = sup_norm_circle(fn, norm_cfg);
        prep.points.reserve(static_cast<std::size_t>(cfg.grid));
        for (int g = 0; g < cfg.grid; ++g) {
            const CirclePoint pt(g * grid_step);
            if (fn.nearest_zero_distance(pt.z) < kExclusionRadius) continue;
            const cplx rv = fn.eval(pt.z);
            const double rm = std::abs(rv);
            if (rm == 0.0) continue;
            SweepPoint sp;
            sp.logderiv = pt.z * fn.derivative_eval(pt.z) / rv;
            sp.bpm = blaschke_derivative_modulus(fn.poles(), pt);
            sp.q2 = (rm * rm) / (nrm.value * nrm.value);
            sp.r_over = nrm.value / rm;
            prep.points.push_back(sp);
        }
        prepared.push_back(std::move(prep));
    }

    const double phase_step = 2.0 * std::numbers::pi / cfg.beta_phases;
    std::vector<SweepRow> rows;
    for (double k : cfg.k_values) {
        for (int mi = 0; mi < cfg.beta_moduli; ++mi) {
            const double mod =
                cfg.beta_moduli == 1 ? 0.0
                                     : static_cast<double>(mi) / (cfg.beta_moduli - 1);
            const int phases = (mod == 0.0) ? 1 : cfg.beta_phases;
            for (int pi = 0; pi < phases; ++pi) {
                const double arg = pi * phase_step;
                const cplx beta = std::polar(mod, arg);
                for (const char* id : {"thm21", "cor24"}) {
                    const bool coeff_form = (id[0] == 'c');
                    SweepRow row{k, mod, arg, id,
                                 std::numeric_limits<double>::infinity(), 0};
                    for (const SweepInstance& prep : prepared) {
                        if (prep.k != k) continue;
                        const double kk = prep.k;
                        for (const SweepPoint& sp : prep.points) {
                            const double lhs =
                                std::abs(sp.logderiv + beta * (sp.bpm / (1.0 + kk)));
                            const double common =
                                sp.bpm - prep.n * sp.q2 * (kk - 1.0) / (kk + 1.0);
                            double bracket;
                            if (coeff_form) {
                                bracket = common - (2.0 * sp.q2 / (kk + 1.0)) *
                                                       (prep.ratio - beta.real() * sp.bpm);
                            } else {
                                bracket = common -
                                          2.0 * sp.q2 *
                                              (prep.n / (kk + 1.0) - prep.sum_recip -
                                               beta.real() * sp.bpm / (1.0 + kk));
                            }
                            const double rhs = 0.5 * bracket * sp.r_over;
                            ++row.points;
                            row.min_slack = std::min(row.min_slack, rhs - lhs);
                        }
                    }
                    rows.push_back(std::move(row));
                }
            }
        }
    }
    return rows;
}

std::string sweep_csv(const std::vector<SweepRow>& rows) {
    auto fmt = [](double v) {
        char buf[40];
        std::snprintf(buf, sizeof(buf), "%.17g", v);
        return std::string(buf);
    };
    std::string out = "k,beta_mod,beta_arg,check_id,min_slack,points\n";
    for (const SweepRow& row : rows) {
        out += fmt(row.k);
        out += ',';
        out += fmt(row.beta_mod);
        out += ',';
        out += fmt(row.beta_arg);
        out += ',';
        out += row.check_id;
        out += ',';
        out += fmt(row.min_slack);
        out += ',';
        out += std::to_string(row.points);
        out += '\n';
    }
    return out;
}

} // namespace ratineq
