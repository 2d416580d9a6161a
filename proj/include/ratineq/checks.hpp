#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ratineq/norms.hpp"
#include "ratineq/rational.hpp"

namespace ratineq {

/// beta parameter of the generalized bounds; |beta| <= 1.
struct BetaParam {
    cplx value;

    explicit BetaParam(cplx b);
};

/// Zero-free radius k >= 1: zeros restricted to |z| >= k.
struct KRadius {
    double value;

    explicit KRadius(double k);
};

/// Outcome of one inequality or identity evaluation.
/// For inequalities slack = rhs - lhs; identities report slack = -residual so
/// that "pass iff slack >= -tolerance" covers both kinds uniformly.
struct CheckReport {
    std::string check_id;
    std::optional<double> theta;     // null for global (norm-level) checks
    double lhs = 0.0;
    double rhs = 0.0;
    double slack = 0.0;
    bool hypotheses_ok = true;
    double tolerance = 0.0;
    bool pass = false;
    bool quarantined = false;        // excluded from exit-code judgment
    bool equality = false;           // |slack| within the sharpness tolerance
};

/// Default tolerances; overridable from the CLI.
struct Tolerances {
    double slack_rel = 1e-7;     // general inequalities, x max(1, |rhs|)
    double tight_rel = 1e-9;     // exact-arithmetic inequalities (lmr14, lemmas)
    double identity_abs = 1e-9;  // lemma 1 residual
    double identity_rel = 1e-10; // lemma 2 residual, x max(1, |B'|)
    double unimod_abs = 1e-12;   // | |B| - 1 | on the circle
    double lemma4_abs = 1e-12;
    double equality_rel = 1e-8;  // sharpness declaration threshold
};

struct SuiteCounts {
    std::int64_t pass = 0;
    std::int64_t fail = 0;
    std::int64_t skipped = 0;               // points inside an exclusion radius
    std::int64_t hypothesis_violations = 0; // reports with hypotheses_ok = false
    std::int64_t quarantined = 0;           // reports of quarantined checks
};

struct SuiteOptions {
    std::vector<std::string> check_ids;
    int grid_size = 128;
    std::vector<cplx> betas{cplx(0.0)};
    Tolerances tol;
    std::uint64_t seed = 0;   // echoed into the report
    std::string suite_name;   // echoed
    int instances_requested = 0; // echoed
};

struct SuiteReport {
    std::vector<CheckReport> reports;
    SuiteCounts counts;
    SuiteOptions config;
};

/// One verification subject: a rational function plus the k its zero
/// restriction refers to. assume_hypotheses marks instances whose hypothesis
/// holds by construction but cannot be read off the stored data (for example
/// uB + v, whose zeros lie on the circle without a stored root list).
struct SuiteInstance {
    RationalFn fn;
    double k = 1.0;
    bool assume_hypotheses = false;
};

// ---- pointwise quantities of the main theorem ----

/// |z r'(z)/r(z) + beta |B'(z)| / (1+k)|. Throws skip_point inside the
/// exclusion radius of a zero of r.
double lhs_theorem21(const RationalFn& r, const KRadius& k, const BetaParam& beta,
                     const CirclePoint& z);

/// Zero-location form of the bound; requires the numerator root list.
double rhs_theorem21(const RationalFn& r, const KRadius& k, const BetaParam& beta,
                     const CirclePoint& z, const NormEstimate& r_norm);

/// Coefficient form of the bound (|c_0|, |c_n| instead of the zeros).
double rhs_corollary24(const RationalFn& r, const KRadius& k, const BetaParam& beta,
                       const CirclePoint& z, const NormEstimate& r_norm);

// ---- check dispatchers ----

/// Rational-function checks: lmr14, lmr15, az16, thm21, cor22, cor24, cor26.
/// cor22/cor26 are the k = 1 specializations and ignore the passed k.
CheckReport check_rational(std::string_view check_id, const RationalFn& r,
                           const KRadius& k, const BetaParam& beta, const CirclePoint& z,
                           const NormEstimate& r_norm, const Tolerances& tol = {},
                           bool assume_hypotheses = false);

/// Norms of p and p' used by the polynomial checks.
struct PolyNorms {
    NormEstimate p;
    NormEstimate p_prime;
};

PolyNorms compute_poly_norms(const Polynomial& p, const NormConfig& cfg = {});

/// Polynomial checks: bernstein, erdoslax, malik (norm-level; theta is null in
/// the report) and cor27, cor29 (pointwise).
CheckReport check_polynomial(std::string_view check_id, const Polynomial& p,
                             const KRadius& k, const BetaParam& beta, const CirclePoint& z,
                             const PolyNorms& norms, const Tolerances& tol = {},
                             bool assume_hypotheses = false);

// ---- lemma checks ----

CheckReport check_lemma1(const PoleSet& poles, const CirclePoint& z, const Tolerances& tol = {});
CheckReport check_lemma2(const PoleSet& poles, const CirclePoint& z, const Tolerances& tol = {});
/// | |B(z)| - 1 | on the circle.
CheckReport check_unimodular(const PoleSet& poles, const CirclePoint& z, const Tolerances& tol = {});
CheckReport check_lemma3(const RationalFn& r, const CirclePoint& z,
                         const NormEstimate& r_norm, const Tolerances& tol = {});
/// Lower bound on |r'| for zeros inside radius k <= 1. The derivative modulus
/// is reported as rhs so nonnegative slack keeps the pass convention.
CheckReport check_lemma5(const RationalFn& r, double k, const CirclePoint& z,
                         const Tolerances& tol = {});
/// Re(z/(z - zero)) <= 1/(1 + |zero|) for |zero| >= 1, z on the circle.
CheckReport check_halfplane(const CirclePoint& z, cplx zero, const Tolerances& tol = {});

/// sum (1 - zeta_j)/(1 + zeta_j) <= (1 - prod zeta_j)/(1 + prod zeta_j).
/// Throws hypothesis_error when some zeta_j < 1.
CheckReport lemma4_scalar(const std::vector<double>& zetas, const Tolerances& tol = {});

/// Bundle of optional arguments for the string-dispatch lemma entry point.
struct LemmaArgs {
    const PoleSet* poles = nullptr;
    const RationalFn* fn = nullptr;
    std::optional<CirclePoint> z;
    std::optional<double> k;
    std::optional<cplx> zero;
    const NormEstimate* r_norm = nullptr;
    std::vector<double> zetas;
};

/// Dispatch over lemma1, lemma2, lemma3, lemma4, lemma5, halfplane, unimod.
CheckReport check_lemma(std::string_view lemma_id, const LemmaArgs& args,
                        const Tolerances& tol = {});

// ---- suite driver ----

bool check_uses_beta(std::string_view check_id);
bool check_is_quarantined(std::string_view check_id);
bool is_known_check(std::string_view check_id);

/// True when the (check, beta) evaluation is reported but never gates the
/// exit code: az16 always, and the beta-extended bounds whenever beta != 0
/// (their stated form only survives scrutiny at beta = 0).
bool quarantined_evaluation(std::string_view check_id, const BetaParam& beta);

/// Buckets are disjoint: violation, then quarantined, then pass/fail.
void tally_report(SuiteCounts& counts, const CheckReport& rep);

/// Runs every requested check over every instance on a uniform circle grid.
/// Norms are computed once per instance. Points inside an exclusion radius
/// are counted as skipped. Reports appear in (check, instance, beta, theta)
/// order; beta only varies for the checks that use it.
SuiteReport run_suite(const std::vector<SuiteInstance>& instances, const SuiteOptions& opts);

} // namespace ratineq
