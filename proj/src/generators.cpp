#include "ratineq/generators.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <stdexcept>

#include "ratineq/errors.hpp"
#include "ratineq/poly.hpp"

namespace ratineq {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kCollisionRadius = 1e-9; // min zero-to-pole separation kept
constexpr int kMaxResamples = 64;

/// Uniform in [0, 1) from the top 53 bits; identical across platforms.
double next_unit(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

cplx draw_zero(std::mt19937_64& rng, const InstanceSpec& spec) {
    bool boundary = spec.force_boundary;
    if (!boundary && spec.boundary_prob > 0.0)
        boundary = next_unit(rng) < spec.boundary_prob;
    const double mod = boundary ? spec.k : spec.k + spec.zero_width * next_unit(rng);
    return std::polar(mod, kTwoPi * next_unit(rng));
}

cplx draw_pole(std::mt19937_64& rng, const InstanceSpec& spec) {
    const double mod = 1.0 + spec.pole_margin + spec.pole_width * next_unit(rng);
    return std::polar(mod, kTwoPi * next_unit(rng));
}

double min_distance(cplx z, const std::vector<cplx>& points) {
    double best = std::numeric_limits<double>::infinity();
    for (const cplx& p : points) best = std::min(best, std::abs(z - p));
    return best;
}

} // namespace

void InstanceSpec::validate() const {
    if (n < 1 || n > Polynomial::kMaxExpansionDegree)
        throw std::invalid_argument("instance order n out of range");
    if (!(k >= 1.0)) throw std::invalid_argument("instance k must be >= 1");
    if (zero_width < 0.0 || pole_width < 0.0)
        throw std::invalid_argument("instance widths must be nonnegative");
    if (!(pole_margin > 0.0))
        throw std::invalid_argument("pole margin must be positive");
    if (boundary_prob < 0.0 || boundary_prob > 1.0)
        throw std::invalid_argument("boundary probability must lie in [0, 1]");
}

std::uint64_t split_seed(std::uint64_t base, std::uint64_t index) {
    std::uint64_t x = base + 0x9E3779B97F4A7C15ULL * (index + 1);
    x ^= x >> 30;
    x *= 0xBF58476D1CE4E5B9ULL;
    x ^= x >> 27;
    x *= 0x94D049BB133111EBULL;
    x ^= x >> 31;
    return x;
}

PoleSet gen_poles(const InstanceSpec& spec) {
    spec.validate();
    std::mt19937_64 rng(spec.seed);
    std::vector<cplx> poles;
    poles.reserve(static_cast<std::size_t>(spec.n));
    for (int i = 0; i < spec.n; ++i) poles.push_back(draw_pole(rng, spec));
    return PoleSet(std::move(poles));
}

RationalFn gen_instance(const InstanceSpec& spec) {
    spec.validate();
    std::mt19937_64 rng(spec.seed);

    std::vector<cplx> zeros;
    zeros.reserve(static_cast<std::size_t>(spec.n));
    for (int i = 0; i < spec.n; ++i) zeros.push_back(draw_zero(rng, spec));

    std::vector<cplx> poles;
    poles.reserve(static_cast<std::size_t>(spec.n));
    for (int i = 0; i < spec.n; ++i) poles.push_back(draw_pole(rng, spec));

    const cplx leading = std::polar(1.0, kTwoPi * next_unit(rng));

    for (cplx& zero : zeros) {
        int attempts = 0;
        while (min_distance(zero, poles) < kCollisionRadius) {
            if (++attempts > kMaxResamples)
                throw std::runtime_error("could not separate a zero from the poles");
            zero = draw_zero(rng, spec);
        }
    }

    return RationalFn(Polynomial::from_roots(zeros, leading), PoleSet(std::move(poles)));
}

RationalFn extremal_instance(int n, double k, double a) {
    if (n < 1 || n > Polynomial::kMaxExpansionDegree)
        throw std::invalid_argument("extremal order n out of range");
    if (!(k >= 1.0)) throw hypothesis_error("extremal family needs k >= 1");
    if (!(a > 1.0)) throw hypothesis_error("extremal pole must satisfy a > 1");

    const std::vector<cplx> zeros(static_cast<std::size_t>(n), cplx(-k));
    const std::vector<cplx> poles(static_cast<std::size_t>(n), cplx(a));
    return RationalFn(Polynomial::from_roots(zeros, cplx(1.0)), PoleSet(poles));
}

RationalFn blaschke_instance(const PoleSet& poles) {
    std::vector<cplx> roots;
    roots.reserve(static_cast<std::size_t>(poles.size()));
    cplx leading(1.0);
    for (const cplx& a : poles.poles()) {
        roots.push_back(1.0 / std::conj(a));
        leading *= -std::conj(a);
    }
    return RationalFn(Polynomial::from_roots(roots, leading), poles);
}

std::vector<RationalFn> boundary_cases(const PoleSet& poles) {
    std::vector<RationalFn> out;
    out.reserve(2);
    RationalFn b = blaschke_instance(poles);

    // numerator of B + 1 is p_B + w; the zeros land on the unit circle but
    // have no closed form, so the root list stays empty
    const Polynomial w = Polynomial::from_roots(poles.poles(), cplx(1.0));
    const auto& pb = b.numerator().coeffs();
    const auto& wc = w.coeffs();
    std::vector<cplx> sum(wc.size());
    for (std::size_t m = 0; m < sum.size(); ++m) {
        sum[m] = wc[m];
        if (m < pb.size()) sum[m] += pb[m];
    }
    RationalFn b_plus_one(Polynomial(std::move(sum)), poles);

    out.push_back(std::move(b));
    out.push_back(std::move(b_plus_one));
    return out;
}

std::vector<std::vector<double>> gen_zeta_tuples(int count, int max_len, double zeta_max,
                                                 std::uint64_t seed) {
    if (count < 0 || max_len < 1)
        throw std::invalid_argument("tuple count/length out of range");
    if (!(zeta_max >= 1.0))
        throw std::invalid_argument("zeta_max must be >= 1");

    std::vector<std::vector<double>> out;
    out.reserve(static_cast<std::size_t>(count));
    for (int t = 0; t < count; ++t) {
        std::mt19937_64 rng(split_seed(seed, static_cast<std::uint64_t>(t)));
        const int len =
            1 + static_cast<int>(next_unit(rng) * max_len) % max_len;
        std::vector<double> zetas(static_cast<std::size_t>(len));
        for (double& zeta : zetas) zeta = 1.0 + (zeta_max - 1.0) * next_unit(rng);
        out.push_back(std::move(zetas));
    }
    return out;
}

} // namespace ratineq
