#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include "doctest.h"
#include "ratineq/generators.hpp"
#include "ratineq/norms.hpp"
#include "ratineq/poly.hpp"
#include "ratineq/rational.hpp"

using ratineq::cplx;
using ratineq::NormConfig;
using ratineq::PoleSet;
using ratineq::Polynomial;
using ratineq::RationalFn;
using ratineq::sup_norm_circle;

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}

TEST_CASE("norm of (z+2)^3 is 27 at theta 0") {
    const auto p = Polynomial::from_roots({cplx(-2.0), cplx(-2.0), cplx(-2.0)}, cplx(1.0));
    const auto est = sup_norm_circle(p);
    CHECK(est.value == doctest::Approx(27.0).epsilon(1e-12));
    CHECK(std::abs(est.argmax_theta) < 1e-6);
    CHECK(est.refined);
}

TEST_CASE("norm of the n=1 extremal instance") {
    // (z+2)/(z-3): max |z+2| = 3 and min |z-3| = 2 both at z = 1
    const auto r = ratineq::extremal_instance(1, 2.0, 3.0);
    const auto est = sup_norm_circle(r);
    CHECK(est.value == doctest::Approx(1.5).epsilon(1e-12));
    CHECK(std::min(est.argmax_theta, kTwoPi - est.argmax_theta) < 1e-6);
}

TEST_CASE("norm of z^n is 1 everywhere") {
    std::vector<cplx> zn(6, cplx(0.0));
    zn[5] = cplx(1.0);
    const auto est = sup_norm_circle(Polynomial(zn));
    CHECK(est.value == doctest::Approx(1.0).epsilon(1e-13));
}

TEST_CASE("far-pole degenerate scale survives") {
    std::vector<cplx> zn(6, cplx(0.0));
    zn[5] = cplx(1.0);
    std::vector<cplx> far(5, cplx(1e6));
    const auto r = RationalFn(Polynomial(zn), PoleSet(far));
    const auto est = sup_norm_circle(r);
    CHECK(est.value > 0.0);
    CHECK(est.value == doctest::Approx(std::pow(1e6 - 1.0, -5.0)).epsilon(1e-9));
}

TEST_CASE("norm beats a coarse reference grid and matches a dense one") {
    std::mt19937_64 rng(71);
    for (int trial = 0; trial < 25; ++trial) {
        ratineq::InstanceSpec spec;
        spec.n = 1 + static_cast<int>(rng() % 6);
        spec.seed = rng();
        const auto r = ratineq::gen_instance(spec);
        const auto est = sup_norm_circle(r);
        double dense = 0.0;
        const int N = 100000;
        for (int t = 0; t < N; ++t)
            dense = std::max(dense, std::abs(r.eval(std::polar(1.0, kTwoPi * t / N))));
        CHECK(est.value >= dense * (1.0 - 1e-9));
        CHECK(est.value <= dense * (1.0 + 1e-6) + 1e-12);
    }
}

TEST_CASE("norm estimate is deterministic") {
    const auto r = ratineq::extremal_instance(3, 1.0, 2.0);
    const auto a = sup_norm_circle(r);
    const auto b = sup_norm_circle(r);
    CHECK(a.value == b.value);
    CHECK(a.argmax_theta == b.argmax_theta);
    CHECK(a.samples_used == b.samples_used);
}

TEST_CASE("norm config validation") {
    NormConfig cfg;
    cfg.coarse_samples = 0;
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
    NormConfig fine;
    fine.coarse_samples = 512;
    const auto est = sup_norm_circle(ratineq::extremal_instance(1, 2.0, 3.0), fine);
    CHECK(est.value == doctest::Approx(1.5).epsilon(1e-10));
}

TEST_CASE("generic circle function overload") {
    const auto est = sup_norm_circle([](cplx z) { return z * z + cplx(1.0); });
    // |z^2+1| maxes at z = +-1 with value 2
    CHECK(est.value == doctest::Approx(2.0).epsilon(1e-12));
}
