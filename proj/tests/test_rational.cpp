#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include "doctest.h"
#include "ratineq/errors.hpp"
#include "ratineq/generators.hpp"
#include "ratineq/rational.hpp"

using ratineq::blaschke_derivative_modulus;
using ratineq::blaschke_eval;
using ratineq::CirclePoint;
using ratineq::cplx;
using ratineq::PoleSet;
using ratineq::Polynomial;
using ratineq::RationalFn;

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

RationalFn simple() {
    // (z + 2)/(z - 3)
    return RationalFn(Polynomial::from_roots({cplx(-2.0)}, cplx(1.0)),
                      PoleSet({cplx(3.0)}));
}

} // namespace

TEST_CASE("pole set validation") {
    CHECK_THROWS_AS(PoleSet({cplx(0.5)}), ratineq::hypothesis_error);
    CHECK_THROWS_AS(PoleSet({cplx(1.0 + 1e-12)}), ratineq::hypothesis_error);
    // the margin boundary itself is rejected; anything past it is admissible
    CHECK_THROWS_AS(PoleSet({cplx(1.0 + 1e-9)}), ratineq::hypothesis_error);
    CHECK_NOTHROW(PoleSet({cplx(1.0 + 1e-6)}));
    CHECK_THROWS_AS(PoleSet({}), std::invalid_argument);
    CHECK_NOTHROW(PoleSet({cplx(1.01)}));
}

TEST_CASE("rational construction guards") {
    const PoleSet two_poles({cplx(2.0), cplx(3.0)});
    CHECK_NOTHROW(RationalFn(Polynomial({cplx(2.0), cplx(1.0)}), PoleSet({cplx(3.0)})));
    // degree 3 numerator over 2 poles
    CHECK_THROWS_AS(
        RationalFn(Polynomial({cplx(1.0), cplx(0.0), cplx(0.0), cplx(1.0)}), two_poles),
        std::invalid_argument);
    // root sitting on a pole
    CHECK_THROWS_AS(RationalFn(Polynomial::from_roots({cplx(2.0)}, cplx(1.0)), two_poles),
                    std::invalid_argument);
}

TEST_CASE("rational evaluation oracles") {
    const auto r = simple();
    CHECK(std::abs(r.eval(cplx(1.0)) - cplx(-1.5)) < 1e-15);

    const auto r2 = RationalFn(Polynomial::from_roots({cplx(-2.0), cplx(-2.0)}, cplx(1.0)),
                               PoleSet({cplx(3.0), cplx(3.0)}));
    CHECK(std::abs(r2.eval(cplx(1.0)) - cplx(2.25)) < 1e-14);
}

TEST_CASE("derivative oracles") {
    const auto r = simple();
    // quotient rule: -5/(z-3)^2 at z=1
    CHECK(std::abs(r.derivative_eval(cplx(1.0)) - cplx(-1.25)) < 1e-14);

    // constant numerator: d/dz (z-2)^{-1} = -(z-2)^{-2}, so -0.25 at z=0
    const auto rc = RationalFn(Polynomial({cplx(1.0)}), PoleSet({cplx(2.0)}));
    CHECK(std::abs(rc.derivative_eval(cplx(0.0)) - cplx(-0.25)) < 1e-15);
}

TEST_CASE("derivative agrees with finite differences") {
    std::mt19937_64 rng(31);
    int checked = 0;
    for (int trial = 0; trial < 100; ++trial) {
        ratineq::InstanceSpec spec;
        spec.n = 1 + static_cast<int>(rng() % 6);
        spec.seed = rng();
        const auto r = ratineq::gen_instance(spec);
        const cplx z = std::polar(1.0, kTwoPi * trial / 100.0);
        const double h = 1e-6;
        const cplx fd = (r.eval(z + h) - r.eval(z - h)) / (2.0 * h);
        const cplx an = r.derivative_eval(z);
        if (std::abs(an) < 1e-6) continue; // FD loses all digits near critical points
        CHECK(std::abs(fd - an) < 2e-6 * std::abs(an) + 1e-9);
        ++checked;
    }
    CHECK(checked > 80);
}

TEST_CASE("derivative matches the logarithmic form when roots are known") {
    std::mt19937_64 rng(47);
    for (int trial = 0; trial < 60; ++trial) {
        ratineq::InstanceSpec spec;
        spec.n = 1 + static_cast<int>(rng() % 6);
        spec.seed = rng();
        const auto r = ratineq::gen_instance(spec);
        const cplx z = std::polar(1.0, kTwoPi * trial / 60.0);
        const cplx rv = r.eval(z);
        if (std::abs(rv) < 1e-10) continue;
        cplx log_form(0.0);
        for (const cplx& root : *r.numerator().roots()) log_form += 1.0 / (z - root);
        for (const cplx& a : r.poles().poles()) log_form -= 1.0 / (z - a);
        CHECK(std::abs(r.derivative_eval(z) - rv * log_form) < 1e-9 * std::abs(rv * log_form));
    }
}

TEST_CASE("near-pole evaluation raises with the pole index") {
    const auto r = RationalFn(Polynomial({cplx(1.0), cplx(0.0)}),
                              PoleSet({cplx(5.0), cplx(2.0)}));
    try {
        (void)r.eval(cplx(2.0) + cplx(1e-14));
        FAIL("expected near_pole_error");
    } catch (const ratineq::near_pole_error& e) {
        CHECK(e.pole_index() == 1);
    }
}

TEST_CASE("blaschke values") {
    CHECK(std::abs(blaschke_eval(PoleSet({cplx(2.0)}), cplx(1.0)) - cplx(1.0)) < 1e-15);

    const PoleSet two({cplx(2.0), cplx(3.0)});
    for (int t = 0; t < 256; ++t) {
        const cplx z = std::polar(1.0, kTwoPi * t / 256.0);
        CHECK(std::abs(std::abs(blaschke_eval(two, z)) - 1.0) < 1e-12);
    }
}

TEST_CASE("blaschke derivative modulus closed forms") {
    CHECK(blaschke_derivative_modulus(PoleSet({cplx(2.0)}), CirclePoint(0.0)) ==
          doctest::Approx(3.0).epsilon(1e-12));
    CHECK(blaschke_derivative_modulus(PoleSet({cplx(3.0)}), CirclePoint(0.0)) ==
          doctest::Approx(2.0).epsilon(1e-12));
    CHECK(blaschke_derivative_modulus(PoleSet({cplx(2.0), cplx(2.0), cplx(2.0)}),
                                      CirclePoint(0.0)) ==
          doctest::Approx(9.0).epsilon(1e-12));
}

TEST_CASE("blaschke derivative modulus equals the additive form on the circle") {
    std::mt19937_64 rng(59);
    for (int trial = 0; trial < 50; ++trial) {
        ratineq::InstanceSpec ps;
        ps.n = 1 + static_cast<int>(rng() % 8);
        ps.seed = rng();
        const auto poles = ratineq::gen_poles(ps);
        for (int t = 0; t < 32; ++t) {
            const CirclePoint z(kTwoPi * t / 32.0);
            double additive = 0.0;
            for (const cplx& a : poles.poles())
                additive += (std::norm(a) - 1.0) / std::norm(z.z - a);
            CHECK(blaschke_derivative_modulus(poles, z) ==
                  doctest::Approx(additive).epsilon(1e-10));
        }
    }
}

TEST_CASE("conjugate transform of B has numerator w") {
    const PoleSet poles({cplx(2.0, 1.0), cplx(-3.0, 0.5)});
    const auto B = ratineq::blaschke_instance(poles);
    const auto star = B.conjugate_transform();
    // B* = w/w: numerator coefficients must match prod (z - a_j)
    const auto w = Polynomial::from_roots(poles.poles(), cplx(1.0));
    REQUIRE(star.numerator().degree() == w.degree());
    for (std::size_t j = 0; j < w.coeffs().size(); ++j)
        CHECK(std::abs(star.numerator().coeffs()[j] - w.coeffs()[j]) < 1e-12);
    // so B* is identically 1 on the circle
    for (int t = 0; t < 64; ++t)
        CHECK(std::abs(star.eval(std::polar(1.0, kTwoPi * t / 64.0)) - cplx(1.0)) < 1e-11);
}

TEST_CASE("conjugate transform is an involution on coefficients") {
    const auto r = RationalFn(Polynomial({cplx(1.0, 2.0), cplx(0.5), cplx(3.0, -1.0)}),
                              PoleSet({cplx(2.0), cplx(0.0, -3.0)}));
    const auto back = r.conjugate_transform().conjugate_transform();
    REQUIRE(back.numerator().degree() == r.numerator().degree());
    for (std::size_t j = 0; j < r.numerator().coeffs().size(); ++j)
        CHECK(back.numerator().coeffs()[j] == r.numerator().coeffs()[j]);
}

TEST_CASE("conjugate transform preserves modulus on the circle") {
    const auto r = simple();
    const auto star = r.conjugate_transform();
    for (int t = 0; t < 128; ++t) {
        const cplx z = std::polar(1.0, kTwoPi * t / 128.0);
        const double rm = std::abs(r.eval(z));
        CHECK(std::abs(std::abs(star.eval(z)) - rm) < 1e-11 * std::max(1.0, rm));
    }
    // and matches the defining formula pointwise
    for (int t = 0; t < 32; ++t) {
        const cplx z = std::polar(1.0, kTwoPi * t / 32.0);
        const cplx direct = blaschke_eval(r.poles(), z) * std::conj(r.eval(1.0 / std::conj(z)));
        CHECK(std::abs(star.eval(z) - direct) < 1e-11);
    }
}

TEST_CASE("conjugate transform reflects known roots") {
    const auto r = RationalFn(Polynomial::from_roots({cplx(-2.0), cplx(4.0, 1.0)}, cplx(1.0)),
                              PoleSet({cplx(3.0), cplx(5.0)}));
    const auto star = r.conjugate_transform();
    REQUIRE(star.numerator().roots().has_value());
    const auto& roots = *star.numerator().roots();
    REQUIRE(roots.size() == 2);
    // reflections 1/conj(z_j) of the originals, in order
    CHECK(std::abs(roots[0] - cplx(-0.5)) < 1e-15);
    CHECK(std::abs(roots[1] - 1.0 / std::conj(cplx(4.0, 1.0))) < 1e-15);
}

TEST_CASE("circle point stays on the unit circle") {
    for (double theta : {0.0, 1.0, 3.14, 6.28}) {
        const CirclePoint p(theta);
        CHECK(std::abs(std::abs(p.z) - 1.0) < 1e-15);
        CHECK(p.theta == theta);
    }
}
