#include <cmath>
#include <complex>
#include <set>

#include "doctest.h"
#include "ratineq/errors.hpp"
#include "ratineq/generators.hpp"

using namespace ratineq;

TEST_CASE("spec validation") {
    InstanceSpec spec;
    CHECK_NOTHROW(spec.validate());
    spec.n = 0;
    CHECK_THROWS_AS(spec.validate(), std::invalid_argument);
    spec.n = 40;
    CHECK_THROWS_AS(spec.validate(), std::invalid_argument);
    spec = {};
    spec.k = 0.5;
    CHECK_THROWS_AS(spec.validate(), std::invalid_argument);
    spec = {};
    spec.pole_margin = 0.0;
    CHECK_THROWS_AS(spec.validate(), std::invalid_argument);
    spec = {};
    spec.boundary_prob = 1.5;
    CHECK_THROWS_AS(spec.validate(), std::invalid_argument);
}

TEST_CASE("same seed reproduces the instance exactly") {
    InstanceSpec spec;
    spec.n = 5;
    spec.k = 1.5;
    spec.seed = 99;
    const auto a = gen_instance(spec);
    const auto b = gen_instance(spec);
    REQUIRE(a.numerator().coeffs().size() == b.numerator().coeffs().size());
    for (std::size_t j = 0; j < a.numerator().coeffs().size(); ++j)
        CHECK(a.numerator().coeffs()[j] == b.numerator().coeffs()[j]);
    for (int j = 0; j < a.poles().size(); ++j)
        CHECK(a.poles().poles()[j] == b.poles().poles()[j]);

    spec.seed = 100;
    const auto c = gen_instance(spec);
    CHECK(a.numerator().coeffs()[0] != c.numerator().coeffs()[0]);
}

TEST_CASE("split_seed decorrelates child streams") {
    std::set<std::uint64_t> seen;
    for (std::uint64_t i = 0; i < 1000; ++i) seen.insert(split_seed(42, i));
    CHECK(seen.size() == 1000);
    CHECK(split_seed(42, 0) != split_seed(43, 0));
}

TEST_CASE("generated instances respect the shells") {
    for (std::uint64_t s = 0; s < 200; ++s) {
        InstanceSpec spec;
        spec.n = 1 + static_cast<int>(s % 8);
        spec.k = 1.0 + 0.25 * static_cast<double>(s % 5);
        spec.boundary_prob = 0.3;
        spec.seed = split_seed(5, s);
        const auto r = gen_instance(spec);
        REQUIRE(r.numerator().roots().has_value());
        CHECK(static_cast<int>(r.numerator().roots()->size()) == spec.n);
        for (const cplx& z : *r.numerator().roots()) {
            CHECK(std::abs(z) >= spec.k - 1e-12);
            CHECK(std::abs(z) <= spec.k + spec.zero_width + 1e-12);
        }
        for (const cplx& a : r.poles().poles()) {
            CHECK(std::abs(a) >= 1.0 + spec.pole_margin - 1e-12);
            CHECK(std::abs(a) <= 1.0 + spec.pole_margin + spec.pole_width + 1e-12);
        }
        CHECK(std::abs(std::abs(r.numerator().leading()) - 1.0) < 1e-12);
    }
}

TEST_CASE("boundary draws land exactly on the shell") {
    InstanceSpec spec;
    spec.n = 6;
    spec.k = 2.0;
    spec.force_boundary = true;
    spec.seed = 17;
    const auto r = gen_instance(spec);
    for (const cplx& z : *r.numerator().roots()) CHECK(std::abs(z) == 2.0);
}

TEST_CASE("boundary probability mixes the two draw kinds") {
    int exact = 0, interior = 0;
    for (std::uint64_t s = 0; s < 100; ++s) {
        InstanceSpec spec;
        spec.n = 4;
        spec.boundary_prob = 0.5;
        spec.seed = split_seed(23, s);
        for (const cplx& z : *gen_instance(spec).numerator().roots()) {
            if (std::abs(z) == spec.k)
                ++exact;
            else
                ++interior;
        }
    }
    CHECK(exact > 100);
    CHECK(interior > 100);
}

TEST_CASE("zeros keep clear of poles") {
    for (std::uint64_t s = 0; s < 300; ++s) {
        InstanceSpec spec;
        spec.n = 4;
        spec.k = 1.0; // zero shell [1,2] overlaps the pole shell [1.5,2.5]
        spec.seed = split_seed(31, s);
        const auto r = gen_instance(spec);
        for (const cplx& z : *r.numerator().roots())
            CHECK(r.poles().nearest_pole(z).second >= 1e-9);
    }
}

TEST_CASE("extremal instance layout") {
    const auto r = extremal_instance(3, 2.0, 3.0);
    CHECK(r.order() == 3);
    REQUIRE(r.numerator().roots().has_value());
    for (const cplx& z : *r.numerator().roots()) CHECK(z == cplx(-2.0));
    for (const cplx& a : r.poles().poles()) CHECK(a == cplx(3.0));
    // (z+2)^3 coefficients
    CHECK(std::abs(r.numerator().coeffs()[0] - cplx(8.0)) < 1e-12);
    CHECK(std::abs(r.numerator().coeffs()[1] - cplx(12.0)) < 1e-12);

    CHECK_THROWS_AS(extremal_instance(1, 2.0, 1.0), hypothesis_error);
    CHECK_THROWS_AS(extremal_instance(1, 0.5, 3.0), hypothesis_error);
    CHECK_THROWS_AS(extremal_instance(0, 1.0, 2.0), std::invalid_argument);
}

TEST_CASE("blaschke instance multiplies out to B") {
    const PoleSet poles({cplx(2.0), cplx(0.0, 3.0)});
    const auto B = blaschke_instance(poles);
    for (int t = 0; t < 64; ++t) {
        const cplx z = std::polar(1.0, 2.0 * 3.14159265358979323846 * t / 64);
        CHECK(std::abs(B.eval(z) - blaschke_eval(poles, z)) < 1e-12);
    }
}

TEST_CASE("boundary cases are B and B plus one") {
    const PoleSet poles({cplx(2.0)});
    const auto cases = boundary_cases(poles);
    REQUIRE(cases.size() == 2);
    const cplx z = std::polar(1.0, 1.0);
    CHECK(std::abs(cases[0].eval(z) - blaschke_eval(poles, z)) < 1e-12);
    CHECK(std::abs(cases[1].eval(z) - (blaschke_eval(poles, z) + cplx(1.0))) < 1e-12);
}

TEST_CASE("zeta tuples honor the bounds") {
    const auto tuples = gen_zeta_tuples(200, 10, 100.0, 3);
    REQUIRE(tuples.size() == 200);
    for (const auto& t : tuples) {
        CHECK(t.size() >= 1);
        CHECK(t.size() <= 10);
        for (double zv : t) {
            CHECK(zv >= 1.0);
            CHECK(zv <= 100.0);
        }
    }
    const auto again = gen_zeta_tuples(200, 10, 100.0, 3);
    CHECK(again == tuples);
}
