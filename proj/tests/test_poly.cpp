#include <cmath>
#include <complex>
#include <random>

#include "doctest.h"
#include "ratineq/poly.hpp"

using ratineq::cplx;
using ratineq::Polynomial;

namespace {

double rel_err(cplx got, cplx want) {
    const double scale = std::max(1.0, std::abs(want));
    return std::abs(got - want) / scale;
}

} // namespace

TEST_CASE("from_roots expands linear factors") {
    const auto p = Polynomial::from_roots({cplx(-2.0)}, cplx(1.0));
    REQUIRE(p.degree() == 1);
    CHECK(p.coeffs()[0] == cplx(2.0));
    CHECK(p.coeffs()[1] == cplx(1.0));
    REQUIRE(p.roots().has_value());
    CHECK(p.roots()->size() == 1);

    const auto c = Polynomial::from_roots({}, cplx(5.0));
    CHECK(c.degree() == 0);
    CHECK(c.coeffs()[0] == cplx(5.0));

    const auto q = Polynomial::from_roots({cplx(1.0, 1.0), cplx(1.0, -1.0)}, cplx(1.0));
    REQUIRE(q.degree() == 2);
    CHECK(rel_err(q.coeffs()[0], cplx(2.0)) < 1e-14);
    CHECK(rel_err(q.coeffs()[1], cplx(-2.0)) < 1e-14);
    CHECK(rel_err(q.coeffs()[2], cplx(1.0)) < 1e-14);
}

TEST_CASE("from_roots rejects bad input") {
    CHECK_THROWS_AS(Polynomial::from_roots({cplx(1.0)}, cplx(0.0)), std::invalid_argument);
    std::vector<cplx> many(Polynomial::kMaxExpansionDegree + 1, cplx(1.0));
    CHECK_THROWS_AS(Polynomial::from_roots(many, cplx(1.0)), std::invalid_argument);
}

TEST_CASE("eval matches hand values") {
    const Polynomial p({cplx(2.0), cplx(-2.0), cplx(1.0)});
    CHECK(p.eval(cplx(1.0)) == cplx(1.0));

    const Polynomial cube({cplx(8.0), cplx(12.0), cplx(6.0), cplx(1.0)});
    CHECK(cube.eval(cplx(1.0)) == cplx(27.0));
}

TEST_CASE("eval agrees with the root-product form") {
    std::mt19937_64 rng(101);
    std::uniform_real_distribution<double> mod(0.2, 3.0), ang(0.0, 6.28);
    for (int trial = 0; trial < 100; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 8);
        std::vector<cplx> roots;
        for (int j = 0; j < n; ++j) roots.push_back(std::polar(mod(rng), ang(rng)));
        const cplx lead = std::polar(1.0, ang(rng));
        const auto p = Polynomial::from_roots(roots, lead);
        const cplx z = std::polar(mod(rng), ang(rng));
        cplx prod = lead;
        for (const cplx& r : roots) prod *= (z - r);
        CHECK(rel_err(p.eval(z), prod) < 1e-12);
    }
}

TEST_CASE("derivative is coefficient-wise") {
    const Polynomial cube({cplx(8.0), cplx(12.0), cplx(6.0), cplx(1.0)});
    const auto d = cube.derivative();
    REQUIRE(d.degree() == 2);
    CHECK(d.coeffs()[0] == cplx(12.0));
    CHECK(d.coeffs()[1] == cplx(12.0));
    CHECK(d.coeffs()[2] == cplx(3.0));
    CHECK_FALSE(d.roots().has_value());

    const Polynomial c({cplx(5.0)});
    CHECK(c.derivative().is_zero());

    std::vector<cplx> z7(8, cplx(0.0));
    z7[7] = cplx(1.0);
    const auto dz7 = Polynomial(z7).derivative();
    REQUIRE(dz7.degree() == 6);
    CHECK(dz7.coeffs()[6] == cplx(7.0));
}

TEST_CASE("reverse_conjugate reverses and conjugates") {
    const Polynomial p({cplx(2.0), cplx(1.0)});
    const auto star = p.reverse_conjugate(1);
    REQUIRE(star.degree() == 1);
    CHECK(star.coeffs()[0] == cplx(1.0));
    CHECK(star.coeffs()[1] == cplx(2.0));

    std::vector<cplx> zn(6, cplx(0.0));
    zn[5] = cplx(1.0);
    const auto zn_star = Polynomial(zn).reverse_conjugate(5);
    CHECK(zn_star.degree() == 0);
    CHECK(zn_star.coeffs()[0] == cplx(1.0));

    CHECK_THROWS_AS(p.reverse_conjugate(0), std::invalid_argument);
}

TEST_CASE("reverse_conjugate is an involution") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    for (int trial = 0; trial < 50; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 6);
        std::vector<cplx> coeffs;
        for (int j = 0; j <= n; ++j) coeffs.emplace_back(u(rng), u(rng));
        if (std::abs(coeffs.back()) < 0.1) coeffs.back() = cplx(1.0);
        const Polynomial p(coeffs);
        const auto round_trip = p.reverse_conjugate(p.degree()).reverse_conjugate(p.degree());
        REQUIRE(round_trip.degree() == p.degree());
        for (std::size_t j = 0; j < p.coeffs().size(); ++j)
            CHECK(round_trip.coeffs()[j] == p.coeffs()[j]);
    }
}

TEST_CASE("reverse_conjugate preserves modulus on the circle") {
    std::mt19937_64 rng(19);
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    for (int trial = 0; trial < 20; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 6);
        std::vector<cplx> coeffs;
        for (int j = 0; j <= n; ++j) coeffs.emplace_back(u(rng), u(rng));
        if (std::abs(coeffs.back()) < 0.1) coeffs.back() = cplx(1.0);
        const Polynomial p(coeffs);
        const auto star = p.reverse_conjugate(p.degree());
        for (int t = 0; t < 64; ++t) {
            const cplx z = std::polar(1.0, 2.0 * 3.14159265358979323846 * t / 64);
            const double pm = std::abs(p.eval(z));
            const double sm = std::abs(star.eval(z));
            CHECK(std::abs(pm - sm) < 1e-12 * std::max(1.0, pm));
        }
    }
}

TEST_CASE("trailing coefficients trim") {
    const Polynomial p({cplx(1.0), cplx(2.0), cplx(1e-20)});
    CHECK(p.degree() == 1);
    CHECK(p.leading() == cplx(2.0));

    const Polynomial zero({cplx(0.0), cplx(0.0)});
    CHECK(zero.is_zero());
    CHECK(zero.degree() == 0);
}

TEST_CASE("vieta modulus identity for expanded roots") {
    std::mt19937_64 rng(23);
    std::uniform_real_distribution<double> mod(0.3, 10.0), ang(0.0, 6.28);
    for (int trial = 0; trial < 50; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 12);
        std::vector<cplx> roots;
        double prod = 1.0;
        for (int j = 0; j < n; ++j) {
            roots.push_back(std::polar(mod(rng), ang(rng)));
            prod *= std::abs(roots.back());
        }
        const auto p = Polynomial::from_roots(roots, std::polar(2.0, ang(rng)));
        const double c0 = std::abs(p.coeffs()[0]);
        const double cn = std::abs(p.leading());
        CHECK(std::abs(c0 - cn * prod) < 1e-10 * std::max(1.0, cn * prod));
    }
}

TEST_CASE("scaled multiplies every coefficient") {
    const Polynomial p({cplx(1.0), cplx(2.0)});
    const auto q = p.scaled(cplx(0.0, 2.0));
    CHECK(q.coeffs()[0] == cplx(0.0, 2.0));
    CHECK(q.coeffs()[1] == cplx(0.0, 4.0));
    CHECK(p.max_coeff_modulus() == 2.0);
}
