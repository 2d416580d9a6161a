#include "ratineq/rational.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

#include "ratineq/errors.hpp"

namespace ratineq {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}

CirclePoint::CirclePoint(double theta_radians) {
    theta = std::fmod(theta_radians, kTwoPi);
    if (theta < 0.0) theta += kTwoPi;
    z = std::polar(1.0, theta);
}

PoleSet::PoleSet(std::vector<cplx> poles) : poles_(std::move(poles)) {
    if (poles_.empty())
        throw hypothesis_error("PoleSet: at least one pole is required");
    for (std::size_t j = 0; j < poles_.size(); ++j) {
        if (std::abs(poles_[j]) <= 1.0 + kPoleMargin)
            throw hypothesis_error("PoleSet: pole " + std::to_string(j) +
                                   " lies in the closed unit disk (margin " +
                                   std::to_string(kPoleMargin) + ")");
    }
}

cplx PoleSet::w_eval(cplx z) const {
    cplx acc(1.0);
    for (const cplx& a : poles_) acc *= (z - a);
    return acc;
}

cplx PoleSet::w_derivative_eval(cplx z) const {
    // sum over j of prod_{m != j} (z - a_m); n is small, the O(n^2) loop
    // avoids dividing out a factor that may vanish
    const std::size_t n = poles_.size();
    cplx acc(0.0);
    for (std::size_t j = 0; j < n; ++j) {
        cplx term(1.0);
        for (std::size_t m = 0; m < n; ++m)
            if (m != j) term *= (z - poles_[m]);
        acc += term;
    }
    return acc;
}

std::pair<int, double> PoleSet::nearest_pole(cplx z) const {
    int idx = 0;
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < poles_.size(); ++j) {
        const double d = std::abs(z - poles_[j]);
        if (d < best) {
            best = d;
            idx = static_cast<int>(j);
        }
    }
    return {idx, best};
}

void PoleSet::require_clear_of_poles(cplx z, double radius) const {
    const auto [idx, dist] = nearest_pole(z);
    if (dist < radius)
        throw near_pole_error("evaluation point within " + std::to_string(radius) +
                                  " of pole " + std::to_string(idx),
                              idx);
}

cplx blaschke_eval(const PoleSet& poles, cplx z) {
    poles.require_clear_of_poles(z);
    cplx acc(1.0);
    for (const cplx& a : poles.poles())
        acc *= (cplx(1.0) - std::conj(a) * z) / (z - a);
    return acc;
}

cplx blaschke_derivative(const PoleSet& poles, cplx z) {
    poles.require_clear_of_poles(z);
    // Each factor b_j = (1 - conj(a_j) z)/(z - a_j) has
    // b_j' = (|a_j|^2 - 1)/(z - a_j)^2; assemble sum_j b_j' prod_{m!=j} b_m
    // without dividing out any factor value (b_m vanishes at 1/conj(a_m)).
    const auto& a = poles.poles();
    const std::size_t n = a.size();
    cplx acc(0.0);
    for (std::size_t j = 0; j < n; ++j) {
        cplx term = (std::norm(a[j]) - 1.0) / ((z - a[j]) * (z - a[j]));
        for (std::size_t m = 0; m < n; ++m)
            if (m != j) term *= (cplx(1.0) - std::conj(a[m]) * z) / (z - a[m]);
        acc += term;
    }
    return acc;
}

double blaschke_derivative_modulus(const PoleSet& poles, const CirclePoint& z) {
    return std::abs(blaschke_derivative(poles, z.z));
}

RationalFn::RationalFn(derived_tag, Polynomial numerator, PoleSet poles)
    : numerator_(std::move(numerator)),
      numerator_derivative_(numerator_.derivative()),
      poles_(std::move(poles)) {
    if (numerator_.degree() > poles_.size())
        throw std::invalid_argument("RationalFn: numerator degree exceeds the pole count");
}

RationalFn::RationalFn(Polynomial numerator, PoleSet poles)
    : RationalFn(derived_tag{}, std::move(numerator), std::move(poles)) {
    if (numerator_.roots()) {
        for (const cplx& root : *numerator_.roots()) {
            const auto [idx, dist] = poles_.nearest_pole(root);
            if (dist < 1e-12)
                throw std::invalid_argument("RationalFn: numerator root coincides with pole " +
                                            std::to_string(idx));
        }
    }
}

cplx RationalFn::eval(cplx z) const {
    poles_.require_clear_of_poles(z);
    return numerator_.eval(z) / poles_.w_eval(z);
}

cplx RationalFn::derivative_eval(cplx z) const {
    poles_.require_clear_of_poles(z);
    const cplx w = poles_.w_eval(z);
    const cplx wp = poles_.w_derivative_eval(z);
    const cplx p = numerator_.eval(z);
    const cplx pp = numerator_derivative_.eval(z);
    return (pp * w - p * wp) / (w * w);
}

double RationalFn::nearest_zero_distance(cplx z) const {
    if (!numerator_.roots()) return std::numeric_limits<double>::infinity();
    double best = std::numeric_limits<double>::infinity();
    for (const cplx& root : *numerator_.roots())
        best = std::min(best, std::abs(z - root));
    return best;
}

RationalFn RationalFn::conjugate_transform() const {
    const int n = poles_.size();
    Polynomial reflected = numerator_.reverse_conjugate(n);
    if (numerator_.roots()) {
        // Zeros of r* are the circle reflections 1/conj(z_j); padding a
        // numerator of degree d < n contributes n - d zeros at the origin,
        // while each zero of p at the origin drops the degree of p* by one.
        std::vector<cplx> star_roots;
        star_roots.reserve(static_cast<std::size_t>(n));
        for (const cplx& root : *numerator_.roots())
            if (root != cplx(0.0)) star_roots.push_back(1.0 / std::conj(root));
        const int pad = n - numerator_.degree();
        for (int j = 0; j < pad; ++j) star_roots.push_back(cplx(0.0));
        reflected = Polynomial(reflected.coeffs(), std::move(star_roots));
    }
    return RationalFn(derived_tag{}, std::move(reflected), poles_);
}

} // namespace ratineq
