#pragma once

#include <complex>
#include <vector>

#include "ratineq/poly.hpp"

namespace ratineq {

/// Rejection margin for pole placement: construction requires |a_j| > 1 + kPoleMargin,
/// keeping circle evaluations well-conditioned.
inline constexpr double kPoleMargin = 1e-9;

/// Guard radius below which evaluation at z is refused as "at a pole".
inline constexpr double kPoleGuard = 1e-12;

/// Exclusion radius around zeros and poles used by the checks: points closer
/// than this to a singularity of the inequality are skipped, not judged.
inline constexpr double kExclusionRadius = 1e-8;

/// Point e^{i theta} on the unit circle. theta is normalized to [0, 2pi).
struct CirclePoint {
    double theta;
    cplx z;

    explicit CirclePoint(double theta_radians);
};

/// The prescribed poles a_1..a_n, all strictly outside the closed unit disk.
/// Defines w(z) = prod (z - a_j) and the Blaschke product
/// B(z) = prod (1 - conj(a_j) z) / (z - a_j).
class PoleSet {
public:
    explicit PoleSet(std::vector<cplx> poles);

    const std::vector<cplx>& poles() const noexcept { return poles_; }
    int size() const noexcept { return static_cast<int>(poles_.size()); }

    /// w(z) = prod (z - a_j), evaluated as the factored product.
    cplx w_eval(cplx z) const;

    /// w'(z) by the product rule over the factors.
    cplx w_derivative_eval(cplx z) const;

    /// Index of the pole nearest to z together with the distance.
    std::pair<int, double> nearest_pole(cplx z) const;

    /// Throws near_pole_error if z is within `radius` of a pole.
    void require_clear_of_poles(cplx z, double radius = kPoleGuard) const;

private:
    std::vector<cplx> poles_;
};

/// B(z) at any z away from the poles. Unimodular on the unit circle.
cplx blaschke_eval(const PoleSet& poles, cplx z);

/// B'(z) by the product rule: sum_j (|a_j|^2 - 1)/(z - a_j)^2 * prod_{m != j} b_m.
cplx blaschke_derivative(const PoleSet& poles, cplx z);

/// |B'(z)| for z on the unit circle, where B' is the product-rule derivative.
/// Equals Re(z B'(z)/B(z)) there, with vanishing imaginary part.
double blaschke_derivative_modulus(const PoleSet& poles, const CirclePoint& z);

/// r = p / w with w given by a PoleSet. Immutable after construction.
class RationalFn {
public:
    /// Requires degree(p) <= n = |poles| and no numerator root within 1e-12
    /// of a pole (checked when the root list is present).
    RationalFn(Polynomial numerator, PoleSet poles);

    const Polynomial& numerator() const noexcept { return numerator_; }
    const PoleSet& poles() const noexcept { return poles_; }
    int order() const noexcept { return poles_.size(); }

    /// p(z)/w(z). Throws near_pole_error within the pole guard radius.
    cplx eval(cplx z) const;

    /// r'(z) = (p'w - pw')/w^2 by the quotient rule.
    cplx derivative_eval(cplx z) const;

    /// Distance from z to the nearest numerator root; +inf when no root list.
    double nearest_zero_distance(cplx z) const;

    /// r*(z) = B(z) conj(r(1/conj(z))), realized symbolically as p*/w with the
    /// same poles; |r*| = |r| on the unit circle. The reflected zeros of r*
    /// may legitimately coincide with poles (r = B gives r* = w/w), so this
    /// path skips the separation guard of the public constructor.
    RationalFn conjugate_transform() const;

private:
    struct derived_tag {};
    RationalFn(derived_tag, Polynomial numerator, PoleSet poles);

    Polynomial numerator_;
    Polynomial numerator_derivative_;
    PoleSet poles_;
};

inline RationalFn make_rational(Polynomial numerator, PoleSet poles) {
    return RationalFn(std::move(numerator), std::move(poles));
}

} // namespace ratineq
