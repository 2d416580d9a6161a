#pragma once

#include <complex>
#include <optional>
#include <vector>

namespace ratineq {

using cplx = std::complex<double>;

/// Complex polynomial c_0 + c_1 z + ... + c_n z^n stored in ascending powers.
/// Coefficients are trimmed of trailing (highest-order) entries whose modulus
/// falls below 1e-14 * max|c_j|, so degree() == coeffs().size() - 1 always.
/// A root list may be attached when the factored form is known; it is carried
/// through serialization and used by the checks that need zero locations.
class Polynomial {
public:
    /// Degree cap for root-form expansion; keeps convolution round-off below
    /// the 1e-10 tolerances used by the expansion invariants.
    static constexpr int kMaxExpansionDegree = 30;

    Polynomial() : coeffs_{cplx(0.0)} {}

    explicit Polynomial(std::vector<cplx> coeffs,
                        std::optional<std::vector<cplx>> roots = std::nullopt);

    /// Expands leading * prod (z - z_j) by sequential linear-factor
    /// convolution. Throws std::invalid_argument for a zero leading
    /// coefficient or more than max_degree roots.
    static Polynomial from_roots(const std::vector<cplx>& roots, cplx leading,
                                 int max_degree = kMaxExpansionDegree);

    const std::vector<cplx>& coeffs() const noexcept { return coeffs_; }
    const std::optional<std::vector<cplx>>& roots() const noexcept { return roots_; }

    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    cplx leading() const noexcept { return coeffs_.back(); }
    bool is_zero() const noexcept { return coeffs_.size() == 1 && coeffs_[0] == cplx(0.0); }

    /// Horner evaluation.
    cplx eval(cplx z) const;

    /// Coefficient-wise derivative; the root list does not survive.
    Polynomial derivative() const;

    /// p*(z) = z^n conj(p(1/conj(z))): pads with zeros up to degree n, then
    /// reverses and conjugates the coefficient list. Applying it twice with
    /// the same n returns p exactly. Throws if n < degree(p).
    Polynomial reverse_conjugate(int n) const;

    Polynomial scaled(cplx factor) const;

    /// Largest |c_j|.
    double max_coeff_modulus() const;

private:
    struct exact_tag {};
    Polynomial(exact_tag, std::vector<cplx> coeffs, std::optional<std::vector<cplx>> roots);

    std::vector<cplx> coeffs_;
    std::optional<std::vector<cplx>> roots_;
};

} // namespace ratineq
