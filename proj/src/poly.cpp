#include "ratineq/poly.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace ratineq {

namespace {

// Trailing coefficients below 1e-14 * max|c_j| are round-off, not degree.
// Exact mode drops only literal zeros, so coefficient permutations such as
// the reversal conjugate never lose a legitimately small entry.
void trim_trailing(std::vector<cplx>& c, bool exact_only) {
    double cutoff = 0.0;
    if (!exact_only) {
        double maxmod = 0.0;
        for (const cplx& v : c) maxmod = std::max(maxmod, std::abs(v));
        cutoff = 1e-14 * maxmod;
    }
    while (c.size() > 1 && std::abs(c.back()) <= cutoff) c.pop_back();
    if (c.size() == 1 && std::abs(c[0]) <= cutoff) c[0] = cplx(0.0);
}

} // namespace

Polynomial::Polynomial(std::vector<cplx> coeffs, std::optional<std::vector<cplx>> roots)
    : coeffs_(std::move(coeffs)), roots_(std::move(roots)) {
    if (coeffs_.empty()) coeffs_.push_back(cplx(0.0));
    // A root list certifies the degree; trim exact zeros only in that case.
    trim_trailing(coeffs_, roots_.has_value());
}

Polynomial::Polynomial(exact_tag, std::vector<cplx> coeffs,
                       std::optional<std::vector<cplx>> roots)
    : coeffs_(std::move(coeffs)), roots_(std::move(roots)) {
    if (coeffs_.empty()) coeffs_.push_back(cplx(0.0));
    trim_trailing(coeffs_, true);
}

Polynomial Polynomial::from_roots(const std::vector<cplx>& roots, cplx leading,
                                  int max_degree) {
    if (leading == cplx(0.0))
        throw std::invalid_argument("from_roots: leading coefficient must be nonzero");
    if (static_cast<int>(roots.size()) > max_degree)
        throw std::invalid_argument("from_roots: degree exceeds expansion cap");

    std::vector<cplx> c{leading};
    c.reserve(roots.size() + 1);
    for (const cplx& root : roots) {
        // multiply by (z - root)
        c.push_back(cplx(0.0));
        for (std::size_t i = c.size() - 1; i > 0; --i)
            c[i] = c[i - 1] - root * c[i];
        c[0] = -root * c[0];
    }
    return Polynomial(exact_tag{}, std::move(c), roots);
}

cplx Polynomial::eval(cplx z) const {
    cplx acc(0.0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * z + *it;
    return acc;
}

Polynomial Polynomial::derivative() const {
    if (coeffs_.size() == 1) return Polynomial();
    std::vector<cplx> d(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
        d[i - 1] = static_cast<double>(i) * coeffs_[i];
    return Polynomial(exact_tag{}, std::move(d), std::nullopt);
}

Polynomial Polynomial::reverse_conjugate(int n) const {
    if (n < degree())
        throw std::invalid_argument("reverse_conjugate: n is below the polynomial degree");
    std::vector<cplx> padded = coeffs_;
    padded.resize(static_cast<std::size_t>(n) + 1, cplx(0.0));
    std::vector<cplx> rev(padded.size());
    for (std::size_t m = 0; m < padded.size(); ++m)
        rev[m] = std::conj(padded[padded.size() - 1 - m]);
    return Polynomial(exact_tag{}, std::move(rev), std::nullopt);
}

Polynomial Polynomial::scaled(cplx factor) const {
    std::vector<cplx> c = coeffs_;
    for (cplx& v : c) v *= factor;
    if (factor == cplx(0.0)) return Polynomial(std::move(c));
    return Polynomial(exact_tag{}, std::move(c), roots_);
}

double Polynomial::max_coeff_modulus() const {
    double m = 0.0;
    for (const cplx& v : coeffs_) m = std::max(m, std::abs(v));
    return m;
}

} // namespace ratineq
