#pragma once

#include <stdexcept>
#include <string>

namespace ratineq {

/// A statement hypothesis does not hold (pole inside the closed unit disk,
/// k < 1, |beta| > 1, zeta < 1, ...). Distinct from plain bad arguments so
/// callers can map it to a configuration error.
class hypothesis_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Evaluation requested too close to a pole. Carries the offending pole index.
class near_pole_error : public std::domain_error {
public:
    near_pole_error(const std::string& what, int pole_index)
        : std::domain_error(what), pole_index_(pole_index) {}

    int pole_index() const noexcept { return pole_index_; }

private:
    int pole_index_;
};

/// Evaluation point falls inside the exclusion radius of a zero of r.
/// Suite runners catch this and record the point as skipped, not failed.
class skip_point : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace ratineq
