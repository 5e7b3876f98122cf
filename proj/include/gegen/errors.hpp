#pragma once

#include <cstdio>
#include <stdexcept>
#include <string>

namespace gegen {

/// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// A requested method is not available for the given parameters.
class UnsupportedError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A contour or witness reaches past the region where f is analytic.
class AnalyticityError : public DomainError {
public:
    using DomainError::DomainError;
};

/// A point on the cut [-1,1] where the Joukowski root is not unique.
class BranchError : public DomainError {
public:
    using DomainError::DomainError;
};

/// A theorem's hypothesis (typically a threshold on rho) does not hold.
class PreconditionError : public DomainError {
public:
    using DomainError::DomainError;
};

/// An iteration exceeded its hard cap; indicates a bug, not slow convergence.
class ConvergenceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

namespace detail {

inline std::string fmt_num(double v)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.10g", v);
    return buf;
}

}  // namespace detail

}  // namespace gegen
