#pragma once

#include <cmath>
#include <string>

#include "errors.hpp"
#include "specfun.hpp"

namespace gegen {

/// Which orthogonal family an expansion or evaluation refers to.
class PolynomialFamily {
public:
    enum class Kind { gegenbauer, legendre, chebyshev_t, chebyshev_u };

    static PolynomialFamily gegenbauer(GegenbauerParam p) { return {Kind::gegenbauer, p}; }
    static PolynomialFamily legendre() { return {Kind::legendre, GegenbauerParam(0.5)}; }
    static PolynomialFamily chebyshev_u() { return {Kind::chebyshev_u, GegenbauerParam(1.0)}; }
    static PolynomialFamily chebyshev_t()
    {
        return {Kind::chebyshev_t, GegenbauerParam::chebyshev_t_limit()};
    }

    /// The family a Gegenbauer parameter stands for (the T marker maps to T).
    static PolynomialFamily from_param(GegenbauerParam p)
    {
        return p.is_chebyshev_t_limit() ? chebyshev_t() : gegenbauer(p);
    }

    Kind kind() const { return kind_; }
    const GegenbauerParam& param() const { return param_; }

    std::string name() const
    {
        switch (kind_) {
        case Kind::gegenbauer:
            return "gegenbauer(" + detail::fmt_num(param_.lambda()) + ")";
        case Kind::legendre:
            return "legendre";
        case Kind::chebyshev_t:
            return "chebyshev_t";
        case Kind::chebyshev_u:
            return "chebyshev_u";
        }
        return "?";
    }

private:
    PolynomialFamily(Kind k, GegenbauerParam p) : kind_(k), param_(p) {}
    Kind kind_;
    GegenbauerParam param_;
};

/// C_n^{(lambda)}(x) by the forward three-term recurrence.
inline double gegenbauer_eval(int n, const GegenbauerParam& param, double x)
{
    if (n < 0) {
        throw DomainError("gegenbauer_eval: n must be non-negative");
    }
    if (param.is_chebyshev_t_limit()) {
        throw DomainError("gegenbauer_eval: lambda = 0 is not a Gegenbauer index");
    }
    const double lambda = param.lambda();
    if (n == 0) {
        return 1.0;
    }
    double prev = 1.0;
    double cur = 2.0 * lambda * x;
    for (int k = 1; k < n; ++k) {
        const double kk = static_cast<double>(k);
        const double next = (2.0 * x * (kk + lambda) * cur - (kk + 2.0 * lambda - 1.0) * prev) /
                            (kk + 1.0);
        prev = cur;
        cur = next;
    }
    return cur;
}

/// C_n^{(lambda)}(1) = Gamma(n+2lambda) / (n! Gamma(2lambda)).
inline double gegenbauer_at_one(int n, const GegenbauerParam& param)
{
    if (n < 0) {
        throw DomainError("gegenbauer_at_one: n must be non-negative");
    }
    if (param.is_chebyshev_t_limit()) {
        throw DomainError("gegenbauer_at_one: lambda = 0 is not a Gegenbauer index");
    }
    if (n == 0) {
        return 1.0;
    }
    const double two_lambda = 2.0 * param.lambda();
    const SignedLog num = log_abs_gamma(n + two_lambda);
    const SignedLog den = log_abs_gamma(two_lambda);
    return SignedLog{num.log_abs - den.log_abs - std::lgamma(n + 1.0), num.sign * den.sign}
        .value();
}

inline double legendre_eval(int n, double x)
{
    if (n == 0) {
        return 1.0;
    }
    double prev = 1.0;
    double cur = x;
    for (int k = 1; k < n; ++k) {
        const double kk = static_cast<double>(k);
        const double next = ((2.0 * kk + 1.0) * x * cur - kk * prev) / (kk + 1.0);
        prev = cur;
        cur = next;
    }
    return cur;
}

inline double chebyshev_t_eval(int n, double x)
{
    if (n == 0) {
        return 1.0;
    }
    double prev = 1.0;
    double cur = x;
    for (int k = 1; k < n; ++k) {
        const double next = 2.0 * x * cur - prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

inline double chebyshev_u_eval(int n, double x)
{
    if (n == 0) {
        return 1.0;
    }
    double prev = 1.0;
    double cur = 2.0 * x;
    for (int k = 1; k < n; ++k) {
        const double next = 2.0 * x * cur - prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

/// Dispatches to the family's own recurrence.
inline double family_eval(const PolynomialFamily& fam, int n, double x)
{
    if (n < 0) {
        throw DomainError("family_eval: n must be non-negative");
    }
    switch (fam.kind()) {
    case PolynomialFamily::Kind::gegenbauer:
        return gegenbauer_eval(n, fam.param(), x);
    case PolynomialFamily::Kind::legendre:
        return legendre_eval(n, x);
    case PolynomialFamily::Kind::chebyshev_t:
        return chebyshev_t_eval(n, x);
    case PolynomialFamily::Kind::chebyshev_u:
        return chebyshev_u_eval(n, x);
    }
    throw DomainError("family_eval: unknown family");
}

}  // namespace gegen
