#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>
#include <variant>
#include <vector>

#include "errors.hpp"
#include "model.hpp"
#include "polyval.hpp"
#include "quadrature.hpp"
#include "specfun.hpp"

namespace gegen {

namespace provenance {
struct ClosedForm {};
struct Quadrature {
    int nodes;
};
struct Contour {
    double rho;
    int nodes;
};
}  // namespace provenance

using Provenance = std::variant<provenance::ClosedForm, provenance::Quadrature, provenance::Contour>;

/// Expansion coefficients a_0..a_{N} of one function in one family.
struct CoefficientTable {
    PolynomialFamily family;
    std::vector<cplx> values;
    Provenance provenance;
    double tail_residual = 0.0;  // magnitude of the last included connection term

    std::size_t size() const { return values.size(); }
    const cplx& operator[](std::size_t n) const { return values[n]; }
};

namespace detail {

inline void check_count(int count, int nodes, const char* who)
{
    if (count <= 0) {
        throw DomainError(std::string(who) + ": count must be positive");
    }
    if (nodes < 4 * count) {
        throw DomainError(std::string(who) + ": need nodes >= 4*count (" +
                          std::to_string(4 * count) + ")");
    }
}

inline void check_contour_rho(const ModelFunction& f, double rho)
{
    if (!(rho > 1.0)) {
        throw BranchError("contour radius must exceed 1 (rho = 1 is the cut [-1,1])");
    }
    if (!(rho < f.rho_max())) {
        throw AnalyticityError("contour radius " + fmt_num(rho) +
                               " is not inside rho_max = " + fmt_num(f.rho_max()));
    }
}

/// e^{-i 2 pi j k / N} with the phase reduced exactly in integers.
inline cplx unit_root(long long j, long long k, long long N)
{
    const long long r = ((j * k) % N + N) % N;
    return std::polar(1.0, -2.0 * std::numbers::pi * static_cast<double>(r) / static_cast<double>(N));
}

}  // namespace detail

/// Chebyshev-U coefficients b_j = (2/pi) int_0^pi f(cos t) sin((j+1)t) sin t dt.
/// contour_rho = 1 uses the trapezoid rule on [0,pi]; contour_rho > 1 uses the
/// equivalent trapezoid sum on |u| = rho, which gives relative accuracy for tiny b_j.
inline CoefficientTable chebU_coeffs(const ModelFunction& f, int count, int nodes,
                                     double contour_rho = 1.0)
{
    detail::check_count(count, nodes, "chebU_coeffs");
    std::vector<cplx> b(static_cast<std::size_t>(count));
    if (contour_rho == 1.0) {
        const long long N = nodes;
        std::vector<cplx> fs(static_cast<std::size_t>(nodes));
        std::vector<double> sn(static_cast<std::size_t>(nodes));
        for (long long k = 1; k < N; ++k) {
            const double th = std::numbers::pi * static_cast<double>(k) / static_cast<double>(N);
            fs[k] = f.eval_on_interval(std::cos(th));
            sn[k] = std::sin(th);
        }
        for (int j = 0; j < count; ++j) {
            cplx s = 0.0;
            for (long long k = 1; k < N; ++k) {
                const long long idx = ((j + 1LL) * k) % (2 * N);
                s += fs[k] * std::sin(std::numbers::pi * static_cast<double>(idx) /
                                      static_cast<double>(N)) *
                     sn[k];
            }
            b[j] = 2.0 * s / static_cast<double>(N);
        }
        return {PolynomialFamily::chebyshev_u(), std::move(b), provenance::Quadrature{nodes}, 0.0};
    }
    detail::check_contour_rho(f, contour_rho);
    const long long N = nodes;
    std::vector<cplx> w(static_cast<std::size_t>(nodes));
    for (long long k = 0; k < N; ++k) {
        const double th = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(N);
        const cplx u = std::polar(contour_rho, th);
        w[k] = f.eval_complex(0.5 * (u + 1.0 / u)) * (1.0 - 1.0 / (u * u));
    }
    for (int j = 0; j < count; ++j) {
        cplx s = 0.0;
        for (long long k = 0; k < N; ++k) {
            s += w[k] * detail::unit_root(j, k, N);
        }
        b[j] = s * std::pow(contour_rho, -j) / static_cast<double>(N);
    }
    return {PolynomialFamily::chebyshev_u(), std::move(b),
            provenance::Contour{contour_rho, nodes}, 0.0};
}

/// Chebyshev-T coefficients a_n^C = (2/pi) int_0^pi f(cos t) cos(nt) dt.
/// Real interval: midpoint rule; contour_rho > 1: trapezoid on |u| = rho.
inline CoefficientTable chebT_coeffs(const ModelFunction& f, int count, int nodes,
                                     double contour_rho = 1.0)
{
    detail::check_count(count, nodes, "chebT_coeffs");
    std::vector<cplx> a(static_cast<std::size_t>(count));
    const long long N = nodes;
    if (contour_rho == 1.0) {
        std::vector<cplx> fs(static_cast<std::size_t>(nodes));
        for (long long k = 0; k < N; ++k) {
            fs[k] = f.eval_on_interval(std::cos(std::numbers::pi * (static_cast<double>(k) + 0.5) /
                                                static_cast<double>(N)));
        }
        for (int n = 0; n < count; ++n) {
            cplx s = 0.0;
            for (long long k = 0; k < N; ++k) {
                const long long idx = (static_cast<long long>(n) * (2 * k + 1)) % (4 * N);
                s += fs[k] * std::cos(std::numbers::pi * static_cast<double>(idx) /
                                      (2.0 * static_cast<double>(N)));
            }
            a[n] = 2.0 * s / static_cast<double>(N);
        }
        return {PolynomialFamily::chebyshev_t(), std::move(a), provenance::Quadrature{nodes}, 0.0};
    }
    detail::check_contour_rho(f, contour_rho);
    std::vector<cplx> fs(static_cast<std::size_t>(nodes));
    for (long long k = 0; k < N; ++k) {
        fs[k] = f.eval_complex(ellipse_point(
            contour_rho, 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(N)));
    }
    for (int n = 0; n < count; ++n) {
        cplx s = 0.0;
        for (long long k = 0; k < N; ++k) {
            s += fs[k] * detail::unit_root(n, k, N);
        }
        a[n] = 2.0 * s * std::pow(contour_rho, -n) / static_cast<double>(N);
    }
    return {PolynomialFamily::chebyshev_t(), std::move(a), provenance::Contour{contour_rho, nodes},
            0.0};
}

/// sigma_{n+2m,n} = c_{n,lambda} (n+1)_m (1-lambda)_m / ((n+lambda+1)_m m!).
inline double connection_sigma(int n, int m, const GegenbauerParam& param)
{
    if (n < 0 || m < 0) {
        throw DomainError("connection_sigma: n and m must be non-negative");
    }
    if (param.is_chebyshev_t_limit()) {
        throw DomainError("connection_sigma: lambda = 0 has no connection coefficients");
    }
    const double lambda = param.lambda();
    SignedLog acc = log_c_norm(n, param);
    for (int k = 0; k < m; ++k) {
        const double kk = static_cast<double>(k);
        const double num = (n + 1.0 + kk) * (1.0 - lambda + kk);
        if (num == 0.0) {
            return 0.0;
        }
        const double den = (n + lambda + 1.0 + kk) * (kk + 1.0);
        acc.log_abs += std::log(std::abs(num)) - std::log(std::abs(den));
        if ((num < 0.0) != (den < 0.0)) {
            acc.sign = -acc.sign;
        }
    }
    return acc.value();
}

/// a_n^lambda = sum_m b_{n+2m} sigma_{n+2m,n}, from Chebyshev-U coefficients.
/// tail <= 0 selects max(20, count). The T family goes to chebT_coeffs.
inline CoefficientTable gegen_coeffs_numeric(const ModelFunction& f, int count,
                                             const GegenbauerParam& param, int nodes,
                                             int tail = 0, double contour_rho = 1.0)
{
    if (param.is_chebyshev_t_limit()) {
        return chebT_coeffs(f, count, nodes, contour_rho);
    }
    if (count <= 0) {
        throw DomainError("gegen_coeffs_numeric: count must be positive");
    }
    if (tail <= 0) {
        tail = std::max(20, count);
    }
    const int nb = count + 2 * tail;
    const CoefficientTable bt = chebU_coeffs(f, nb, std::max(nodes, 4 * nb), contour_rho);
    const double lambda = param.lambda();
    std::vector<cplx> a(static_cast<std::size_t>(count));
    double residual = 0.0;
    for (int n = 0; n < count; ++n) {
        // sigma by its term ratio, accumulated in pairs to tame the sign flips
        // of (1-lambda)_m when lambda > 1.
        double sigma = connection_sigma(n, 0, param);
        cplx sum = 0.0;
        cplx last = 0.0;
        for (int m = 0; m <= tail && n + 2 * m < nb; m += 2) {
            cplx pair = bt.values[n + 2 * m] * sigma;
            const double mm = static_cast<double>(m);
            sigma *= (n + 1.0 + mm) * (1.0 - lambda + mm) / ((n + lambda + 1.0 + mm) * (mm + 1.0));
            last = bt.values[n + 2 * m] * sigma;
            if (m + 1 <= tail && n + 2 * m + 2 < nb) {
                last = bt.values[n + 2 * m + 2] * sigma;
                pair += last;
            }
            sigma *= (n + 2.0 + mm) * (2.0 - lambda + mm) / ((n + lambda + 2.0 + mm) * (mm + 2.0));
            sum += pair;
        }
        a[n] = sum;
        residual = std::max(residual, std::abs(last));
    }
    return {PolynomialFamily::from_param(param), std::move(a), bt.provenance, residual};
}

/// Contour-integral representation of a_n^lambda, trapezoid rule on E_rho.
inline cplx coeff_contour_oracle(const ModelFunction& f, int n, const GegenbauerParam& param,
                                 double rho, int nodes)
{
    if (n < 0) {
        throw DomainError("coeff_contour_oracle: n must be non-negative");
    }
    if (nodes < 4) {
        throw DomainError("coeff_contour_oracle: need at least 4 nodes");
    }
    detail::check_contour_rho(f, rho);
    const double c = log_c_norm(n, param).value();
    cplx s = 0.0;
    for (int k = 0; k < nodes; ++k) {
        const double th = 2.0 * std::numbers::pi * k / nodes;
        const cplx z = ellipse_point(rho, th);
        const cplx u = joukowski_root(z);
        const cplx x = 1.0 / (u * u);
        // dz = (1 - u^{-2}) u/2 * i dtheta; the i cancels the 1/(i pi).
        s += f.eval_complex(z) * std::pow(u, -n) * (1.0 - x) * hyp2f1_kernel(n, param, x);
    }
    return c * s / static_cast<double>(nodes);
}

/// Closed-form coefficients for poles and endpoint singularities.
inline cplx model_coeff(const ModelFunction& f, int n, const GegenbauerParam& param)
{
    if (n < 0) {
        throw DomainError("model_coeff: n must be non-negative");
    }
    const bool cheb = param.is_chebyshev_t_limit();
    const double lambda = cheb ? 0.0 : param.lambda();
    const double nn = static_cast<double>(n);
    const double lpi = std::log(std::numbers::pi);
    const double l2 = std::log(2.0);
    const auto& v = f.variant();

    if (const auto* p = std::get_if<model::Pole>(&v)) {
        const cplx u = joukowski_root(p->z0);
        const cplx x = 1.0 / (u * u);
        return -2.0 * log_c_norm(n, param).value() * std::pow(u, -(n + 1)) *
               hyp2f1_kernel(n, param, x);
    }
    if (const auto* e = std::get_if<model::AlgebraicEndpoint>(&v)) {
        const double alpha = e->alpha;
        const int mu = (e->sign == -1 && n % 2 == 1) ? -1 : 1;
        const SignedLog rg = log_abs_rgamma(alpha - nn + 1.0);
        if (rg.sign == 0) {
            return 0.0;
        }
        if (cheb) {
            const SignedLog g2 = log_abs_gamma(alpha + nn + 1.0);
            const double la = (alpha + 1.0) * l2 + std::lgamma(alpha + 0.5) +
                              std::lgamma(alpha + 1.0) - 0.5 * lpi + rg.log_abs - g2.log_abs;
            return SignedLog{la, mu * rg.sign * g2.sign}.value();
        }
        if (!(lambda + alpha > -0.5)) {
            throw DomainError("model_coeff: need lambda + alpha > -1/2");
        }
        const SignedLog gl = log_abs_gamma(lambda);
        const SignedLog g2l = log_abs_gamma(2.0 * lambda);
        const SignedLog gd = log_abs_gamma(alpha + 2.0 * lambda + nn + 1.0);
        const double shift = nn + lambda;
        const double la = (4.0 * lambda + alpha - 1.0) * l2 + 2.0 * gl.log_abs +
                          std::lgamma(alpha + lambda + 0.5) + std::lgamma(lambda + 0.5) +
                          std::lgamma(alpha + 1.0) + std::log(std::abs(shift)) - lpi -
                          g2l.log_abs + rg.log_abs - gd.log_abs;
        const int sg = mu * (shift > 0 ? 1 : -1) * g2l.sign * rg.sign * gd.sign;
        return SignedLog{la, sg}.value();
    }
    if (const auto* e = std::get_if<model::LogEndpoint>(&v)) {
        if (n == 0) {
            throw UnsupportedError("model_coeff: the log-endpoint closed form starts at n = 1");
        }
        const int mu = (e->sign == -1 || n % 2 == 0) ? -1 : 1;
        if (cheb) {
            return mu * 2.0 / nn;
        }
        const SignedLog gl = log_abs_gamma(lambda);
        const SignedLog gn = log_abs_gamma(nn + lambda);
        const SignedLog gd = log_abs_gamma(nn + 1.0 + 2.0 * lambda);
        const double la = 2.0 * lambda * l2 + gl.log_abs + std::lgamma(lambda + 0.5) - 0.5 * lpi +
                          std::lgamma(nn + 1.0) + std::lgamma(nn + lambda + 1.0) - std::log(nn) -
                          gn.log_abs - gd.log_abs;
        return SignedLog{la, mu * gl.sign * gn.sign * gd.sign}.value();
    }
    throw UnsupportedError("model_coeff: no closed form for " + f.name());
}

/// Table of model_coeff over n = 0..count-1.
inline CoefficientTable model_coeffs(const ModelFunction& f, int count,
                                     const GegenbauerParam& param, int first = 0)
{
    if (count <= 0) {
        throw DomainError("model_coeffs: count must be positive");
    }
    std::vector<cplx> a(static_cast<std::size_t>(count));
    for (int n = first; n < count; ++n) {
        a[n] = model_coeff(f, n, param);
    }
    return {PolynomialFamily::from_param(param), std::move(a), provenance::ClosedForm{}, 0.0};
}

struct CauchyClosed {};
struct CauchyOracle {
    int nodes = 512;
};
using CauchyMethod = std::variant<CauchyClosed, CauchyOracle>;

namespace detail {

/// (1/2) int_0^pi sin^{2 lambda}(t) C_n(cos t)/(z - cos t) dt by Gauss-Legendre.
/// Non-smooth sin^{2 lambda} endpoints are graded by t = (pi/2) s^q on each half.
inline cplx cauchy_oracle(int n, const GegenbauerParam& param, cplx z, int nodes)
{
    const double lambda = param.lambda();
    const auto integrand = [&](double t) -> cplx {
        const double x = std::cos(t);
        return std::pow(std::sin(t), 2.0 * lambda) * gegenbauer_eval(n, param, x) / (z - x);
    };
    const double two_l = 2.0 * lambda;
    if (two_l >= 0.0 && is_integer(two_l)) {
        const GaussLegendreRule rule = gauss_legendre(static_cast<std::size_t>(nodes));
        return 0.5 * rule.integrate(integrand, 0.0, std::numbers::pi);
    }
    const double q = std::max(1.0, std::ceil(6.0 / (2.0 * lambda + 1.0)));
    const GaussLegendreRule rule = gauss_legendre(static_cast<std::size_t>(std::max(nodes / 2, 8)));
    const double h = 0.5 * std::numbers::pi;
    const auto graded = [&](double s, bool right) -> cplx {
        const double t = h * std::pow(s, q);
        const double jac = h * q * std::pow(s, q - 1.0);
        return integrand(right ? std::numbers::pi - t : t) * jac;
    };
    const cplx left = rule.integrate([&](double s) { return graded(s, false); }, 0.0, 1.0);
    const cplx right = rule.integrate([&](double s) { return graded(s, true); }, 0.0, 1.0);
    return 0.5 * (left + right);
}

}  // namespace detail

/// Cauchy transform Q_n^lambda(z) = (1/2) int (1-x^2)^{lambda-1/2} C_n(x)/(z-x) dx.
inline cplx cauchy_q(int n, const GegenbauerParam& param, cplx z,
                     CauchyMethod method = CauchyClosed{})
{
    if (n < 0) {
        throw DomainError("cauchy_q: n must be non-negative");
    }
    if (z.imag() == 0.0 && std::abs(z.real()) <= 1.0) {
        throw DomainError("cauchy_q: z must lie off [-1,1]");
    }
    if (param.is_chebyshev_t_limit()) {
        throw DomainError("cauchy_q: needs a Gegenbauer index lambda != 0");
    }
    if (const auto* o = std::get_if<CauchyOracle>(&method)) {
        if (o->nodes < 8) {
            throw DomainError("cauchy_q: oracle needs at least 8 nodes");
        }
        return detail::cauchy_oracle(n, param, z, o->nodes);
    }
    const cplx u = joukowski_root(z);
    const cplx x = 1.0 / (u * u);
    return (log_c_norm(n, param) * log_h_norm(n, param)).value() * std::pow(u, -(n + 1)) *
           hyp2f1_kernel(n, param, x);
}

}  // namespace gegen
