#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <optional>
#include <vector>

#include "coeffs.hpp"
#include "errors.hpp"
#include "model.hpp"
#include "quadrature.hpp"
#include "specfun.hpp"

namespace gegen {

enum class PredictionKind { pole_g, endpoint_algebraic, endpoint_log, none_interior };

/// gamma_n = a_n^L / a_n^C for n = 0..N. Masked entries hold NaN.
struct RatioReport {
    std::vector<cplx> legendre;
    std::vector<cplx> chebyshev;
    std::vector<cplx> gamma_values;
    std::vector<cplx> prediction;  // NaN where no prediction exists
    std::vector<double> residuals;  // |gamma/prediction - 1|
    PredictionKind prediction_kind;
    double alpha = 0.0;  // for endpoint_algebraic

    static bool masked(const cplx& v) { return std::isnan(v.real()); }
};

inline const cplx nan_cplx{std::numeric_limits<double>::quiet_NaN(),
                           std::numeric_limits<double>::quiet_NaN()};

/// g(z) = sqrt((z^2-1)/(u^2-1)) = sqrt(1 - u^{-2}) / 2, positive for z > 1.
inline cplx g_factor(cplx z)
{
    if (z.imag() == 0.0 && std::abs(z.real()) <= 1.0) {
        throw DomainError("g_factor: z must lie off [-1,1] (g -> 0 at z = +-1)");
    }
    const cplx u = joukowski_root(z);
    return 0.5 * std::sqrt(1.0 - 1.0 / (u * u));
}

inline PredictionKind prediction_kind(const ModelFunction& f)
{
    using K = ModelFunction::Kind;
    switch (f.kind()) {
    case K::pole:
    case K::algebraic_outside:
    case K::log_outside:
        return PredictionKind::pole_g;
    case K::algebraic_endpoint:
        return PredictionKind::endpoint_algebraic;
    case K::log_endpoint:
        return PredictionKind::endpoint_log;
    case K::algebraic_interior:
    case K::log_interior:
        return PredictionKind::none_interior;
    case K::custom:
        break;
    }
    throw UnsupportedError("ratio_prediction: no prediction for " + f.name());
}

/// Leading-order gamma_n; empty for interior singularities.
inline std::optional<cplx> ratio_prediction(const ModelFunction& f, int n)
{
    if (n < 1) {
        throw DomainError("ratio_prediction: n must be >= 1");
    }
    switch (prediction_kind(f)) {
    case PredictionKind::pole_g:
        return g_factor(*f.singularity()) * std::sqrt(n * std::numbers::pi);
    case PredictionKind::endpoint_algebraic: {
        const double a = std::get<model::AlgebraicEndpoint>(f.variant()).alpha;
        return cplx(std::sqrt(std::numbers::pi) * std::exp(std::lgamma(a + 1.0) - std::lgamma(a + 0.5)));
    }
    case PredictionKind::endpoint_log:
        return cplx(1.0);
    case PredictionKind::none_interior:
        break;
    }
    return std::nullopt;
}

/// Leading-order a_n^C for (b - x)^alpha.
inline double chebT_asymptotic_algebraic(int n, double alpha, double b)
{
    if (n < 1) {
        throw DomainError("chebT_asymptotic_algebraic: n must be >= 1");
    }
    if (!(b > 1.0)) {
        throw DomainError("chebT_asymptotic_algebraic: need b > 1");
    }
    if (detail::is_integer(alpha)) {
        throw DomainError("chebT_asymptotic_algebraic: alpha must not be an integer");
    }
    const double s = std::sqrt(b * b - 1.0);
    const SignedLog g = log_abs_gamma(alpha + 1.0);
    const double xi = -2.0 * detail::sin_pi(alpha) * g.sign *
                      std::exp((alpha + 1.0) * std::log(s) + g.log_abs - std::log(std::numbers::pi) -
                               (alpha + 1.0) * std::log(static_cast<double>(n)));
    return xi / s * std::exp(-n * std::log(b + s));
}

namespace detail {

/// Legendre and Chebyshev-T coefficients 0..N of a function with an interior
/// singularity at x0 = cos(t0): theta-quadrature split at t0, graded towards
/// t0 by t = t0 -+ w s^4, composite 32-point panels.
inline void interior_coeffs(const ModelFunction& f, double x0, int N, std::vector<cplx>& leg,
                            std::vector<cplx>& cheb)
{
    const double t0 = std::acos(x0);
    const double q = 4.0;
    const int panels = 16 + N / 2;
    const GaussLegendreRule& gl = gauss_legendre_32();
    leg.assign(N + 1, 0.0);
    cheb.assign(N + 1, 0.0);
    std::vector<double> P(N + 1);
    const auto accumulate = [&](double t, double dt, double weight) {
        // cos t - cos t0 without cancellation; nodes that still round onto x0
        // are moved one ulp to their own side.
        double x = x0 - 2.0 * std::sin(t0 + 0.5 * dt) * std::sin(0.5 * dt);
        if (x == x0) {
            x = std::nextafter(x0, dt > 0.0 ? -2.0 : 2.0);
        }
        const double fx = f(x) * weight;
        P[0] = 1.0;
        if (N >= 1) {
            P[1] = x;
        }
        for (int k = 1; k < N; ++k) {
            P[k + 1] = ((2.0 * k + 1.0) * x * P[k] - k * P[k - 1]) / (k + 1.0);
        }
        const double st = std::sin(t);
        for (int n = 0; n <= N; ++n) {
            leg[n] += fx * P[n] * st;
            cheb[n] += fx * std::cos(n * t);
        }
    };
    for (int side = 0; side < 2; ++side) {
        const double width = side == 0 ? t0 : std::numbers::pi - t0;
        const double dir = side == 0 ? -1.0 : 1.0;
        for (int p = 0; p < panels; ++p) {
            const double a = static_cast<double>(p) / panels;
            const double h = 0.5 / panels;
            for (std::size_t i = 0; i < gl.size(); ++i) {
                const double s = a + h * (1.0 + gl.nodes[i]);
                const double dt = dir * width * std::pow(s, q);
                const double jac = width * q * std::pow(s, q - 1.0);
                accumulate(t0 + dt, dt, gl.weights[i] * h * jac);
            }
        }
    }
    for (int n = 0; n <= N; ++n) {
        leg[n] *= n + 0.5;
        cheb[n] *= 2.0 / std::numbers::pi;
    }
}


/// Largest magnitude among the unmasked neighbours n-1, n+1.
inline double neighbour_scale(const std::vector<cplx>& c, int n)
{
    double m = 0.0;
    for (int k : {n - 1, n + 1}) {
        if (k >= 0 && k < static_cast<int>(c.size()) && !RatioReport::masked(c[k])) {
            m = std::max(m, std::abs(c[k]));
        }
    }
    return m;
}

}  // namespace detail

/// gamma_n for n = 0..N with the matching prediction attached. An entry is
/// masked when |a_n^C| is below 1e-13 of its neighbours (parity zeros).
inline RatioReport gamma_series(const ModelFunction& f, int N)
{
    if (N < 1) {
        throw DomainError("gamma_series: N must be >= 1");
    }
    RatioReport r;
    const bool custom = f.kind() == ModelFunction::Kind::custom;
    r.prediction_kind = custom ? PredictionKind::none_interior : prediction_kind(f);
    const GegenbauerParam half(0.5);
    const GegenbauerParam tee = GegenbauerParam::chebyshev_t_limit();
    const int count = N + 1;

    using K = ModelFunction::Kind;
    switch (f.kind()) {
    case K::pole:
    case K::algebraic_endpoint:
        r.legendre = model_coeffs(f, count, half).values;
        r.chebyshev = model_coeffs(f, count, tee).values;
        break;
    case K::log_endpoint:
        r.legendre = model_coeffs(f, count, half, 1).values;
        r.chebyshev = model_coeffs(f, count, tee, 1).values;
        r.legendre[0] = nan_cplx;
        r.chebyshev[0] = nan_cplx;
        break;
    case K::algebraic_interior:
    case K::log_interior:
        detail::interior_coeffs(f, f.singularity()->real(), N, r.legendre, r.chebyshev);
        break;
    default: {
        const int tail = std::max(20, count);
        const int maxdeg = count + 2 * tail;
        int nodes = 1024;
        while (nodes < 24 * maxdeg) {
            nodes *= 2;
        }
        const double rho = f.rho_max() > 1.0 ? f.rho_max() * std::exp(-2.0 / maxdeg) : 1.0;
        r.legendre = gegen_coeffs_numeric(f, count, half, nodes, tail, rho).values;
        r.chebyshev = chebT_coeffs(f, count, nodes, rho).values;
        break;
    }
    }

    if (const auto* e = std::get_if<model::AlgebraicEndpoint>(&f.variant())) {
        r.alpha = e->alpha;
    }
    r.gamma_values.assign(count, nan_cplx);
    r.prediction.assign(count, nan_cplx);
    r.residuals.assign(count, std::numeric_limits<double>::quiet_NaN());
    for (int n = 0; n < count; ++n) {
        const cplx c = r.chebyshev[n];
        if (RatioReport::masked(c) || std::abs(c) < 1e-13 * detail::neighbour_scale(r.chebyshev, n)) {
            continue;
        }
        r.gamma_values[n] = r.legendre[n] / c;
        if (n >= 1 && !custom) {
            if (const auto p = ratio_prediction(f, n)) {
                r.prediction[n] = *p;
                r.residuals[n] = std::abs(r.gamma_values[n] / *p - 1.0);
            }
        }
    }
    return r;
}

}  // namespace gegen
