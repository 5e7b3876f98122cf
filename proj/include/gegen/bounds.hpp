#pragma once

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "coeffs.hpp"
#include "errors.hpp"
#include "model.hpp"
#include "polyval.hpp"
#include "specfun.hpp"

namespace gegen {

/// f is analytic inside and on E_rho with |f| <= M there.
struct AnalyticityWitness {
    double rho;
    double M;

    AnalyticityWitness(double rho_, double M_) : rho(rho_), M(M_)
    {
        if (!(rho > 1.0)) {
            throw DomainError("witness: need rho > 1");
        }
        if (!(M > 0.0) || !std::isfinite(M)) {
            throw DomainError("witness: need finite M > 0");
        }
    }
};

inline constexpr int witness_grid_points = 2048;

/// max |f| over an equispaced grid on E_rho.
inline double ellipse_grid_max(const ModelFunction& f, double rho, int points = witness_grid_points)
{
    double m = 0.0;
    for (int k = 0; k < points; ++k) {
        const double th = 2.0 * std::numbers::pi * k / points;
        m = std::max(m, std::abs(f.eval_complex(ellipse_point(rho, th))));
    }
    return m;
}

/// Witness for a model function: exact M for a real pole, else 1.01 x grid max.
inline AnalyticityWitness make_witness(const ModelFunction& f, double rho)
{
    if (!(rho > 1.0)) {
        throw DomainError("make_witness: need rho > 1");
    }
    if (!(rho < f.rho_max())) {
        throw AnalyticityError("make_witness: rho = " + detail::fmt_num(rho) +
                               " must be below rho_max = " + detail::fmt_num(f.rho_max()));
    }
    const double grid = ellipse_grid_max(f, rho);
    const auto* p = std::get_if<model::Pole>(&f.variant());
    if (p != nullptr && p->z0.imag() == 0.0) {
        const double r0 = f.rho_max();
        const double M = 2.0 * rho / ((r0 - rho) * (rho - 1.0 / r0));
        if (grid > M * (1.0 + 1e-12)) {
            throw std::logic_error("make_witness: grid maximum exceeds the analytic M");
        }
        return {rho, M};
    }
    return {rho, 1.01 * grid};
}

enum class CoeffBoundKind { optimal, explicit_estimate };
enum class Comparator { zhao_legendre, zhao_gegenbauer };
enum class QBoundKind { ours, rokhlin };

struct TruncSeries {};
struct TruncLambdaOne {};
struct TruncSimple {};
struct TruncDiagonal {
    double gamma;
};
using TruncationKind = std::variant<TruncSeries, TruncLambdaOne, TruncSimple, TruncDiagonal>;

/// A bound sequence indexed from `first`, kept in log10.
struct BoundCurve {
    std::string kind;
    double param;  // lambda, gamma or delta
    double rho;
    double M;
    int first;
    std::vector<double> log10_values;

    double value(int n) const { return std::pow(10.0, log10_values.at(n - first)); }
};

namespace detail {

inline constexpr double ln10 = 2.302585092994045684;

inline double log10_kernel(int n, const GegenbauerParam& p, double x)
{
    return std::log10(hyp2f1_kernel(n, p, x));
}

/// Sign of the kernel argument used by the bounds: +1/rho^2 up to lambda = 1.
inline double kernel_arg(const GegenbauerParam& p, double rho)
{
    const double x = 1.0 / (rho * rho);
    return (!p.is_chebyshev_t_limit() && p.lambda() > 1.0) ? -x : x;
}

inline double log10_perimeter(double rho) { return std::log10(ellipse_perimeter(rho)); }

inline double jameson(double rho)
{
    return ellipse_perimeter(rho, PerimeterMode::jameson_bound);
}

}  // namespace detail

inline double log10_coeff_bound(int n, const GegenbauerParam& param, const AnalyticityWitness& w,
                                CoeffBoundKind kind)
{
    if (n < 0) {
        throw DomainError("coeff_bound: n must be non-negative");
    }
    const double rho = w.rho;
    if (kind == CoeffBoundKind::optimal) {
        const SignedLog c = log_c_norm(n, param);
        return c.log_abs / detail::ln10 + std::log10(w.M) + detail::log10_perimeter(rho) -
               std::log10(std::numbers::pi) - (n + 1.0) * std::log10(rho) +
               detail::log10_kernel(n, param, detail::kernel_arg(param, rho));
    }
    if (param.is_chebyshev_t_limit() || !(param.lambda() > 0.0)) {
        throw DomainError("coeff_bound: the explicit estimate needs lambda > 0");
    }
    if (n < 1) {
        throw DomainError("coeff_bound: the explicit estimate needs n >= 1");
    }
    const double lambda = param.lambda();
    const double nn = static_cast<double>(n);
    const double s = lambda > 1.0 ? 1.0 : -1.0;
    const double log10_Lambda = std::lgamma(lambda) / detail::ln10 + std::log10(w.M) +
                                log_upsilon(nn, 1.0, lambda) / detail::ln10 -
                                std::log10(std::numbers::pi) + std::log10(detail::jameson(rho));
    return log10_Lambda + (lambda - 1.0) * std::log10(1.0 + s / (rho * rho)) +
           (1.0 - lambda) * std::log10(nn) - (nn + 1.0) * std::log10(rho);
}

inline double coeff_bound(int n, const GegenbauerParam& param, const AnalyticityWitness& w,
                          CoeffBoundKind kind)
{
    return std::pow(10.0, log10_coeff_bound(n, param, w, kind));
}

inline double log10_comparator_bound(int n, const GegenbauerParam& param,
                                     const AnalyticityWitness& w, Comparator which)
{
    if (n < 1) {
        throw DomainError("comparator_bound: n must be >= 1");
    }
    const double rho = w.rho;
    const double nn = static_cast<double>(n);
    const double r2m1 = rho * rho - 1.0;
    if (which == Comparator::zhao_legendre) {
        return std::log10(w.M) + 0.5 * std::log10(std::numbers::pi * nn) - nn * std::log10(rho) +
               std::log10(1.0 + (nn + 2.0) / (2.0 * nn + 3.0) / r2m1) +
               (8.0 * nn - 1.0) / (12.0 * nn * (2.0 * nn - 1.0)) / detail::ln10;
    }
    if (param.is_chebyshev_t_limit() || !(param.lambda() > 0.0)) {
        throw DomainError("comparator_bound: the Gegenbauer comparator needs lambda > 0");
    }
    const double l = param.lambda();
    const double m1 = upsilon(nn, 2.0 * l, 1.5) * upsilon(2.0 * nn, 2.0, 2.0 * l);
    const double m2 = std::sqrt((nn + l) / nn) *
                      std::sqrt(upsilon(nn, 1.0, l + 0.5) * upsilon(nn, 2.0 * l, l + 0.5));
    const double logA = (4.0 * l - 2.0) * std::log(2.0) + std::lgamma(l + 0.5) +
                        2.0 * std::lgamma(l) - std::log(std::numbers::pi) -
                        std::lgamma(2.0 * l) + log_gamma_ratio(nn, l + 0.5, 2.0 * l) +
                        std::log(std::max(m1, m2));
    const double bracket =
        std::sqrt(std::numbers::pi) / std::pow(2.0, 2.0 * l - 1.0) +
        std::exp(std::lgamma(l + 0.5) - 0.5 * std::lgamma(2.0 * l + 1.0)) * 2.0 *
            std::numbers::sqrt2 / r2m1;
    return logA / detail::ln10 + std::log10(w.M) + std::log10(bracket) +
           0.5 * std::log10(nn) - nn * std::log10(rho);
}

inline double comparator_bound(int n, const GegenbauerParam& param, const AnalyticityWitness& w,
                               Comparator which)
{
    return std::pow(10.0, log10_comparator_bound(n, param, w, which));
}

/// Bounds for |Q_n^{1/2}(x)|, x > 1 + delta.
inline double q_bound(int n, double delta, QBoundKind which)
{
    if (n < 1) {
        throw DomainError("q_bound: n must be >= 1");
    }
    if (!(delta > 0.0)) {
        throw DomainError("q_bound: need delta > 0");
    }
    const double nn = static_cast<double>(n);
    const double s = std::sqrt((1.0 + delta) * (1.0 + delta) - 1.0);
    if (which == QBoundKind::ours) {
        const double dh = 1.0 + delta + s;
        return std::exp(0.5 * std::log(std::numbers::pi) + log_upsilon(nn, 1.0, 1.5) -
                        nn * std::log(dh) - 0.5 * std::log(nn * (dh * dh - 1.0)));
    }
    return (std::log(2.0 * (1.0 + s) / s) + 1.0) * std::exp(-(nn + 1.0) * std::log1p(s));
}

/// max |Q_n^lambda| on E_rho, attained on the real axis (lambda <= 1) or the
/// imaginary axis (lambda > 1).
inline double q_max_on_ellipse(int n, const GegenbauerParam& param, double rho)
{
    if (!(rho > 1.0)) {
        throw DomainError("q_max_on_ellipse: need rho > 1");
    }
    if (param.is_chebyshev_t_limit()) {
        throw DomainError("q_max_on_ellipse: needs a Gegenbauer index lambda != 0");
    }
    const SignedLog ch = log_c_norm(n, param) * log_h_norm(n, param);
    return std::exp(ch.log_abs - (n + 1.0) * std::log(rho)) *
           hyp2f1_kernel(n, param, detail::kernel_arg(param, rho));
}

namespace detail {

inline double log10_simple(int N, double lambda, const AnalyticityWitness& w)
{
    const double rho = w.rho;
    const double NN = static_cast<double>(N);
    const double thr = (NN + 2.0 * lambda) * (NN + lambda + 1.0) / ((NN + lambda) * (NN + 1.0));
    if (!(rho > thr)) {
        throw PreconditionError("truncation_bound: need rho > " + fmt_num(thr) + ", got rho = " +
                                fmt_num(rho));
    }
    const double denom = rho * (NN + lambda) * (NN + 1.0) - (NN + 2.0 * lambda) * (NN + lambda + 1.0);
    const double log10_C = std::log10(w.M) + log10_perimeter(rho) - std::log10(std::numbers::pi) +
                           std::log10((NN + lambda) * (NN + 1.0) / denom);
    const double log_g = std::lgamma(lambda) + std::lgamma(NN + 2.0 * lambda) -
                         std::lgamma(2.0 * lambda) - std::lgamma(NN + lambda);
    return log_g / ln10 + (lambda - 1.0) * std::log10(1.0 + 1.0 / (rho * rho)) + log10_C -
           NN * std::log10(rho);
}

inline double log10_series(int N, const GegenbauerParam& param, const AnalyticityWitness& w)
{
    const double lambda = param.lambda();
    const double rho = w.rho;
    const double x = kernel_arg(param, rho);
    const auto logH = [&](int n) {
        const double nn = static_cast<double>(n);
        return std::lgamma(nn + 2.0 * lambda) - std::lgamma(nn + lambda) -
               (nn + 1.0) * std::log(rho) + std::log(hyp2f1_kernel(n, param, x));
    };
    const double ref = logH(N);
    double sum = 0.0;  // in units of H(N)
    for (int n = N; n < N + 1000000; ++n) {
        const double term = std::exp(logH(n) - ref);
        sum += term;
        const double nn = static_cast<double>(n);
        const double r = (nn + 2.0 * lambda) * (nn + lambda + 1.0) / (rho * (nn + lambda) * (nn + 1.0));
        if (r < 1.0) {
            const double tail = term * r / (1.0 - r);
            if (tail < 1e-16 * sum) {
                sum += tail;
                const double log_pref = std::log(w.M) + std::log(ellipse_perimeter(rho)) +
                                        std::lgamma(lambda) - std::log(std::numbers::pi) -
                                        std::lgamma(2.0 * lambda);
                return (log_pref + ref + std::log(sum)) / ln10;
            }
        }
    }
    throw ConvergenceError("truncation_bound: series tail did not settle");
}

}  // namespace detail

/// log10 of a bound on max |f - f_N| over [-1,1], f_N the degree N-1 truncation.
inline double log10_truncation_bound(int N, const GegenbauerParam& param,
                                     const AnalyticityWitness& w, TruncationKind kind)
{
    if (N < 1) {
        throw DomainError("truncation_bound: N must be >= 1");
    }
    const double rho = w.rho;
    if (const auto* d = std::get_if<TruncDiagonal>(&kind)) {
        if (!(d->gamma > 0.0)) {
            throw DomainError("truncation_bound: need gamma > 0");
        }
        const double lambda = d->gamma * N;
        if (!(lambda >= 1.0)) {
            throw PreconditionError("truncation_bound: diagonal case needs gamma*N >= 1, got " +
                                    detail::fmt_num(lambda));
        }
        return detail::log10_simple(N, lambda, w);
    }
    if (param.is_chebyshev_t_limit() || !(param.lambda() > 0.0)) {
        throw DomainError("truncation_bound: needs lambda > 0");
    }
    const double lambda = param.lambda();
    if (std::holds_alternative<TruncLambdaOne>(kind)) {
        if (lambda != 1.0) {
            throw PreconditionError("truncation_bound: the closed form needs lambda = 1");
        }
        const double NN = static_cast<double>(N);
        return std::log10(w.M) + detail::log10_perimeter(rho) - std::log10(std::numbers::pi) -
               NN * std::log10(rho) +
               std::log10((NN * (rho - 1.0) + rho) / ((rho - 1.0) * (rho - 1.0)));
    }
    if (std::holds_alternative<TruncSimple>(kind)) {
        if (!(lambda >= 1.0)) {
            throw PreconditionError("truncation_bound: the simple bound needs lambda >= 1");
        }
        return detail::log10_simple(N, lambda, w);
    }
    return detail::log10_series(N, param, w);
}

inline double truncation_bound(int N, const GegenbauerParam& param, const AnalyticityWitness& w,
                               TruncationKind kind)
{
    return std::pow(10.0, log10_truncation_bound(N, param, w, kind));
}

/// max over `points` equispaced x in [-1,1] of |f(x) - sum_{n<N} a_n C_n(x)|,
/// with closed-form coefficients.
inline double measured_truncation_error(const ModelFunction& f, int N,
                                        const GegenbauerParam& param, int points = 1000)
{
    if (N < 1 || points < 2) {
        throw DomainError("measured_truncation_error: need N >= 1 and points >= 2");
    }
    std::vector<double> a(static_cast<std::size_t>(N));
    for (int n = 0; n < N; ++n) {
        a[n] = model_coeff(f, n, param).real();
    }
    const PolynomialFamily fam = PolynomialFamily::from_param(param);
    double worst = 0.0;
    for (int i = 0; i < points; ++i) {
        const double x = -1.0 + 2.0 * i / (points - 1.0);
        double s = 0.0;
        for (int n = 0; n < N; ++n) {
            s += a[n] * family_eval(fam, n, x);
        }
        worst = std::max(worst, std::abs(f(x) - s));
    }
    return worst;
}

}  // namespace gegen
