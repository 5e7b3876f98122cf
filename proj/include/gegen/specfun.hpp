#pragma once

// Scalar special-function kernels: log-gamma ratios, the Gauss hypergeometric
// family 2F1(n+1, 1-lambda; n+lambda+1; x), normalisation constants of the
// Gegenbauer polynomials and the perimeter of a Bernstein ellipse.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <limits>
#include <numbers>
#include <type_traits>
#include <variant>

#include "errors.hpp"
#include "quadrature.hpp"

namespace gegen {

/// The Gegenbauer index lambda > -1/2, lambda != 0, or the Chebyshev-T
/// limit lambda -> 0+ (flagged explicitly, lambda is then 0).
class GegenbauerParam {
public:
    explicit GegenbauerParam(double lambda) : lambda_(lambda)
    {
        if (!(lambda > -0.5)) {
            throw DomainError("lambda must exceed -1/2, got " + detail::fmt_num(lambda));
        }
        if (lambda == 0.0) {
            throw DomainError("lambda = 0 requires the Chebyshev-T limit marker");
        }
    }

    static GegenbauerParam chebyshev_t_limit()
    {
        GegenbauerParam p;
        p.chebyshev_t_ = true;
        return p;
    }

    double lambda() const { return lambda_; }
    bool is_chebyshev_t_limit() const { return chebyshev_t_; }

    bool operator==(const GegenbauerParam&) const = default;

private:
    GegenbauerParam() = default;
    double lambda_ = 0.0;
    bool chebyshev_t_ = false;
};

/// Bernstein ellipse with foci +-1 and semi-axis sum rho.
struct EllipseGeometry {
    double rho;
    double semi_major;
    double semi_minor;
    double eccentric_param;  // 2/(rho+1/rho), the eccentricity

    explicit EllipseGeometry(double r)
        : rho(r),
          semi_major(0.5 * (r + 1.0 / r)),
          semi_minor(0.5 * (r - 1.0 / r)),
          eccentric_param(2.0 / (r + 1.0 / r))
    {
        if (!(r >= 1.0) || !std::isfinite(r)) {
            throw DomainError("ellipse radius rho must be >= 1, got " + detail::fmt_num(r));
        }
    }
};

/// ln|x| with its sign, for quantities that may be negative or overflow.
struct SignedLog {
    double log_abs = 0.0;
    int sign = 1;  // 0 encodes an exact zero

    double value() const { return sign == 0 ? 0.0 : sign * std::exp(log_abs); }

    SignedLog operator*(const SignedLog& o) const
    {
        return {log_abs + o.log_abs, sign * o.sign};
    }
    SignedLog operator/(const SignedLog& o) const
    {
        return {log_abs - o.log_abs, sign * o.sign};
    }
};

namespace detail {

/// sin(pi x) with the argument reduced exactly first.
inline double sin_pi(double x)
{
    const double r = std::round(x);
    const double s = std::sin(std::numbers::pi * (x - r));
    return std::fmod(r, 2.0) == 0.0 ? s : -s;
}

inline bool is_integer(double x)
{
    return std::isfinite(x) && x == std::round(x);
}

}  // namespace detail

/// ln Gamma(x) for x > 0.
inline double log_gamma(double x)
{
    if (!(x > 0.0)) {
        throw DomainError("log_gamma: argument must be positive, got " + detail::fmt_num(x));
    }
    return std::lgamma(x);
}

/// ln|Gamma(x)| and sign(Gamma(x)) for any real x off the poles 0,-1,-2,...
/// Negative arguments go through the reflection formula.
inline SignedLog log_abs_gamma(double x)
{
    if (x > 0.0) {
        return {std::lgamma(x), 1};
    }
    if (detail::is_integer(x)) {
        throw DomainError("Gamma has a pole at " + detail::fmt_num(x));
    }
    // Gamma(x) = pi / (sin(pi x) Gamma(1-x)), 1-x > 1.
    const double s = detail::sin_pi(x);
    return {std::log(std::numbers::pi) - std::log(std::abs(s)) - std::lgamma(1.0 - x),
            s > 0.0 ? 1 : -1};
}

/// 1/Gamma(x) as a signed log; exact zero at the poles.
inline SignedLog log_abs_rgamma(double x)
{
    if (x <= 0.0 && detail::is_integer(x)) {
        return {0.0, 0};
    }
    const SignedLog g = log_abs_gamma(x);
    return {-g.log_abs, g.sign};
}

/// ln( Gamma(n+a) / Gamma(n+b) ).
inline double log_gamma_ratio(double n, double a, double b)
{
    if (!(n + a > 0.0) || !(n + b > 0.0)) {
        throw DomainError("gamma_ratio: need n+a > 0 and n+b > 0");
    }
    return std::lgamma(n + a) - std::lgamma(n + b);
}

/// Gamma(n+a) / Gamma(n+b) through log-gamma differences.
inline double gamma_ratio(double n, double a, double b)
{
    if (a == b) {
        if (!(n + a > 0.0)) {
            throw DomainError("gamma_ratio: need n+a > 0 and n+b > 0");
        }
        return 1.0;
    }
    return std::exp(log_gamma_ratio(n, a, b));
}

/// Leading two terms of the large-z expansion of Gamma(z+a)/Gamma(z+b).
inline double gamma_ratio_asymptotic(double z, double a, double b)
{
    return std::pow(z, a - b) * (1.0 + (a - b) * (a + b - 1.0) / (2.0 * z));
}

/// Upsilon factor: Gamma(n+a)/Gamma(n+b) <= upsilon(n,a,b) n^(a-b)
/// for n >= 1, n+a > 1, n+b > 1.
inline double upsilon(double n, double a, double b)
{
    if (!(n >= 1.0) || !(n + a > 1.0) || !(n + b > 1.0)) {
        throw DomainError("upsilon: need n >= 1, n+a > 1 and n+b > 1");
    }
    return std::exp((a - b) / (2.0 * (n + b - 1.0)) + 1.0 / (12.0 * (n + a - 1.0)) +
                    (a - 1.0) * (a - b) / n);
}

inline double log_upsilon(double n, double a, double b)
{
    return std::log(upsilon(n, a, b));
}

// ---------------------------------------------------------------------------
// 2F1(n+1, 1-lambda; n+lambda+1; x)

enum class Hyp2f1Method { series, euler, asymptotic };

namespace detail {

inline constexpr double series_rel_tol = 1e-17;
inline constexpr int series_max_terms = 10000;

/// Plain Gauss series sum_k (a)_k (b)_k / ((c)_k k!) x^k with term recurrence.
/// Terminates on an exactly zero term (non-positive integer b).
template <class T>
T gauss_series(double a, double b, double c, T x)
{
    T term = T(1.0);
    T sum = T(1.0);
    for (int k = 0; k < series_max_terms; ++k) {
        const double kk = static_cast<double>(k);
        term *= (a + kk) * (b + kk) / ((c + kk) * (kk + 1.0));
        term *= x;
        sum += term;
        if (std::abs(term) == 0.0 || std::abs(term) < series_rel_tol * std::abs(sum)) {
            return sum;
        }
    }
    throw ConvergenceError("hypergeometric series hit the 10000-term cap");
}

inline void check_kernel_args(double x)
{
    if (!(std::abs(x) < 1.0)) {
        throw DomainError("hyp2f1_kernel: need |x| < 1, got " + fmt_num(x));
    }
}

template <class T>
T kernel_series(int n, double lambda, T x)
{
    const double a = n + 1.0;
    const double b = 1.0 - lambda;
    const double c = n + lambda + 1.0;
    // For lambda > 1 and Re x > 0 the (1-lambda)_k factors alternate and
    // cancel (even when the sum terminates); Euler's transformation gives
    // positive terms.
    if (lambda > 1.0 && std::real(x) > 0.0) {
        return std::pow(T(1.0) - x, 2.0 * lambda - 1.0) * gauss_series(c - a, c - b, c, x);
    }
    return gauss_series(a, b, c, x);
}

inline double kernel_euler(int n, double lambda, double x)
{
    const GaussLegendreRule& gl = gauss_legendre_256();
    const double nn = static_cast<double>(n);
    double integral = 0.0;
    if (lambda < 1.0) {
        // 1 - t = s^(1/lambda): the (1-t)^(lambda-1) endpoint factor cancels
        // against the Jacobian, leaving (1/lambda) * smooth.
        const double p = 1.0 / lambda;
        integral = gl.integrate(
            [&](double s) {
                const double one_minus_t = std::pow(s, p);
                const double t = 1.0 - one_minus_t;
                return std::pow(t, nn) * std::pow(1.0 - x * t, lambda - 1.0);
            },
            0.0, 1.0);
        integral *= p;
    } else if (is_integer(lambda)) {
        integral = gl.integrate(
            [&](double t) {
                return std::pow(t, nn) * std::pow(1.0 - t, lambda - 1.0) *
                       std::pow(1.0 - x * t, lambda - 1.0);
            },
            0.0, 1.0);
    } else {
        // 1 - t = s^4 turns (1-t)^(lambda-1) dt into 4 s^(4 lambda - 1) ds.
        integral = gl.integrate(
            [&](double s) {
                const double s4 = s * s * s * s;
                const double t = 1.0 - s4;
                return 4.0 * std::pow(t, nn) * std::pow(s, 4.0 * lambda - 1.0) *
                       std::pow(1.0 - x * t, lambda - 1.0);
            },
            0.0, 1.0);
    }
    const double log_pref =
        std::lgamma(nn + lambda + 1.0) - std::lgamma(nn + 1.0) - std::lgamma(lambda);
    return std::exp(log_pref) * integral;
}

inline double kernel_asymptotic(int n, double lambda, double x)
{
    const double b = 1.0 - lambda;
    // a = 1, c = lambda + 1 with n playing the role of the large parameter.
    const double correction = b * lambda / (n + lambda + 1.0) * (x / (1.0 - x));
    return std::pow(1.0 - x, -b) * (1.0 + correction);
}

}  // namespace detail

/// 2F1(n+1, 1-lambda; n+lambda+1; x), |x| < 1. Under the Chebyshev-T marker
/// the kernel is its lambda -> 0 limit 1/(1-x).
inline double hyp2f1_kernel(int n, const GegenbauerParam& param, double x,
                            Hyp2f1Method method = Hyp2f1Method::series)
{
    if (n < 0) {
        throw DomainError("hyp2f1_kernel: n must be non-negative");
    }
    detail::check_kernel_args(x);
    if (param.is_chebyshev_t_limit()) {
        return 1.0 / (1.0 - x);
    }
    const double lambda = param.lambda();
    switch (method) {
    case Hyp2f1Method::series:
        return detail::kernel_series(n, lambda, x);
    case Hyp2f1Method::euler:
        if (!(lambda > 0.0)) {
            throw UnsupportedError("hyp2f1_kernel: the Euler integral needs lambda > 0");
        }
        return detail::kernel_euler(n, lambda, x);
    case Hyp2f1Method::asymptotic:
        return detail::kernel_asymptotic(n, lambda, x);
    }
    throw UnsupportedError("hyp2f1_kernel: unknown method");
}

/// Complex-argument kernel (series path), used on contours.
inline std::complex<double> hyp2f1_kernel(int n, const GegenbauerParam& param,
                                          std::complex<double> x)
{
    if (n < 0) {
        throw DomainError("hyp2f1_kernel: n must be non-negative");
    }
    if (!(std::abs(x) < 1.0)) {
        throw DomainError("hyp2f1_kernel: need |x| < 1");
    }
    if (param.is_chebyshev_t_limit()) {
        return 1.0 / (1.0 - x);
    }
    return detail::kernel_series(n, param.lambda(), x);
}

// ---------------------------------------------------------------------------
// Normalisation constants

struct CNormExact {};
struct CNormAsymptotic {};
struct CNormDiagonal {
    double alpha;
};
using CNormMode = std::variant<CNormExact, CNormAsymptotic, CNormDiagonal>;

/// c_{n,lambda} = Gamma(lambda) Gamma(n+1) / Gamma(n+lambda) as a signed log.
/// Under the Chebyshev-T marker this is the limit constant 2.
inline SignedLog log_c_norm(int n, const GegenbauerParam& param)
{
    if (n < 0) {
        throw DomainError("c_norm: n must be non-negative");
    }
    if (param.is_chebyshev_t_limit()) {
        return {std::log(2.0), 1};
    }
    const double lambda = param.lambda();
    if (n == 0) {
        return {0.0, 1};
    }
    const SignedLog g = log_abs_gamma(lambda);
    return {g.log_abs + std::lgamma(n + 1.0) - std::lgamma(n + lambda), g.sign};
}

inline double c_norm(int n, const GegenbauerParam& param, CNormMode mode = CNormExact{})
{
    if (n < 0) {
        throw DomainError("c_norm: n must be non-negative");
    }
    if (const auto* d = std::get_if<CNormDiagonal>(&mode)) {
        const double a = d->alpha;
        if (!(a > 0.0)) {
            throw DomainError("c_norm: diagonal mode needs alpha > 0");
        }
        const double nn = static_cast<double>(n);
        const double base = a * std::log(a) - (a + 1.0) * std::log(a + 1.0);
        return std::exp(nn * base) * std::sqrt(2.0 * std::numbers::pi * nn * (a + 1.0) / a);
    }
    if (std::holds_alternative<CNormAsymptotic>(mode)) {
        if (param.is_chebyshev_t_limit()) {
            return 2.0;
        }
        const double lambda = param.lambda();
        const double nn = static_cast<double>(n);
        return std::tgamma(lambda) * std::pow(nn, 1.0 - lambda) *
               (1.0 + lambda * (1.0 - lambda) / (2.0 * nn));
    }
    return log_c_norm(n, param).value();
}

/// h_n^{(lambda)} = 2^{1-2lambda} pi Gamma(n+2lambda) / (Gamma(lambda)^2 Gamma(n+1) (n+lambda)).
inline SignedLog log_h_norm(int n, const GegenbauerParam& param)
{
    if (n < 0) {
        throw DomainError("h_norm: n must be non-negative");
    }
    if (param.is_chebyshev_t_limit()) {
        throw DomainError("h_norm: undefined at lambda = 0 (Chebyshev-T weights are pi/2, pi)");
    }
    const double lambda = param.lambda();
    const double nn = static_cast<double>(n);
    const SignedLog g2 = log_abs_gamma(nn + 2.0 * lambda);
    const SignedLog g1 = log_abs_gamma(lambda);
    const double shift = nn + lambda;
    return {(1.0 - 2.0 * lambda) * std::log(2.0) + std::log(std::numbers::pi) + g2.log_abs -
                2.0 * g1.log_abs - std::lgamma(nn + 1.0) - std::log(std::abs(shift)),
            g2.sign * (shift > 0.0 ? 1 : -1)};
}

inline double h_norm(int n, const GegenbauerParam& param)
{
    return log_h_norm(n, param).value();
}

// ---------------------------------------------------------------------------
// Ellipse perimeter

/// Complete elliptic integral of the second kind E(k), modulus k in [0,1],
/// by the arithmetic-geometric mean.
inline double complete_elliptic_e(double k)
{
    if (!(k >= 0.0 && k <= 1.0)) {
        throw DomainError("complete_elliptic_e: modulus must lie in [0,1]");
    }
    if (k == 1.0) {
        return 1.0;
    }
    double a = 1.0;
    double b = std::sqrt((1.0 - k) * (1.0 + k));
    double c2 = k * k;
    double sum = 0.5 * c2;  // 2^{n-1} c_n^2 at n = 0
    double pow2 = 0.5;
    for (int i = 0; i < 64; ++i) {
        const double an = 0.5 * (a + b);
        const double bn = std::sqrt(a * b);
        const double cn = 0.5 * (a - b);
        pow2 *= 2.0;
        sum += pow2 * cn * cn;
        a = an;
        b = bn;
        if (std::abs(a - b) <= 1e-16 * a) {
            break;
        }
    }
    const double big_k = std::numbers::pi / (2.0 * a);
    return big_k * (1.0 - sum);
}

enum class PerimeterMode { elliptic, jameson_bound };

/// Length of the Bernstein ellipse, exactly or by the upper bound
/// 2(rho+1/rho) + 2(pi/2-1)(rho-1/rho), which is sharp at rho = 1.
inline double ellipse_perimeter(const EllipseGeometry& geom,
                                PerimeterMode mode = PerimeterMode::elliptic)
{
    const double r = geom.rho;
    if (mode == PerimeterMode::jameson_bound) {
        return 2.0 * (r + 1.0 / r) + 2.0 * (std::numbers::pi / 2.0 - 1.0) * (r - 1.0 / r);
    }
    const double eps = geom.eccentric_param;
    return 4.0 / eps * complete_elliptic_e(std::min(eps, 1.0));
}

inline double ellipse_perimeter(double rho, PerimeterMode mode = PerimeterMode::elliptic)
{
    return ellipse_perimeter(EllipseGeometry(rho), mode);
}

}  // namespace gegen
