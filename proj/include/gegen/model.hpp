#pragma once

#include <cmath>
#include <complex>
#include <functional>
#include <limits>
#include <optional>
#include <string>
#include <type_traits>
#include <utility>
#include <variant>

#include "errors.hpp"
#include "specfun.hpp"

namespace gegen {

using cplx = std::complex<double>;

/// Larger-modulus root u of u^2 - 2zu + 1 = 0, i.e. z +- sqrt(z^2-1) with
/// |u| > 1. Maps the Bernstein ellipse E_rho onto the circle |u| = rho.
inline cplx joukowski_root(cplx z)
{
    if (z.imag() == 0.0 && std::abs(z.real()) <= 1.0) {
        throw BranchError("joukowski_root: z lies on the cut [-1,1]");
    }
    const cplx s = std::sqrt(z * z - 1.0);
    const cplx up = z + s;
    const cplx um = z - s;
    return std::abs(up) >= std::abs(um) ? up : um;
}

/// Point of E_rho at angle theta: (rho e^{i theta} + rho^{-1} e^{-i theta}) / 2.
inline cplx ellipse_point(double rho, double theta)
{
    const cplx u = std::polar(rho, theta);
    return 0.5 * (u + 1.0 / u);
}

namespace model {

struct Pole {
    cplx z0;  // f(x) = 1/(x - z0)
};
struct AlgebraicOutside {
    double b;      // f(x) = (b - x)^alpha
    double alpha;
};
struct LogOutside {
    double b;  // f(x) = log(b - x)
};
struct AlgebraicEndpoint {
    double alpha;  // f(x) = (1 + sign x)^alpha
    int sign;
};
struct LogEndpoint {
    int sign;  // f(x) = log(1 + sign x)
};
struct AlgebraicInterior {
    double x0;  // f(x) = |x - x0|^alpha
    double alpha;
};
struct LogInterior {
    double x0;  // f(x) = log|x - x0|
};
struct Custom {
    std::function<double(double)> eval_real;
    std::function<cplx(cplx)> eval_complex;  // may be empty
    double rho_max;
    std::string name = "custom";
};

}  // namespace model

/// The test functions used throughout: a single singularity at a known place.
class ModelFunction {
public:
    using Variant = std::variant<model::Pole, model::AlgebraicOutside, model::LogOutside,
                                 model::AlgebraicEndpoint, model::LogEndpoint,
                                 model::AlgebraicInterior, model::LogInterior, model::Custom>;

    enum class Kind {
        pole,
        algebraic_outside,
        log_outside,
        algebraic_endpoint,
        log_endpoint,
        algebraic_interior,
        log_interior,
        custom
    };

    static ModelFunction pole(cplx z0)
    {
        if (z0.imag() == 0.0 && std::abs(z0.real()) <= 1.0) {
            throw DomainError("pole: z0 must lie off [-1,1]");
        }
        return ModelFunction(model::Pole{z0});
    }
    static ModelFunction algebraic_outside(double b, double alpha)
    {
        if (!(b > 1.0)) {
            throw DomainError("algebraic_outside: need b > 1");
        }
        return ModelFunction(model::AlgebraicOutside{b, alpha});
    }
    static ModelFunction log_outside(double b)
    {
        if (!(b > 1.0)) {
            throw DomainError("log_outside: need b > 1");
        }
        return ModelFunction(model::LogOutside{b});
    }
    static ModelFunction algebraic_endpoint(double alpha, int sign)
    {
        check_sign(sign);
        if (!(alpha > -0.5)) {
            throw DomainError("algebraic_endpoint: need alpha > -1/2");
        }
        if (detail::is_integer(alpha)) {
            throw DomainError("algebraic_endpoint: alpha must not be an integer");
        }
        return ModelFunction(model::AlgebraicEndpoint{alpha, sign});
    }
    static ModelFunction log_endpoint(int sign)
    {
        check_sign(sign);
        return ModelFunction(model::LogEndpoint{sign});
    }
    static ModelFunction algebraic_interior(double x0, double alpha)
    {
        if (!(std::abs(x0) < 1.0)) {
            throw DomainError("algebraic_interior: need |x0| < 1");
        }
        if (!(alpha > -1.0)) {
            throw DomainError("algebraic_interior: need alpha > -1");
        }
        return ModelFunction(model::AlgebraicInterior{x0, alpha});
    }
    static ModelFunction log_interior(double x0)
    {
        if (!(std::abs(x0) < 1.0)) {
            throw DomainError("log_interior: need |x0| < 1");
        }
        return ModelFunction(model::LogInterior{x0});
    }
    static ModelFunction custom(std::function<double(double)> eval_real,
                                std::function<cplx(cplx)> eval_complex, double rho_max,
                                std::string name = "custom")
    {
        if (!(rho_max >= 1.0)) {
            throw DomainError("custom: rho_max must be >= 1");
        }
        return ModelFunction(
            model::Custom{std::move(eval_real), std::move(eval_complex), rho_max, std::move(name)});
    }

    Kind kind() const { return static_cast<Kind>(v_.index()); }
    const Variant& variant() const { return v_; }

    /// f on [-1,1]. Endpoint and interior singular points return +-inf.
    double operator()(double x) const
    {
        return std::visit(
            [x](const auto& m) -> double {
                using M = std::decay_t<decltype(m)>;
                if constexpr (std::is_same_v<M, model::Pole>) {
                    if (m.z0.imag() != 0.0) {
                        throw DomainError("complex pole: use eval_complex for real x");
                    }
                    return 1.0 / (x - m.z0.real());
                } else if constexpr (std::is_same_v<M, model::AlgebraicOutside>) {
                    return std::pow(m.b - x, m.alpha);
                } else if constexpr (std::is_same_v<M, model::LogOutside>) {
                    return std::log(m.b - x);
                } else if constexpr (std::is_same_v<M, model::AlgebraicEndpoint>) {
                    return std::pow(1.0 + m.sign * x, m.alpha);
                } else if constexpr (std::is_same_v<M, model::LogEndpoint>) {
                    return std::log1p(m.sign * x);
                } else if constexpr (std::is_same_v<M, model::AlgebraicInterior>) {
                    return std::pow(std::abs(x - m.x0), m.alpha);
                } else if constexpr (std::is_same_v<M, model::LogInterior>) {
                    return std::log(std::abs(x - m.x0));
                } else {
                    return m.eval_real(x);
                }
            },
            v_);
    }

    /// f continued to complex z; defined only where rho_max > 1.
    cplx eval_complex(cplx z) const
    {
        return std::visit(
            [z](const auto& m) -> cplx {
                using M = std::decay_t<decltype(m)>;
                if constexpr (std::is_same_v<M, model::Pole>) {
                    return 1.0 / (z - m.z0);
                } else if constexpr (std::is_same_v<M, model::AlgebraicOutside>) {
                    return std::pow(cplx(m.b) - z, m.alpha);
                } else if constexpr (std::is_same_v<M, model::LogOutside>) {
                    return std::log(cplx(m.b) - z);
                } else if constexpr (std::is_same_v<M, model::Custom>) {
                    if (!m.eval_complex) {
                        throw AnalyticityError(m.name + ": no complex continuation supplied");
                    }
                    return m.eval_complex(z);
                } else {
                    throw AnalyticityError("function is not analytic in any Bernstein ellipse");
                }
            },
            v_);
    }

    /// Whether f is complex-valued on [-1,1].
    bool is_complex_valued() const
    {
        const auto* p = std::get_if<model::Pole>(&v_);
        return p != nullptr && p->z0.imag() != 0.0;
    }

    /// f evaluated at a real point, promoted to complex (handles complex poles).
    cplx eval_on_interval(double x) const
    {
        if (is_complex_valued()) {
            return eval_complex(cplx(x, 0.0));
        }
        return cplx((*this)(x), 0.0);
    }

    /// Largest rho such that f is analytic inside E_rho (1 when none).
    double rho_max() const
    {
        return std::visit(
            [](const auto& m) -> double {
                using M = std::decay_t<decltype(m)>;
                if constexpr (std::is_same_v<M, model::Pole>) {
                    return std::abs(joukowski_root(m.z0));
                } else if constexpr (std::is_same_v<M, model::AlgebraicOutside> ||
                                     std::is_same_v<M, model::LogOutside>) {
                    return m.b + std::sqrt(m.b * m.b - 1.0);
                } else if constexpr (std::is_same_v<M, model::Custom>) {
                    return m.rho_max;
                } else {
                    return 1.0;
                }
            },
            v_);
    }

    /// Location of the (single) singularity, if the kind has one.
    std::optional<cplx> singularity() const
    {
        return std::visit(
            [](const auto& m) -> std::optional<cplx> {
                using M = std::decay_t<decltype(m)>;
                if constexpr (std::is_same_v<M, model::Pole>) {
                    return m.z0;
                } else if constexpr (std::is_same_v<M, model::AlgebraicOutside> ||
                                     std::is_same_v<M, model::LogOutside>) {
                    return cplx(m.b);
                } else if constexpr (std::is_same_v<M, model::AlgebraicEndpoint> ||
                                     std::is_same_v<M, model::LogEndpoint>) {
                    return cplx(-m.sign);
                } else if constexpr (std::is_same_v<M, model::AlgebraicInterior> ||
                                     std::is_same_v<M, model::LogInterior>) {
                    return cplx(m.x0);
                } else {
                    return std::nullopt;
                }
            },
            v_);
    }

    std::string name() const
    {
        return std::visit(
            [](const auto& m) -> std::string {
                using M = std::decay_t<decltype(m)>;
                if constexpr (std::is_same_v<M, model::Pole>) {
                    return "pole(" + detail::fmt_num(m.z0.real()) + "," +
                           detail::fmt_num(m.z0.imag()) + ")";
                } else if constexpr (std::is_same_v<M, model::AlgebraicOutside>) {
                    return "algebraic_outside(b=" + detail::fmt_num(m.b) +
                           ",alpha=" + detail::fmt_num(m.alpha) + ")";
                } else if constexpr (std::is_same_v<M, model::LogOutside>) {
                    return "log_outside(b=" + detail::fmt_num(m.b) + ")";
                } else if constexpr (std::is_same_v<M, model::AlgebraicEndpoint>) {
                    return "algebraic_endpoint(alpha=" + detail::fmt_num(m.alpha) +
                           ",sign=" + std::to_string(m.sign) + ")";
                } else if constexpr (std::is_same_v<M, model::LogEndpoint>) {
                    return "log_endpoint(sign=" + std::to_string(m.sign) + ")";
                } else if constexpr (std::is_same_v<M, model::AlgebraicInterior>) {
                    return "algebraic_interior(x0=" + detail::fmt_num(m.x0) +
                           ",alpha=" + detail::fmt_num(m.alpha) + ")";
                } else if constexpr (std::is_same_v<M, model::LogInterior>) {
                    return "log_interior(x0=" + detail::fmt_num(m.x0) + ")";
                } else {
                    return m.name;
                }
            },
            v_);
    }

private:
    explicit ModelFunction(Variant v) : v_(std::move(v)) {}

    static void check_sign(int sign)
    {
        if (sign != 1 && sign != -1) {
            throw DomainError("sign must be +1 or -1");
        }
    }

    Variant v_;
};

}  // namespace gegen
