#pragma once

#include <cmath>
#include <cstddef>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "errors.hpp"

namespace gegen {

/// Gauss-Legendre rule on [-1,1].
struct GaussLegendreRule {
    std::vector<double> nodes;
    std::vector<double> weights;

    std::size_t size() const { return nodes.size(); }

    /// Integrates f over [a,b].
    template <class F>
    auto integrate(F&& f, double a, double b) const
    {
        const double half = 0.5 * (b - a);
        const double mid = 0.5 * (b + a);
        using R = decltype(f(mid));
        R sum{};
        for (std::size_t i = 0; i < nodes.size(); ++i) {
            sum += weights[i] * f(mid + half * nodes[i]);
        }
        return sum * half;
    }
};

/// Nodes by Newton iteration on P_n from the Tricomi initial guess.
inline GaussLegendreRule gauss_legendre(std::size_t n)
{
    if (n == 0) {
        throw DomainError("gauss_legendre: need at least one node");
    }
    GaussLegendreRule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    const std::size_t half = (n + 1) / 2;
    for (std::size_t i = 0; i < half; ++i) {
        double x = std::cos(std::numbers::pi * (static_cast<double>(i) + 0.75) /
                            (static_cast<double>(n) + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0;
            double p1 = x;
            for (std::size_t k = 2; k <= n; ++k) {
                const double kk = static_cast<double>(k);
                const double p2 = ((2.0 * kk - 1.0) * x * p1 - (kk - 1.0) * p0) / kk;
                p0 = p1;
                p1 = p2;
            }
            dp = static_cast<double>(n) * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-16) {
                break;
            }
        }
        // Recompute the derivative at the converged node for the weight.
        double p0 = 1.0;
        double p1 = x;
        for (std::size_t k = 2; k <= n; ++k) {
            const double kk = static_cast<double>(k);
            const double p2 = ((2.0 * kk - 1.0) * x * p1 - (kk - 1.0) * p0) / kk;
            p0 = p1;
            p1 = p2;
        }
        dp = static_cast<double>(n) * (x * p1 - p0) / (x * x - 1.0);
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        rule.nodes[i] = -x;
        rule.weights[i] = w;
        rule.nodes[n - 1 - i] = x;
        rule.weights[n - 1 - i] = w;
    }
    if (n % 2 == 1) {
        rule.nodes[n / 2] = 0.0;
    }
    return rule;
}

/// The fixed 256-node rule used by the Euler-integral path; built once.
inline const GaussLegendreRule& gauss_legendre_256()
{
    static const GaussLegendreRule rule = gauss_legendre(256);
    return rule;
}

/// The 32-node panel rule used by composite integrators.
inline const GaussLegendreRule& gauss_legendre_32()
{
    static const GaussLegendreRule rule = gauss_legendre(32);
    return rule;
}

}  // namespace gegen
