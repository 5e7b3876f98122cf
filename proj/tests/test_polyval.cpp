#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "gegen/polyval.hpp"
#include "gegen/quadrature.hpp"

using namespace gegen;

TEST(Gegenbauer, LowDegrees)
{
    const GegenbauerParam p(1.5);
    EXPECT_EQ(gegenbauer_eval(0, p, 0.3), 1.0);
    EXPECT_DOUBLE_EQ(gegenbauer_eval(1, p, 0.3), 0.9);
    // C_2 = 2 l (l+1) x^2 - l
    EXPECT_NEAR(gegenbauer_eval(2, p, 0.3), 2 * 1.5 * 2.5 * 0.09 - 1.5, 1e-15);
}

TEST(Gegenbauer, SpecialCases)
{
    for (double x : {-0.9, -0.3, 0.0, 0.41, 1.0}) {
        for (int n = 0; n <= 30; ++n) {
            EXPECT_NEAR(gegenbauer_eval(n, GegenbauerParam(0.5), x), legendre_eval(n, x), 1e-13);
            EXPECT_NEAR(gegenbauer_eval(n, GegenbauerParam(1.0), x), chebyshev_u_eval(n, x), 1e-12);
        }
    }
}

TEST(Gegenbauer, ValueAtOne)
{
    for (double lambda : {0.25, 0.5, 1.0, 3.5}) {
        const GegenbauerParam p(lambda);
        for (int n = 0; n <= 25; ++n) {
            const double ref = gegenbauer_at_one(n, p);
            EXPECT_LE(std::abs(gegenbauer_eval(n, p, 1.0) - ref), 1e-12 * ref);
        }
    }
    EXPECT_NEAR(gegenbauer_at_one(3, GegenbauerParam(0.5)), 1.0, 1e-14);
    EXPECT_NEAR(gegenbauer_at_one(4, GegenbauerParam(1.0)), 5.0, 1e-13);
}

TEST(Gegenbauer, Parity)
{
    for (double lambda : {-0.25, 0.5, 2.5}) {
        const GegenbauerParam p(lambda);
        for (int n = 0; n <= 20; ++n) {
            for (double x : {0.1, 0.55, 0.97}) {
                const double s = n % 2 == 0 ? 1.0 : -1.0;
                EXPECT_NEAR(gegenbauer_eval(n, p, -x), s * gegenbauer_eval(n, p, x), 1e-12);
            }
        }
    }
}

TEST(Gegenbauer, BoundedByValueAtOne)
{
    for (double lambda : {0.25, 0.5, 1.0, 4.0}) {
        const GegenbauerParam p(lambda);
        for (int n = 0; n <= 40; ++n) {
            const double cap = gegenbauer_at_one(n, p) * (1.0 + 1e-12);
            for (int i = 0; i <= 200; ++i) {
                const double x = -1.0 + i / 100.0;
                EXPECT_LE(std::abs(gegenbauer_eval(n, p, x)), cap);
            }
        }
    }
}

TEST(Gegenbauer, ChebyshevLimit)
{
    // T_n = (n/2) lim_{lambda->0} C_n^lambda / lambda
    const double lambda = 1e-6;
    const GegenbauerParam p(lambda);
    for (int n = 1; n <= 20; ++n) {
        for (double x : {-0.8, 0.2, 0.7}) {
            const double lim = 0.5 * n * gegenbauer_eval(n, p, x) / lambda;
            EXPECT_NEAR(lim, chebyshev_t_eval(n, x), 1e-4);
        }
    }
    EXPECT_THROW(gegenbauer_eval(2, GegenbauerParam::chebyshev_t_limit(), 0.1), DomainError);
}

TEST(Chebyshev, Trigonometric)
{
    for (int n = 0; n <= 50; ++n) {
        for (double t : {0.1, 1.0, 2.5}) {
            EXPECT_NEAR(chebyshev_t_eval(n, std::cos(t)), std::cos(n * t), 1e-12);
            EXPECT_NEAR(chebyshev_u_eval(n, std::cos(t)) * std::sin(t), std::sin((n + 1) * t), 1e-12);
        }
    }
}

TEST(Gegenbauer, Orthogonality)
{
    const GegenbauerParam p(1.5);
    const GaussLegendreRule& gl = gauss_legendre_256();
    for (int m = 0; m < 6; ++m) {
        for (int n = 0; n < 6; ++n) {
            const double v = gl.integrate(
                [&](double x) {
                    return (1.0 - x * x) * gegenbauer_eval(m, p, x) * gegenbauer_eval(n, p, x);
                },
                -1.0, 1.0);
            if (m == n) {
                EXPECT_NEAR(v, h_norm(n, p), 1e-12);
            } else {
                EXPECT_NEAR(v, 0.0, 1e-12);
            }
        }
    }
}

TEST(Family, Dispatch)
{
    EXPECT_EQ(PolynomialFamily::chebyshev_t().name(), "chebyshev_t");
    EXPECT_EQ(PolynomialFamily::from_param(GegenbauerParam::chebyshev_t_limit()).kind(),
              PolynomialFamily::Kind::chebyshev_t);
    EXPECT_NEAR(family_eval(PolynomialFamily::legendre(), 3, 0.5), -0.4375, 1e-15);
    EXPECT_NEAR(family_eval(PolynomialFamily::chebyshev_t(), 3, 0.5), -1.0, 1e-15);
    EXPECT_NEAR(family_eval(PolynomialFamily::gegenbauer(GegenbauerParam(1.0)), 2, 0.5), 0.0, 1e-15);
    EXPECT_THROW(family_eval(PolynomialFamily::legendre(), -1, 0.5), DomainError);
}

TEST(Quadrature, GaussLegendreExactness)
{
    const GaussLegendreRule rule = gauss_legendre(10);
    EXPECT_NEAR(rule.integrate([](double x) { return std::pow(x, 18); }, -1.0, 1.0), 2.0 / 19.0,
                1e-15);
    EXPECT_NEAR(gauss_legendre_32().integrate([](double x) { return std::exp(x); }, 0.0, 1.0),
                std::numbers::e - 1.0, 4e-15);
}
