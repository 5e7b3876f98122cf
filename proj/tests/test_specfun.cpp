#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "gegen/specfun.hpp"

using namespace gegen;

namespace {

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

}  // namespace

TEST(LogGamma, KnownValues)
{
    EXPECT_EQ(log_gamma(1.0), 0.0);
    EXPECT_NEAR(log_gamma(0.5), 0.5 * std::log(std::numbers::pi), 1e-15);
    EXPECT_LT(rel(log_gamma(11.0), 15.104412573075515295), 1e-14);
}

TEST(LogGamma, RejectsNonPositive)
{
    EXPECT_THROW(log_gamma(0.0), DomainError);
    EXPECT_THROW(log_gamma(-2.5), DomainError);
}

TEST(LogGamma, AbsReflectionTracksSign)
{
    // Gamma(-0.5) = -2 sqrt(pi), Gamma(-1.5) = 4 sqrt(pi)/3
    const SignedLog a = log_abs_gamma(-0.5);
    EXPECT_EQ(a.sign, -1);
    EXPECT_LT(rel(a.value(), -2.0 * std::sqrt(std::numbers::pi)), 1e-14);
    const SignedLog b = log_abs_gamma(-1.5);
    EXPECT_EQ(b.sign, 1);
    EXPECT_LT(rel(b.value(), 4.0 * std::sqrt(std::numbers::pi) / 3.0), 1e-14);
    EXPECT_EQ(log_abs_rgamma(-3.0).sign, 0);
}

TEST(GammaRatio, Values)
{
    EXPECT_LT(rel(gamma_ratio(10, 1, 0.5), 3.2020375888099552726), 1e-13);
    EXPECT_EQ(gamma_ratio(5, 1, 1), 1.0);
    // Asymptotic expansion agrees to three digits.
    EXPECT_LT(rel(gamma_ratio_asymptotic(10, 1, 0.5), gamma_ratio(10, 1, 0.5)), 5e-4);
    EXPECT_NEAR(log_gamma_ratio(10, 1, 0.5), std::log(3.2020375888099552726), 1e-13);
}

TEST(GammaRatio, LargeArgumentsDoNotOverflow)
{
    const double v = log_gamma_ratio(300.0, 100.0, 50.0);
    EXPECT_TRUE(std::isfinite(v));
    EXPECT_NEAR(v, std::lgamma(400.0) - std::lgamma(350.0), 1e-9);
}

TEST(Upsilon, Values)
{
    EXPECT_LT(rel(upsilon(1, 1, 0.5), std::exp(7.0 / 12.0)), 1e-15);
    EXPECT_LT(rel(upsilon(1, 1, 1), std::exp(1.0 / 12.0)), 1e-15);
    EXPECT_GE(upsilon(10, 1, 0.5) * std::sqrt(10.0), gamma_ratio(10, 1, 0.5));
    // exp(1/38 + 1/120) sqrt(10)
    EXPECT_NEAR(upsilon(10, 1, 0.5) * std::sqrt(10.0), 3.2737681774303220, 1e-14);
    EXPECT_THROW(upsilon(1, 0.0, 0.5), DomainError);
}

namespace {

bool upsilon_dominates(int n, double a, double b)
{
    return log_gamma_ratio(n, a, b) <= log_upsilon(n, a, b) + (a - b) * std::log(n) + 1e-12;
}

}  // namespace

TEST(Upsilon, DominatesForThePairsUsedByTheBounds)
{
    for (double l : {0.25, 0.5, 0.75, 1.0, 1.5, 2.5, 3.5, 5.5, 9.5}) {
        const double pairs[][2] = {{1.0, l}, {1.0, 1.5}, {2.0 * l, 1.5}, {1.0, l + 0.5}, {2.0 * l, l + 0.5}};
        for (const auto& ab : pairs) {
            for (int n = 1; n <= 200; ++n) {
                if (n + ab[0] > 1.0 && n + ab[1] > 1.0) {
                    EXPECT_TRUE(upsilon_dominates(n, ab[0], ab[1]))
                        << "n=" << n << " a=" << ab[0] << " b=" << ab[1];
                }
            }
        }
        for (int n = 1; n <= 200; ++n) {
            EXPECT_TRUE(upsilon_dominates(2 * n, 2.0, 2.0 * l)) << "n=" << n << " l=" << l;
        }
    }
}

TEST(Upsilon, DominatesWhenAIsAtMostOneOrAboveB)
{
    const double grid[] = {-0.4, 0.0, 0.25, 0.5, 1.0, 1.5, 2.0, 3.0, 3.5, 7.0, 19.0};
    for (double a : grid) {
        for (double b : grid) {
            if (a > 1.0 && a < b) {
                continue;
            }
            for (int n = 1; n <= 200; ++n) {
                if (n + a > 1.0 && n + b > 1.0) {
                    EXPECT_TRUE(upsilon_dominates(n, a, b)) << "n=" << n << " a=" << a << " b=" << b;
                }
            }
        }
    }
}

TEST(Upsilon, FailsForSmallNWhenOneLessThanALessThanB)
{
    // Gamma(3)/Gamma(4) = 1/3 > exp(-1/6 + 1/24 - 1): the (a-1)(a-b)/n term
    // overshoots at n = 1. Large n is fine again.
    EXPECT_FALSE(upsilon_dominates(1, 2.0, 3.0));
    EXPECT_FALSE(upsilon_dominates(1, 3.5, 7.0));
    EXPECT_TRUE(upsilon_dominates(50, 3.5, 7.0));
}

TEST(Hyp2f1Kernel, TerminatesAtLambdaOne)
{
    EXPECT_EQ(hyp2f1_kernel(5, GegenbauerParam(1.0), 0.3), 1.0);
}

TEST(Hyp2f1Kernel, IndependentValues)
{
    EXPECT_LT(rel(hyp2f1_kernel(1, GegenbauerParam(0.5), 0.25), 1.1197960825054113427), 1e-14);
    EXPECT_LT(rel(hyp2f1_kernel(2, GegenbauerParam(3.0), 0.5), 4.0 / 7.0), 1e-14);
    EXPECT_LT(rel(hyp2f1_kernel(10, GegenbauerParam(3.5), -0.81), 3.3303140024676724652), 1e-13);
    EXPECT_LT(rel(hyp2f1_kernel(40, GegenbauerParam(0.25), 0.9), 5.4321927856421843012), 1e-13);
    EXPECT_LT(rel(hyp2f1_kernel(7, GegenbauerParam(-0.25), 0.5), 2.4664986724382854891), 1e-13);
}

TEST(Hyp2f1Kernel, EulerAgreesWithSeries)
{
    for (double lambda : {0.25, 0.5, 1.0, 3.5, 9.5}) {
        const GegenbauerParam p(lambda);
        for (int n = 0; n <= 100; n += 5) {
            for (double x = -0.9; x <= 0.9 + 1e-12; x += 0.15) {
                const double s = hyp2f1_kernel(n, p, x, Hyp2f1Method::series);
                const double e = hyp2f1_kernel(n, p, x, Hyp2f1Method::euler);
                EXPECT_LE(rel(e, s), 1e-12) << "lambda=" << lambda << " n=" << n << " x=" << x;
            }
        }
    }
}

TEST(Hyp2f1Kernel, IntegerLambdaFiniteSum)
{
    for (int lambda = 1; lambda <= 10; ++lambda) {
        for (int n : {0, 3, 17, 60}) {
            for (double x : {-0.9, -0.7, 0.2, 0.6, 0.9}) {
                long double sum = 0.0L;
                long double mag = 0.0L;
                long double term = 1.0L;
                for (int k = 0; k < lambda; ++k) {
                    sum += term;
                    mag += std::abs(term);
                    term *= (long double)(n + 1 + k) * (1 - lambda + k) /
                            ((long double)(n + lambda + 1 + k) * (k + 1)) * x;
                }
                EXPECT_EQ(term, 0.0L);
                const double v = hyp2f1_kernel(n, GegenbauerParam(lambda), x);
                EXPECT_LE(std::abs(v - static_cast<double>(sum)),
                          1e-13 * std::abs(static_cast<double>(sum)) + 1e-17 * static_cast<double>(mag));
            }
        }
    }
}

TEST(Hyp2f1Kernel, CancellingFiniteSum)
{
    // 2F1(61, -9; 71; 0.9), independent high-precision value
    EXPECT_LT(rel(hyp2f1_kernel(60, GegenbauerParam(10.0), 0.9), 4.0028047094408266745e-6), 1e-13);
}

TEST(Hyp2f1Kernel, BoundChain)
{
    for (double lambda : {0.25, 0.5, 0.75, 1.0}) {
        for (int n : {0, 1, 10, 60}) {
            for (double x : {0.1, 0.5, 0.9}) {
                EXPECT_LE(hyp2f1_kernel(n, GegenbauerParam(lambda), x),
                          std::pow(1.0 - x, lambda - 1.0) * (1.0 + 1e-14));
            }
        }
    }
    for (double lambda : {1.5, 3.5, 9.5}) {
        for (int n : {0, 1, 10, 60}) {
            for (double x : {0.1, 0.5, 0.9}) {
                EXPECT_LE(hyp2f1_kernel(n, GegenbauerParam(lambda), -x),
                          std::pow(1.0 + x, lambda - 1.0) * (1.0 + 1e-14));
            }
        }
    }
}

TEST(Hyp2f1Kernel, LargeNLimit)
{
    const GegenbauerParam p(0.5);
    const double v = hyp2f1_kernel(200, p, 0.25);
    EXPECT_LE(rel(v, std::pow(0.75, -0.5)), 5e-3);
    EXPECT_LE(rel(hyp2f1_kernel(200, p, 0.25, Hyp2f1Method::asymptotic), v), 5e-3);
}

TEST(Hyp2f1Kernel, Errors)
{
    EXPECT_THROW(hyp2f1_kernel(1, GegenbauerParam(0.5), 1.0), DomainError);
    EXPECT_THROW(hyp2f1_kernel(1, GegenbauerParam(0.5), -1.2), DomainError);
    EXPECT_THROW(hyp2f1_kernel(1, GegenbauerParam(-0.25), 0.3, Hyp2f1Method::euler),
                 UnsupportedError);
}

TEST(Hyp2f1Kernel, ChebyshevLimit)
{
    const GegenbauerParam t = GegenbauerParam::chebyshev_t_limit();
    EXPECT_DOUBLE_EQ(hyp2f1_kernel(4, t, 0.2), 1.0 / 0.8);
}

TEST(GegenbauerParam, Validation)
{
    EXPECT_THROW(GegenbauerParam(0.0), DomainError);
    EXPECT_THROW(GegenbauerParam(-0.5), DomainError);
    EXPECT_NO_THROW(GegenbauerParam(-0.49));
    EXPECT_TRUE(GegenbauerParam::chebyshev_t_limit().is_chebyshev_t_limit());
}

TEST(CNorm, Values)
{
    EXPECT_DOUBLE_EQ(c_norm(7, GegenbauerParam(1.0)), 1.0);
    EXPECT_NEAR(c_norm(1, GegenbauerParam(0.5)), 2.0, 1e-14);
    const double exact = c_norm(100, GegenbauerParam(0.5));
    EXPECT_LE(rel(std::sqrt(100 * std::numbers::pi) * (1.0 + 1.0 / 800.0), exact), 1e-3);
    EXPECT_LE(rel(c_norm(100, GegenbauerParam(0.5), CNormAsymptotic{}), exact), 1e-3);
}

TEST(CNorm, DiagonalMode)
{
    const double alpha = 0.25;
    for (int n : {40, 160, 640}) {
        const GegenbauerParam p(alpha * n);
        const double exact = log_c_norm(n, p).log_abs;
        const double diag = std::log(c_norm(n, p, CNormDiagonal{alpha}));
        EXPECT_LT(std::abs(diag - exact), 2.0 / n) << "n=" << n;
    }
    EXPECT_THROW(c_norm(3, GegenbauerParam(1.0), CNormDiagonal{0.0}), DomainError);
}

TEST(HNorm, Values)
{
    EXPECT_NEAR(h_norm(0, GegenbauerParam(1.0)), std::numbers::pi / 2.0, 1e-15);
    EXPECT_NEAR(h_norm(0, GegenbauerParam(0.5)), 2.0, 1e-15);
    EXPECT_NEAR(h_norm(3, GegenbauerParam(0.5)), 2.0 / 7.0, 1e-15);
    EXPECT_THROW(h_norm(0, GegenbauerParam::chebyshev_t_limit()), DomainError);
}

TEST(EllipsePerimeter, Values)
{
    EXPECT_NEAR(ellipse_perimeter(1.0), 4.0, 1e-12);
    EXPECT_NEAR(ellipse_perimeter(1.0, PerimeterMode::jameson_bound), 4.0, 1e-12);
    EXPECT_LT(rel(ellipse_perimeter(2.0), 6.3817497158495321165), 1e-13);
    EXPECT_NEAR(ellipse_perimeter(2.0, PerimeterMode::jameson_bound),
                5.0 + 3.0 * (std::numbers::pi / 2.0 - 1.0), 1e-14);
    EXPECT_LT(rel(ellipse_perimeter(3.6), 11.326573634649728296), 1e-13);
    EXPECT_THROW(ellipse_perimeter(0.9), DomainError);
}

TEST(EllipsePerimeter, JamesonDominates)
{
    for (int i = 1; i <= 900; ++i) {
        const double rho = 1.0 + i * 0.01;
        EXPECT_LE(ellipse_perimeter(rho), ellipse_perimeter(rho, PerimeterMode::jameson_bound) * (1.0 + 1e-14));
    }
    // the gap closes as the ellipse collapses onto [-1,1]
    const double rho = 1.0 + 1e-6;
    EXPECT_LT(ellipse_perimeter(rho, PerimeterMode::jameson_bound) - ellipse_perimeter(rho), 1e-5);
}

TEST(EllipseGeometry, Fields)
{
    const EllipseGeometry g(2.0);
    EXPECT_DOUBLE_EQ(g.semi_major, 1.25);
    EXPECT_DOUBLE_EQ(g.semi_minor, 0.75);
    EXPECT_NEAR(g.semi_major * g.semi_major - g.semi_minor * g.semi_minor, 1.0, 1e-15);
    EXPECT_DOUBLE_EQ(g.eccentric_param, 0.8);
    EXPECT_THROW(EllipseGeometry(0.5), DomainError);
}
