#include <gtest/gtest.h>

#include <cmath>

#include "charcone/error.hpp"
#include "charcone/seminorms.hpp"
#include "support.hpp"

using namespace charcone;
using namespace testing_support;

namespace {

Grid lc_grid(int n, std::size_t count, double step) {
    return uniform_grid(ModelParams::make(1.0, n), GridKind::lc_momentum, count, step);
}

const std::vector<int> kNoBeta1{};
const std::vector<int> kAlpha0{0};

}  // namespace

TEST(Seminorm, ZeroFunction) {
    const auto z = TestFunctionSpec::constant(1, 0.0);
    EXPECT_EQ(squeezed_seminorm(z, -3, kNoBeta1, kAlpha0, lc_grid(1, 64, 0.1)), 0.0);
    EXPECT_TRUE(filtration_check(z, 5, refinement_ladder(lc_grid(1, 16, 0.2))));
}

TEST(Seminorm, NFormOfGaussianPeak) {
    const auto g = TestFunctionSpec::gaussian({0.05}, 1.0);
    EXPECT_DOUBLE_EQ(squeezed_seminorm_N(g, 0, kAlpha0, lc_grid(1, 64, 0.1)), 1.0);
}

// sup_t e^{-1/t^2 - t^2} / t^4 by a fine one-dimensional scan.
TEST(Seminorm, FlatAtZeroMatchesScan) {
    const auto f = TestFunctionSpec::flat_at_zero(TestFunctionSpec::gaussian({0.0}, std::sqrt(0.5)), 0, 1.0);
    const auto ladder = refinement_ladder(lc_grid(1, 64, 0.125));
    const auto cert = ladder_certificate(ladder, [&](const Grid& g) { return squeezed_seminorm(f, -4, kNoBeta1, kAlpha0, g); });
    EXPECT_TRUE(cert.bounded);
    double scan = 0.0;
    for (int i = 1; i <= 400000; ++i) {
        const double t = i * 1e-5;
        scan = std::max(scan, std::exp(-1.0 / (t * t) - t * t) / std::pow(t, 4));
    }
    EXPECT_NEAR(cert.values.back(), scan, 1e-5 * scan);
    EXPECT_LE(cert.values.back(), scan * (1 + 1e-12));
}

TEST(Seminorm, FlatAtZeroNFormFinite) {
    const auto f = TestFunctionSpec::flat_at_zero(TestFunctionSpec::gaussian({0.0}, 1.0), 0, 1.0);
    const auto ladder = refinement_ladder(lc_grid(1, 64, 0.125));
    for (int N = 0; N <= 8; ++N) {
        const auto cert = ladder_certificate(ladder, [&](const Grid& g) { return squeezed_seminorm_N(f, N, kAlpha0, g); });
        EXPECT_TRUE(cert.bounded) << "N=" << N;
    }
}

TEST(Seminorm, PlainGaussianDiverges) {
    const auto g = TestFunctionSpec::gaussian({0.0}, 1.0);
    const auto ladder = refinement_ladder(lc_grid(1, 64, 0.125));
    const auto cert = ladder_certificate(ladder, [&](const Grid& gr) { return squeezed_seminorm(g, -1, kNoBeta1, kAlpha0, gr); });
    EXPECT_TRUE(cert.divergent);
    EXPECT_GE(cert.min_growth, 10.0);
    // sup ~ 1/(step/2) at the innermost node
    EXPECT_NEAR(cert.values.back(), 2.0 / ladder.back().axes[0].step, 1e-3 * cert.values.back());
    EXPECT_FALSE(filtration_check(g, 1, ladder));
}

TEST(Seminorm, PullbackPassesAllOrders) {
    for (int n = 1; n <= 2; ++n) {
        for (Sheet s : {Sheet::plus, Sheet::minus}) {
            const auto f = TestFunctionSpec::pullback(s, TestFunctionSpec::gaussian(std::vector<double>(n, 0.0), 1.0), 1.0);
            const Grid base = n == 1 ? lc_grid(1, 600, 0.02)
                                     : make_grid(ModelParams::make(1.0, 2), GridKind::lc_momentum,
                                                 {AxisSpec::half_step(0.02, 600), AxisSpec::centered(1.0, 9)});
            const auto ladder = refinement_ladder(base);
            for (int k = -8; k <= 8; k += 4) {
                for (int a0 = 0; a0 <= 2; ++a0) {
                    std::vector<int> alpha(n, 0), beta(n - 1, 0);
                    alpha[0] = a0;
                    if (n == 2) beta[0] = 2;
                    const auto cert = ladder_certificate(
                        ladder, [&](const Grid& g) { return squeezed_seminorm(f, k, beta, alpha, g); });
                    EXPECT_TRUE(cert.bounded) << "n=" << n << " k=" << k << " a0=" << a0 << " growth " << cert.max_growth;
                }
            }
        }
    }
}

TEST(Seminorm, MonotoneAlongLadder) {
    for (int trial = 0; trial < 10; ++trial) {
        const auto f = TestFunctionSpec::gauss_hermite(uniform_vec(1, -1, 1), uniform(0.3, 2.0), {trial % 3});
        const int k = static_cast<int>(uniform(-3, 3));
        const auto ladder = refinement_ladder(lc_grid(1, 32, 0.2));
        const auto cert = ladder_certificate(ladder, [&](const Grid& g) { return squeezed_seminorm(f, k, kNoBeta1, kAlpha0, g); });
        for (std::size_t l = 1; l < cert.values.size(); ++l) EXPECT_GE(cert.values[l], cert.values[l - 1]);
    }
}

TEST(Seminorm, FlatAtZeroFiltration) {
    const auto f = TestFunctionSpec::flat_at_zero(TestFunctionSpec::gaussian({0.0}, 1.0), 0, 1.0);
    const auto ladder = refinement_ladder(lc_grid(1, 64, 0.125));
    for (int k = 0; k <= 8; ++k) EXPECT_TRUE(filtration_check(f, k, ladder)) << k;
}

TEST(Seminorm, HighOrderNeedsFallback) {
    const auto g = TestFunctionSpec::gaussian({0.0}, 1.0);
    const std::vector<int> a3{3};
    EXPECT_THROW(squeezed_seminorm(g, 0, kNoBeta1, a3, lc_grid(1, 16, 0.2)), DomainError);
    EXPECT_NO_THROW(squeezed_seminorm(g, 0, kNoBeta1, a3, lc_grid(1, 16, 0.2), true));
}

TEST(Multiplicator, Examples) {
    const Grid g = make_grid(ModelParams::make(1.0, 2), GridKind::lc_momentum,
                             {AxisSpec::half_step(0.01, 400), AxisSpec::centered(0.5, 21)});
    const std::vector<int> a0{0, 0};
    EXPECT_TRUE(multiplicator_check(theta_multiplier(Sheet::plus), a0, 0, 1.0, g).pass);
    EXPECT_TRUE(multiplicator_check(theta_multiplier(Sheet::minus), a0, 0, 1.0, g).pass);
    EXPECT_TRUE(multiplicator_check(inverse_p_plus_multiplier(), a0, 1, 1.0, g).pass);
    const auto bad = multiplicator_check(inverse_p_plus_multiplier(), a0, 0, 1.0, g);
    EXPECT_FALSE(bad.pass);
    EXPECT_NEAR(std::abs(bad.worst_node[0]), 0.005, 1e-12);
    for (int k = -3; k <= 3; ++k) {
        const int N = k < 0 ? -k : 0;
        const double C = k > 0 ? std::pow(2.0, k) : 1.0;
        EXPECT_TRUE(multiplicator_check(p_plus_power_multiplier(k), a0, N, C, g).pass) << k;
    }
}

TEST(Multiplicator, LightConeEnergy) {
    const Grid small = make_grid(ModelParams::make(1.0, 2), GridKind::lc_momentum,
                                 {AxisSpec::half_step(0.25, 16), AxisSpec::centered(0.25, 17)});
    const std::vector<int> a0{0, 0};
    EXPECT_TRUE(multiplicator_check(lc_omega_multiplier(1.0), a0, 2, 1.0, small).pass);
    const Grid wide = make_grid(ModelParams::make(1.0, 2), GridKind::lc_momentum,
                                {AxisSpec::half_step(0.25, 16), AxisSpec::centered(2.0, 41)});
    EXPECT_FALSE(multiplicator_check(lc_omega_multiplier(1.0), a0, 1, 1.0, wide).pass);
}

TEST(Multiplicator, DerivativesMatchDifferences) {
    const Multiplier ms[] = {p_plus_power_multiplier(-2), p_plus_power_multiplier(3), inverse_p_plus_multiplier(),
                             lc_omega_multiplier(1.3)};
    for (const auto& M : ms) {
        for (int trial = 0; trial < 20; ++trial) {
            const auto pt = random_lc(2, 2.0);
            for (int d = 0; d < 2; ++d) {
                std::vector<int> a(2, 0);
                a[d] = 1;
                const double h = 1e-5 * std::max(1.0, std::abs(pt[d]));
                auto at = [&](double s) {
                    auto q = pt;
                    q[d] += s;
                    return M(std::vector<int>{0, 0}, q);
                };
                const cplx fd = (at(h) - at(-h)) / (2 * h);
                const cplx ex = M(a, pt);
                EXPECT_NEAR(std::abs(fd - ex), 0.0, 1e-5 * (1 + std::abs(ex)));
            }
        }
    }
}
