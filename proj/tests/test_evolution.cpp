#include <gtest/gtest.h>

#include <cmath>
#include <cstring>

#include "charcone/error.hpp"
#include "charcone/evolution.hpp"
#include "support.hpp"

using namespace charcone;
using namespace testing_support;

namespace {

CauchyData gaussian_data(const ModelParams& P) {
    std::vector<int> poly(P.n, 0);
    poly[0] = 1;
    return {Density::from_spec(TestFunctionSpec::gaussian(std::vector<double>(P.n, 0.0), 1.0)),
            Density::from_spec(TestFunctionSpec::gauss_hermite(std::vector<double>(P.n, 0.0), 1.0, poly)), P};
}

bool bitwise_equal(const GridFunction& a, const GridFunction& b) {
    return a.grid() == b.grid() && std::memcmp(a.values().data(), b.values().data(), a.size() * sizeof(cplx)) == 0;
}

double kg_at(double h, std::size_t count) {
    const ModelParams P = ModelParams::make(1.0, 1);
    const MassShellDensityM msd = from_cauchy(gaussian_data(P));
    const Grid x = make_grid(P, GridKind::minkowski_position, {AxisSpec::centered(h, count)});
    // Centred on a fixed x0 so every resolution samples the same time.
    std::vector<double> times;
    for (int i = -2; i <= 2; ++i) times.push_back(0.6 + i * h);
    return kg_residual(msd, x, times).relative;
}

}  // namespace

// u^(t) = cos(ωt) u0^ + sin(ωt)/ω u1^ solves the mode equation exactly.
TEST(Evolution, MatchesHarmonicOscillator) {
    for (int n = 1; n <= 3; ++n) {
        const ModelParams P = ModelParams::make(0.8, n);
        const CauchyData d = gaussian_data(P);
        const MassShellDensityM msd = from_cauchy(d);
        for (int trial = 0; trial < 100; ++trial) {
            const auto p = uniform_vec(n, -3, 3);
            const double t = uniform(-5, 5);
            const double w = omega(std::span<const double>(p), P.m);
            const cplx u0 = d.u0_hat(p), u1 = d.u1_hat(p);
            const cplx u = std::cos(w * t) * u0 + std::sin(w * t) / w * u1;
            const cplx du = -w * std::sin(w * t) * u0 + std::cos(w * t) * u1;
            ASSERT_NEAR(std::abs(evolve_value(msd, t, p) - u), 0.0, 1e-13);
            ASSERT_NEAR(std::abs(d0_value(msd, t, p) - du), 0.0, 1e-13);
        }
    }
}

TEST(Evolution, InitialSliceReproducesData) {
    const ModelParams P = ModelParams::make(1.0, 1);
    const CauchyData d = gaussian_data(P);
    const MassShellDensityM msd = from_cauchy(d);
    const Grid g = uniform_grid(P, GridKind::minkowski_momentum, 1024, 0.02);
    const EvolvedProfile u = evolve_profile(msd, 0.0, g);
    const EvolvedProfile du = d0_profile(msd, 0.0, g);
    EXPECT_EQ(u.frame, Frame::minkowski);
    EXPECT_LE(relative_sup_error(u.profile.values(), d.u0_hat.sample(g).values()), 1e-13);
    EXPECT_LE(relative_sup_error(du.profile.values(), d.u1_hat.sample(g).values()), 1e-13);
}

TEST(Evolution, GridlessProfileNeedsGridDensity) {
    const ModelParams P = ModelParams::make(1.0, 1);
    EXPECT_THROW(evolve_profile(from_cauchy(gaussian_data(P)), 0.0), DomainError);
}

TEST(Tame, PhaseAndRestriction) {
    const ModelParams P = ModelParams::make(1.0, 2);
    const MassShellDensityLC lc = lc_from_m(from_cauchy(gaussian_data(P)));
    for (int trial = 0; trial < 100; ++trial) {
        const auto pt = random_lc(2, 2.0);
        const double xp = uniform(-3, 3);
        const cplx beta = lc.beta()(pt);
        EXPECT_EQ(tame_value(lc, 0.0, pt), beta);
        const cplx expect = std::exp(cplx(0, -lc_omega(std::span<const double>(pt), P.m) * xp)) * beta;
        EXPECT_NEAR(std::abs(tame_value(lc, xp, pt) - expect), 0.0, 1e-15 + 1e-13 * std::abs(beta));
    }
}

TEST(Tame, DerivativeInXPlus) {
    const ModelParams P = ModelParams::make(1.0, 1);
    const Grid g = uniform_grid(P, GridKind::lc_momentum, 512, 0.05);
    // The central difference is off by a relative (w~ h)^2 / 6, so the data
    // are chosen with little weight where w~ > 2.
    const CauchyData d{Density::from_spec(TestFunctionSpec::gaussian({0.0}, 0.5)), Density::zero(1), P};
    const MassShellDensityLC lc = lc_from_m(from_cauchy(d), g);
    const double h = 1e-3;
    for (double xp : {0.0, 0.7}) {
        const GridFunction up = tame_profile(lc, xp + h).profile;
        const GridFunction dn = tame_profile(lc, xp - h).profile;
        const GridFunction mid = tame_profile(lc, xp).profile;
        std::vector<cplx> fd(g.size()), exact(g.size());
        for (std::size_t i = 0; i < g.size(); ++i) {
            std::vector<double> pt(1);
            g.node(i, pt);
            fd[i] = (up[i] - dn[i]) / (2 * h);
            exact[i] = cplx(0, -lc_omega(std::span<const double>(pt), P.m)) * mid[i];
        }
        EXPECT_LE(relative_sup_error(fd, exact), 1e-6);
    }
}

TEST(Characteristic, RoundTripsAreBitwise) {
    for (int n = 1; n <= 3; ++n) {
        const ModelParams P = ModelParams::make(1.3, n);
        const Grid g = uniform_grid(P, GridKind::lc_momentum, n == 1 ? 256 : 12, 0.15);
        std::vector<cplx> v(g.size());
        for (auto& x : v) x = {uniform(-1, 1) * std::exp(uniform(-20, 20)), uniform(-1, 1)};
        const CharacteristicData data{Density::from_grid(GridFunction(g, v)), P};
        const CharacteristicData again = tame_restrict(solve_characteristic(data));
        EXPECT_TRUE(bitwise_equal(again.u0_lc_hat.grid_function(), data.u0_lc_hat.grid_function()));

        const MassShellDensityLC msd = lc_from_m(from_cauchy(gaussian_data(P)), g);
        const MassShellDensityLC back = solve_characteristic(tame_restrict(msd));
        EXPECT_TRUE(bitwise_equal(back.beta().grid_function(), msd.beta().grid_function()));
        EXPECT_TRUE(bitwise_equal(back.b_density().grid_function(), msd.b_density().grid_function()));
    }
}

TEST(KleinGordon, ResidualConvergesAtSecondOrder) {
    double prev = kg_at(0.05, 512);
    for (int k = 1; k <= 3; ++k) {
        const double h = 0.05 / std::pow(2.0, k);
        const double cur = kg_at(h, static_cast<std::size_t>(512) << k);
        EXPECT_GE(std::log2(prev / cur), 1.9) << "h=" << h;
        prev = cur;
    }
}

TEST(KleinGordon, Preconditions) {
    const ModelParams P = ModelParams::make(1.0, 1);
    const MassShellDensityM msd = from_cauchy(gaussian_data(P));
    const Grid x = make_grid(P, GridKind::minkowski_position, {AxisSpec::centered(0.1, 64)});
    EXPECT_THROW(kg_residual(msd, x, {0.0, 0.1, 0.2, 0.3}), DomainError);
    EXPECT_THROW(kg_residual(msd, x, {0.0, 0.1, 0.2, 0.3, 0.5}), DomainError);
    const KgResidual z = kg_residual(from_cauchy({Density::zero(1), Density::zero(1), P}), x, {0, 0.1, 0.2, 0.3, 0.4});
    EXPECT_TRUE(z.degenerate);
    EXPECT_EQ(z.relative, 0.0);
}
