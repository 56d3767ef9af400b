#include <gtest/gtest.h>

#include <cmath>

#include "charcone/error.hpp"
#include "charcone/pauli_jordan.hpp"
#include "support.hpp"

using namespace charcone;
using namespace testing_support;

namespace {

const double kPi = std::acos(-1.0);

// -2 x- e^{-x-^2} times e^{-|x_perp|^2}
TestFunctionSpec probe(int n) {
    std::vector<int> poly(n, 0);
    poly[0] = 1;
    return TestFunctionSpec::scaled(-2.0, TestFunctionSpec::gauss_hermite(std::vector<double>(n, 0.0), std::sqrt(0.5), poly));
}

QuadOptions opts(int level) {
    QuadOptions q;
    q.level = level;
    return q;
}

}  // namespace

TEST(PauliJordan, CharacteristicData) {
    const CharacteristicData d = pj_characteristic_data(ModelParams::make(2.0, 3));
    for (int trial = 0; trial < 20; ++trial) {
        const auto pt = random_lc(3);
        EXPECT_EQ(d.u0_lc_hat(pt), cplx(0, 1) / (2 * pt[0]));
    }
}

TEST(PauliJordan, OneDimensionalExampleBothRoutes) {
    for (double m : {0.5, 1.0, 2.0}) {
        const ModelParams P = ModelParams::make(m, 1);
        const cplx eq = pj_pairing_quadrature(probe(1), P, opts(7)).value;
        const cplx cf = pj_pairing_closed_form(probe(1), P, opts(7)).value;
        EXPECT_NEAR(std::abs(eq - cplx(-0.5)), 0.0, 1e-8) << m;
        EXPECT_NEAR(std::abs(cf - cplx(-0.5)), 0.0, 1e-8) << m;
    }
}

// The probe's transform written out by hand: f^(p) = -i p sqrt(π) e^{-p^2/4}.
TEST(PauliJordan, MomentumRouteWithHandTransform) {
    const ModelParams P = ModelParams::make(1.0, 1);
    const Density fh = Density::from_function(1, [](std::span<const double> p) {
        return cplx(0, -p[0] * std::sqrt(kPi)) * std::exp(-p[0] * p[0] / 4);
    });
    QuadOptions q = opts(7);
    q.sigma_max = 2.0;
    EXPECT_NEAR(std::abs(pj_pairing_quadrature_hat(fh, P, q).value - cplx(-0.5)), 0.0, 1e-10);
}

TEST(PauliJordan, ClosedFormAgainstTrapezoid) {
    const auto f = TestFunctionSpec::gauss_hermite({0.4, 0.2}, 0.7, {2, 0}, {0.3, 0.0});
    const ModelParams P = ModelParams::make(1.0, 2);
    const cplx oracle = 0.25 * trapezoid(
                                   [&](double x) {
                                       const double s = x > 0 ? 1.0 : (x < 0 ? -1.0 : 0.0);
                                       return s * f(std::vector<double>{x, 0.0});
                                   },
                                   -20.0, 20.0, 400000);
    EXPECT_NEAR(std::abs(pj_pairing_closed_form(f, P, opts(7)).value - oracle), 0.0, 1e-8);
}

TEST(PauliJordan, HigherDimensionsAgreeAcrossRoutes) {
    for (int n = 2; n <= 3; ++n) {
        const ModelParams P = ModelParams::make(1.0, n);
        const cplx eq = pj_pairing_quadrature(probe(n), P, opts(n == 2 ? 6 : 4)).value;
        const cplx cf = pj_pairing_closed_form(probe(n), P, opts(7)).value;
        EXPECT_NEAR(std::abs(eq - cf), 0.0, 1e-6) << n;
        EXPECT_NEAR(std::abs(cf - cplx(-0.5)), 0.0, 1e-8) << n;
    }
}

TEST(PauliJordan, PipelineThroughCharacteristicSolve) {
    for (double m : {0.5, 2.0}) {
        const ModelParams P = ModelParams::make(m, 1);
        const cplx v = pj_pairing_pipeline(probe(1), P, opts(7)).value;
        EXPECT_NEAR(std::abs(v - cplx(-0.5)), 0.0, 1e-8) << m;
    }
}

TEST(PauliJordan, EvenProbesGiveZero) {
    const ModelParams P = ModelParams::make(1.0, 1);
    const auto g = TestFunctionSpec::gaussian({0.0}, 1.0);
    EXPECT_NEAR(std::abs(pj_pairing_closed_form(g, P, opts(6)).value), 0.0, 1e-14);
    EXPECT_NEAR(std::abs(pj_pairing_quadrature(g, P, opts(6)).value), 0.0, 1e-14);
}

TEST(PauliJordan, NeedsClosedFormTransform) {
    const ModelParams P = ModelParams::make(1.0, 1);
    const auto f = TestFunctionSpec::flat_at_zero(TestFunctionSpec::gaussian({0.0}, 1.0), 0, 1.0);
    EXPECT_THROW(pj_pairing_quadrature(f, P, opts(5)), DomainError);
}
