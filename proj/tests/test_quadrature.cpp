#include <gtest/gtest.h>

#include <cmath>
#include <cstring>

#include "charcone/parallel.hpp"
#include "charcone/quadrature.hpp"
#include "charcone/testfn.hpp"
#include "support.hpp"

using namespace charcone;
using namespace testing_support;

namespace {

const double kPi = std::acos(-1.0);

struct ThreadGuard {
    ~ThreadGuard() { set_thread_count(0); }
};

// ∫ dp+ dp_perp / (2|p+|) g  with  p+ = ±e^s:  ∫ ds dp_perp g / 2.
template <class G>
cplx log_coordinate_lc(const G& g, int n, double sign) {
    auto inner = [&](double s) -> cplx {
        const double pp = sign * std::exp(s);
        if (n == 1) return 0.5 * g(std::vector<double>{pp});
        return 0.5 * trapezoid([&](double q) { return g(std::vector<double>{pp, q}); }, -12.0, 12.0, 400);
    };
    return trapezoid(inner, -40.0, 6.0, n == 1 ? 20000 : 2500);
}

}  // namespace

TEST(Quadrature, GaussianMoments) {
    QuadOptions q;
    q.level = 6;
    for (int n = 1; n <= 3; ++n) {
        const auto r = integrate_rn(
            [](std::span<const double> x) {
                double s = 0;
                for (double v : x) s += v * v;
                return cplx(std::exp(-s) * (1.0 + x[0] * x[0]));
            },
            n, q);
        const double expect = std::pow(std::sqrt(kPi), n) * 1.5;
        EXPECT_NEAR(r.value.real(), expect, 1e-13 * expect);
        EXPECT_LT(r.error_estimate, 1e-12);
        EXPECT_EQ(r.level, 6);
    }
}

TEST(Quadrature, LinearRuleIsExactOnPolynomials) {
    const AxisRule r = linear_rule(2, -1.0, 3.0);
    EXPECT_EQ(r.size(), 64u);
    for (int deg = 0; deg <= 31; ++deg) {
        double s = 0.0;
        for (std::size_t i = 0; i < r.size(); ++i) s += r.weights[i] * std::pow(r.nodes[i], deg);
        const double expect = (std::pow(3.0, deg + 1) - std::pow(-1.0, deg + 1)) / (deg + 1);
        EXPECT_NEAR(s, expect, 1e-12 * std::max(1.0, std::abs(expect)));
    }
}

TEST(Quadrature, TanhRuleIsSymmetric) {
    const AxisRule r = tanh_rule(3, 7.0);
    ASSERT_EQ(r.size(), 128u);
    for (std::size_t i = 0; i < r.size(); ++i) {
        EXPECT_EQ(r.nodes[i], -r.nodes[r.size() - 1 - i]);
        EXPECT_GT(r.weights[i], 0.0);
    }
    EXPECT_LE(r.nodes.back(), 7.0);
}

TEST(Quadrature, BitIdenticalAcrossThreadCounts) {
    ThreadGuard guard;
    const auto f = TestFunctionSpec::gauss_hermite({0.1, 0.2, -0.3}, 0.9, {1, 2, 0}, {0.4, 0.0, 1.0});
    QuadOptions q;
    q.level = 3;
    std::vector<cplx> values;
    for (int t : {1, 2, 3, 5}) {
        set_thread_count(t);
        values.push_back(integrate_rn([&](std::span<const double> x) { return f(x); }, 3, q).value);
    }
    for (const auto& v : values) EXPECT_EQ(std::memcmp(&v, &values[0], sizeof(cplx)), 0);
}

TEST(Quadrature, RejectsBadInput) {
    QuadOptions q;
    q.level = 0;
    EXPECT_THROW(integrate_rn([](std::span<const double>) { return cplx(1.0); }, 1, q), DomainError);
    q.level = 3;
    EXPECT_THROW(integrate_rn([](std::span<const double>) { return cplx(NAN); }, 1, q), NumericalError);
}

TEST(Pairing, MinkowskiAgainstTrapezoid) {
    const ModelParams P = ModelParams::make(0.8, 1);
    const auto a = TestFunctionSpec::gaussian({0.3}, 1.2);
    const auto f = TestFunctionSpec::gauss_hermite({0.5, -0.2}, 1.1, {1, 0});
    QuadOptions q;
    q.level = 6;
    for (Sheet s : {Sheet::plus, Sheet::minus}) {
        const auto r = pair_minkowski_delta([&](std::span<const double> p) { return a(p); },
                                            [&](std::span<const double> k) { return f(k); }, s, P, q);
        const cplx oracle = trapezoid(
            [&](double p) {
                const double w = std::sqrt(p * p + P.m * P.m);
                return a(std::vector<double>{p}) * f(std::vector<double>{sheet_sign(s) * w, p}) / (2 * w);
            },
            -20.0, 20.0, 4000);
        EXPECT_NEAR(std::abs(r.value - oracle), 0.0, 1e-12);
    }
}

// The library evaluates light-cone pairings through the squeezing map; the
// oracle integrates directly in logarithmic p+ coordinates.
TEST(Pairing, LightConeAgainstLogCoordinates) {
    for (int n = 1; n <= 2; ++n) {
        const ModelParams P = ModelParams::make(1.3, n);
        const auto b = TestFunctionSpec::gaussian(std::vector<double>(n, 0.2), 1.0);
        const auto f = TestFunctionSpec::gaussian(std::vector<double>(n + 1, -0.1), 1.4);
        QuadOptions q;
        q.level = n == 1 ? 7 : 5;
        for (LCSide side : {LCSide::plus, LCSide::minus}) {
            const auto r = pair_lc_delta([&](std::span<const double> pt) { return b(pt); },
                                         [&](std::span<const double> k) { return f(k); }, side, P, q);
            const double sign = side == LCSide::plus ? 1.0 : -1.0;
            const cplx oracle = log_coordinate_lc(
                [&](const std::vector<double>& pt) {
                    std::vector<double> lift(n + 1);
                    lc_omega_lift(pt, P.m, lift);
                    return b(pt) * f(lift);
                },
                n, sign);
            EXPECT_NEAR(std::abs(r.value - oracle), 0.0, 1e-10 * std::abs(oracle)) << "n=" << n;
        }
    }
}

// <a δ±, f∘κ> = <Θ(±p+) (a∘ν±) δ~, f>, both sides evaluated independently.
TEST(Pairing, TransformationIdentityOneDimension) {
    for (int trial = 0; trial < 10; ++trial) {
        const double m = uniform(0.5, 2.0);
        const ModelParams P = ModelParams::make(m, 1);
        const auto a = TestFunctionSpec::gaussian(uniform_vec(1, -1, 1), uniform(0.6, 1.5));
        const auto f = TestFunctionSpec::gaussian(uniform_vec(2, -1, 1), uniform(0.6, 1.5));
        QuadOptions q;
        q.level = 7;
        for (Sheet s : {Sheet::plus, Sheet::minus}) {
            const auto lhs = pair_minkowski_delta(
                [&](std::span<const double> p) { return a(p); },
                [&](std::span<const double> k) {
                    std::vector<double> kk(2);
                    kappa(k, kk);
                    return f(kk);
                },
                s, P, q);
            const auto pb = TestFunctionSpec::pullback(s, a, m);
            const cplx rhs = log_coordinate_lc(
                [&](const std::vector<double>& pt) {
                    std::vector<double> lift(2);
                    lc_omega_lift(pt, m, lift);
                    return pb(pt) * f(lift);
                },
                1, sheet_sign(s));
            EXPECT_NEAR(std::abs(lhs.value - rhs), 0.0, 1e-9 * std::abs(lhs.value));
        }
    }
}
