#include <gtest/gtest.h>

#include <Eigen/Dense>
#include <cmath>

#include "charcone/error.hpp"
#include "charcone/evolution.hpp"
#include "charcone/transform.hpp"
#include "support.hpp"

using namespace charcone;
using namespace testing_support;

namespace {

const double kPi = std::acos(-1.0);

GridFunction sampled(const TestFunctionSpec& f, const Grid& g) { return Density::from_spec(f).sample(g); }

GridFunction random_function(const Grid& g) {
    std::vector<cplx> v(g.size());
    for (auto& x : v) x = {uniform(-1, 1), uniform(-1, 1)};
    return GridFunction(g, std::move(v));
}

CauchyData gaussian_data(const ModelParams& P, double shift = 0.0) {
    std::vector<int> poly(P.n, 0);
    poly[0] = 1;
    return {Density::from_spec(TestFunctionSpec::gaussian(std::vector<double>(P.n, 0.1 + shift), 1.0)),
            Density::from_spec(TestFunctionSpec::gauss_hermite(std::vector<double>(P.n, -0.2), 0.8 + shift, poly)), P};
}

}  // namespace

TEST(Dft, GaussianMatchesClosedForm) {
    const ModelParams P = ModelParams::make(1.0, 1);
    const auto g = TestFunctionSpec::gaussian({0.0}, 1.0);
    const Grid x = uniform_grid(P, GridKind::minkowski_position, 256, 0.1);
    const GridFunction t = dft(sampled(g, x), TransformConvention::euclid);
    const GridFunction e = sampled(*fourier_exact(g), t.grid());
    EXPECT_LE(relative_sup_error(t.values(), e.values()), 1e-9);
    EXPECT_NEAR(t.grid().axes[0].step, 2 * kPi / 25.6, 1e-15);
}

TEST(Dft, PlaneWavePeaksAtPlusQ) {
    const ModelParams P = ModelParams::make(1.0, 1);
    const Grid x = uniform_grid(P, GridKind::minkowski_position, 128, 0.25);
    const Grid p = reciprocal_grid(x, TransformConvention::euclid);
    const double q = p.axes[0].node(70);
    std::vector<cplx> v(x.size());
    for (std::size_t j = 0; j < v.size(); ++j) v[j] = std::exp(cplx(0, q * x.axes[0].node(j)));
    const GridFunction t = dft(GridFunction(x, v), TransformConvention::euclid);
    std::size_t best = 0;
    for (std::size_t j = 0; j < t.size(); ++j)
        if (std::abs(t[j]) > std::abs(t[best])) best = j;
    EXPECT_EQ(best, 70u);
}

TEST(Dft, ForwardThenInverseIsIdentity) {
    for (int n = 1; n <= 3; ++n) {
        const ModelParams P = ModelParams::make(1.0, n);
        const std::size_t count = n == 1 ? 64 : (n == 2 ? 16 : 8);
        const Grid xm = uniform_grid(P, GridKind::minkowski_position, count, 0.3);
        const GridFunction f = random_function(xm);
        const GridFunction back = dft(dft(f, TransformConvention::euclid), TransformConvention::euclid_inverse);
        EXPECT_EQ(back.grid(), xm);
        EXPECT_LE(relative_sup_error(back.values(), f.values()), 1e-12);

        const Grid xl = uniform_grid(P, GridKind::lc_position, count, 0.3);
        const GridFunction g = random_function(xl);
        const GridFunction fw = dft(g, TransformConvention::partial_lc);
        EXPECT_EQ(fw.grid().kind, GridKind::lc_momentum);
        EXPECT_EQ(fw.grid().axes[0].offset, AxisOffset::half_step);
        const GridFunction bk = dft(fw, TransformConvention::partial_lc_inverse);
        EXPECT_EQ(bk.grid(), xl);
        EXPECT_LE(relative_sup_error(bk.values(), g.values()), 1e-12);
    }
}

// f^^ = (2π)^n f(-x) on nodes whose mirror image is also a node.
TEST(Dft, InversionFormula) {
    for (int n = 1; n <= 2; ++n) {
        const ModelParams P = ModelParams::make(1.0, n);
        const Grid x = uniform_grid(P, GridKind::minkowski_position, n == 1 ? 33 : 17, 0.4);
        const GridFunction f = random_function(x);
        const GridFunction tt = dft(dft(f, TransformConvention::euclid), TransformConvention::euclid);
        ASSERT_EQ(tt.grid(), x);
        const double scale = std::pow(2 * kPi, n);
        double err = 0.0;
        for (std::size_t i = 0; i < x.size(); ++i) {
            const std::size_t mirror = x.size() - 1 - i;  // odd counts: exact reflection
            err = std::max(err, std::abs(tt[i] - scale * f[mirror]));
        }
        EXPECT_LE(err, 1e-11 * scale * max_abs(f.values()));
    }
}

TEST(Dft, PartialLightConeMatchesClosedForm) {
    for (int n = 1; n <= 2; ++n) {
        const ModelParams P = ModelParams::make(1.0, n);
        std::vector<int> poly(n, 0);
        poly[0] = 1;
        const auto f = TestFunctionSpec::gauss_hermite(std::vector<double>(n, 0.3), 0.9, poly);
        const Grid x = uniform_grid(P, GridKind::lc_position, n == 1 ? 256 : 64, 0.25);
        const GridFunction t = dft(sampled(f, x), TransformConvention::partial_lc);
        const GridFunction e = sampled(*fourier_exact(f, TransformConvention::partial_lc), t.grid());
        EXPECT_LE(relative_sup_error(t.values(), e.values()), 1e-9) << "n=" << n;
    }
}

TEST(Dft, RejectsWrongGrids) {
    const ModelParams P = ModelParams::make(1.0, 1);
    const Grid x = uniform_grid(P, GridKind::minkowski_position, 16, 0.5);
    EXPECT_THROW(reciprocal_grid(x, TransformConvention::partial_lc), DomainError);
    EXPECT_THROW(reciprocal_grid(x, TransformConvention::lc_full), DomainError);
    EXPECT_THROW(dft(GridFunction::zeros(x), TransformConvention::minkowski_full), DomainError);
}

TEST(Convert, PauliJordanData) {
    const ModelParams P = ModelParams::make(1.0, 2);
    const CharacteristicData ch = convert_m_to_lc(CauchyData{Density::zero(2), Density::constant(2, 1.0), P});
    for (int trial = 0; trial < 50; ++trial) {
        const auto pt = random_lc(2);
        EXPECT_NEAR(std::abs(ch.u0_lc_hat(pt) - cplx(0, 0.5 / pt[0])), 0.0, 1e-15 / std::abs(pt[0]));
    }
    const CauchyData back = convert_lc_to_m(ch);
    for (int trial = 0; trial < 50; ++trial) {
        const auto p = uniform_vec(2, -5, 5);
        EXPECT_NEAR(std::abs(back.u0_hat(p)), 0.0, 1e-15);
        EXPECT_NEAR(std::abs(back.u1_hat(p) - 1.0), 0.0, 1e-15);
    }
    const CauchyData zero = convert_lc_to_m(CharacteristicData{Density::zero(2), P});
    EXPECT_EQ(zero.u0_hat(std::vector<double>{0.3, 0.1}), cplx(0.0));
}

TEST(Convert, AgreesWithMassShellRoute) {
    for (int n = 1; n <= 3; ++n) {
        const ModelParams P = ModelParams::make(0.9, n);
        const CauchyData d = gaussian_data(P);
        const CharacteristicData direct = convert_m_to_lc(d);
        const CharacteristicData via = tame_restrict(lc_from_m(from_cauchy(d)));
        for (int trial = 0; trial < 200; ++trial) {
            const auto pt = random_lc(n);
            const cplx a = direct.u0_lc_hat(pt), b = via.u0_lc_hat(pt);
            ASSERT_NEAR(std::abs(a - b), 0.0, 1e-10 * std::max(std::abs(b), 1e-300) + 1e-300);
        }
    }
}

TEST(Convert, RoundTripOnGaussianData) {
    for (int n = 1; n <= 3; ++n) {
        const ModelParams P = ModelParams::make(1.1, n);
        const CauchyData d = gaussian_data(P);
        const CauchyData back = convert_lc_to_m(convert_m_to_lc(d));
        for (int trial = 0; trial < 200; ++trial) {
            const auto p = uniform_vec(n, -4, 4);
            ASSERT_NEAR(std::abs(back.u0_hat(p) - d.u0_hat(p)), 0.0, 1e-12);
            ASSERT_NEAR(std::abs(back.u1_hat(p) - d.u1_hat(p)), 0.0, 1e-12);
        }
    }
}

TEST(Convert, GridOverloadSamplesClosure) {
    const ModelParams P = ModelParams::make(1.0, 1);
    const CauchyData d = gaussian_data(P);
    const Grid lc = uniform_grid(P, GridKind::lc_momentum, 128, 0.1);
    const GridFunction a = convert_m_to_lc(d, lc).u0_lc_hat.grid_function();
    const GridFunction b = convert_m_to_lc(d).u0_lc_hat.sample(lc);
    EXPECT_LE(max_abs_diff(a.values(), b.values()), 1e-13 * max_abs(b.values()));
}

// Distinct Cauchy data give linearly independent characteristic data.
TEST(Convert, InjectiveOnSampleFamily) {
    const ModelParams P = ModelParams::make(1.0, 1);
    const Grid lc = uniform_grid(P, GridKind::lc_momentum, 256, 0.05);
    std::vector<GridFunction> rows;
    for (int k = 0; k < 5; ++k) rows.push_back(convert_m_to_lc(gaussian_data(P, 0.15 * k), lc).u0_lc_hat.grid_function());
    Eigen::MatrixXcd gram(5, 5);
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j) {
            cplx s = 0;
            for (std::size_t q = 0; q < lc.size(); ++q) s += std::conj(rows[i][q]) * rows[j][q];
            gram(i, j) = s;
        }
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(gram);
    const auto sv = svd.singularValues();
    EXPECT_GT(sv(4) / sv(0), 1e-12);
}
