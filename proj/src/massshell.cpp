#include "charcone/massshell.hpp"

#include <cmath>
#include <numbers>

#include "charcone/error.hpp"

namespace charcone {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

void check_dim(const Density& d, const ModelParams& params, const char* what) {
    if (d.dim() != params.n)
        throw DomainError(std::string(what) + ": density dimension " + std::to_string(d.dim()) + " != n = " +
                          std::to_string(params.n));
}

Sheet sheet_of(double p_plus) {
    if (p_plus == 0.0) throw DomainError("p+ = 0 lies on neither half-space");
    return p_plus > 0.0 ? Sheet::plus : Sheet::minus;
}

}  // namespace

double lc_weight(double p_plus) { return 4.0 * std::numbers::pi * std::abs(p_plus); }

MassShellDensityLC MassShellDensityLC::from_b(const Density& b, const ModelParams& params) {
    params.validate();
    check_dim(b, params, "MassShellDensityLC");
    return from_beta(map(b, [](std::span<const double> pt, cplx v) { return v / lc_weight(pt[0]); }), params);
}

MassShellDensityLC MassShellDensityLC::from_beta(Density beta, const ModelParams& params) {
    params.validate();
    check_dim(beta, params, "MassShellDensityLC");
    if (beta.is_grid() && beta.grid_function().grid().kind != GridKind::lc_momentum)
        throw DomainError("MassShellDensityLC: grid must be of kind lc-momentum");
    MassShellDensityLC r;
    r.beta_ = std::move(beta);
    r.params_ = params;
    return r;
}

cplx MassShellDensityLC::b(std::span<const double> pt) const { return lc_weight(pt[0]) * beta_(pt); }

Density MassShellDensityLC::b_density() const {
    return map(beta_, [](std::span<const double> pt, cplx v) { return lc_weight(pt[0]) * v; });
}

MassShellDensityM from_cauchy(const CauchyData& data) {
    data.params.validate();
    check_dim(data.u0_hat, data.params, "from_cauchy");
    check_dim(data.u1_hat, data.params, "from_cauchy");
    const double m = data.params.m;
    const cplx i(0.0, 1.0);
    auto a0 = combine(data.u0_hat, data.u1_hat, [m, i](std::span<const double> p, cplx u0, cplx u1) {
        return kTwoPi * (omega(p, m) * u0 + i * u1);
    });
    auto a1 = combine(data.u0_hat, data.u1_hat, [m, i](std::span<const double> p, cplx u0, cplx u1) {
        return kTwoPi * (omega(p, m) * u0 - i * u1);
    });
    return {std::move(a0), std::move(a1), data.params};
}

std::pair<MassShellDensityLC, MassShellDensityLC> split_pm(const MassShellDensityLC& msd) {
    auto plus = map(msd.beta(), [](std::span<const double> pt, cplx v) { return pt[0] > 0.0 ? v : cplx(0.0); });
    auto minus = map(msd.beta(), [](std::span<const double> pt, cplx v) { return pt[0] < 0.0 ? v : cplx(0.0); });
    return {MassShellDensityLC::from_beta(std::move(plus), msd.params()),
            MassShellDensityLC::from_beta(std::move(minus), msd.params())};
}

MassShellDensityLC lc_from_m(const MassShellDensityM& msd) {
    msd.params.validate();
    check_dim(msd.a0, msd.params, "lc_from_m");
    check_dim(msd.a1, msd.params, "lc_from_m");
    const Density a0 = msd.a0;
    const Density a1 = msd.a1;
    const double m = msd.params.m;
    auto beta = Density::from_function(msd.params.n, [a0, a1, m](std::span<const double> pt) {
        const Sheet s = sheet_of(pt[0]);
        Point p{};
        const std::span<double> pv(p.data(), pt.size());
        nu_unsqueeze(s, pt, m, pv);
        const cplx a = s == Sheet::plus ? a0(pv) : a1(pv);
        return a / lc_weight(pt[0]);
    });
    return MassShellDensityLC::from_beta(std::move(beta), msd.params);
}

MassShellDensityLC lc_from_m(const MassShellDensityM& msd, const Grid& lc_grid) {
    if (lc_grid.kind != GridKind::lc_momentum) throw DomainError("lc_from_m: target grid must be lc-momentum");
    if (lc_grid.dim() != msd.params.n) throw DomainError("lc_from_m: grid dimension mismatch");
    const MassShellDensityLC closure = lc_from_m(msd);
    return MassShellDensityLC::from_beta(Density::from_grid(closure.beta().sample(lc_grid)), msd.params);
}

MassShellDensityM m_from_lc(const MassShellDensityLC& msd) {
    const auto lc = msd;
    const double m = msd.params().m;
    auto pull = [lc, m](Sheet s) {
        return Density::from_function(lc.params().n, [lc, m, s](std::span<const double> p) {
            Point pt{};
            const std::span<double> ptv(pt.data(), p.size());
            mu_squeeze(s, p, m, ptv);
            return lc.b(ptv);
        });
    };
    return {pull(Sheet::plus), pull(Sheet::minus), msd.params()};
}

MassShellDensityM m_from_lc(const MassShellDensityLC& msd, const Grid& grid) {
    if (grid.kind != GridKind::minkowski_momentum) throw DomainError("m_from_lc: target grid must be minkowski-momentum");
    if (grid.dim() != msd.params().n) throw DomainError("m_from_lc: grid dimension mismatch");
    const MassShellDensityM closure = m_from_lc(msd);
    return {Density::from_grid(closure.a0.sample(grid)), Density::from_grid(closure.a1.sample(grid)), msd.params()};
}

cplx division_residual(const MassShellDensityM& msd, const TestFunctionSpec& f, const QuadOptions& opts,
                       double mass_sq_shift) {
    const ModelParams& P = msd.params;
    P.validate();
    if (f.dim() != P.n + 1) throw DomainError("division_residual: f must live on R^{1+n}");
    const double m2 = P.m * P.m + mass_sq_shift;
    auto weighted = [&](std::span<const double> x) {
        double q = x[0] * x[0];
        for (std::size_t i = 1; i < x.size(); ++i) q -= x[i] * x[i];
        return (q - m2) * f(x);
    };
    QuadOptions o = opts;
    o.sigma_max = std::max(o.sigma_max, f.sigma_max());
    return pair_minkowski_delta(msd.a0, weighted, Sheet::plus, P, o).value +
           pair_minkowski_delta(msd.a1, weighted, Sheet::minus, P, o).value;
}

cplx division_residual(const MassShellDensityLC& msd, const TestFunctionSpec& f, const QuadOptions& opts,
                       double mass_sq_shift) {
    const ModelParams& P = msd.params();
    P.validate();
    if (f.dim() != P.n + 1) throw DomainError("division_residual: f must live on R^{1+n}");
    const double m2 = P.m * P.m + mass_sq_shift;
    auto weighted = [&](std::span<const double> x) {
        const std::size_t last = x.size() - 1;
        double q = 2.0 * x[0] * x[last];
        for (std::size_t i = 1; i < last; ++i) q -= x[i] * x[i];
        return (q - m2) * f(x);
    };
    auto b = [&](std::span<const double> pt) { return msd.b(pt); };
    QuadOptions o = opts;
    o.sigma_max = std::max(o.sigma_max, f.sigma_max());
    return pair_lc_delta(b, weighted, LCSide::both, P, o).value;
}

}  // namespace charcone
