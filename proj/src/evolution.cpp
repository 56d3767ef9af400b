#include "charcone/evolution.hpp"

#include <cmath>
#include <numbers>

#include "charcone/error.hpp"
#include "charcone/transform.hpp"

namespace charcone {

namespace {

constexpr double kFourPi = 4.0 * std::numbers::pi;

template <class F>
GridFunction tabulate(const Grid& grid, F&& f) {
    grid.validate();
    const auto n = static_cast<std::size_t>(grid.dim());
    std::vector<cplx> values(grid.size());
    Point x{};
    for (std::size_t i = 0; i < values.size(); ++i) {
        grid.node(i, std::span<double>(x.data(), n));
        values[i] = f(std::span<const double>(x.data(), n));
    }
    return GridFunction(grid, std::move(values));
}

void check_grid(const Grid& grid, GridKind kind, int n, const char* what) {
    if (grid.kind != kind)
        throw DomainError(std::string(what) + ": expected a grid of kind " + std::string(to_string(kind)));
    if (grid.dim() != n) throw DomainError(std::string(what) + ": grid dimension mismatch");
}

const Grid& own_grid(const Density& d, const char* what) {
    if (!d.is_grid()) throw DomainError(std::string(what) + ": density has no grid; pass one explicitly");
    return d.grid_function().grid();
}

}  // namespace

cplx evolve_value(const MassShellDensityM& msd, double x0, std::span<const double> p) {
    const double w = omega(p, msd.params.m);
    const cplx e = std::polar(1.0, -w * x0);
    return (msd.a0(p) * e + msd.a1(p) * std::conj(e)) / (kFourPi * w);
}

cplx d0_value(const MassShellDensityM& msd, double x0, std::span<const double> p) {
    const double w = omega(p, msd.params.m);
    const cplx e = std::polar(1.0, -w * x0);
    return (msd.a0(p) * e - msd.a1(p) * std::conj(e)) / cplx(0.0, kFourPi);
}

cplx tame_value(const MassShellDensityLC& msd, double xplus, std::span<const double> pt) {
    const cplx beta = msd.beta()(pt);
    if (xplus == 0.0) return beta;
    return std::polar(1.0, -lc_omega(pt, msd.params().m) * xplus) * beta;
}

EvolvedProfile evolve_profile(const MassShellDensityM& msd, double x0, const Grid& grid) {
    check_grid(grid, GridKind::minkowski_momentum, msd.params.n, "evolve_profile");
    return {x0, Frame::minkowski, tabulate(grid, [&](std::span<const double> p) { return evolve_value(msd, x0, p); })};
}

EvolvedProfile evolve_profile(const MassShellDensityM& msd, double x0) {
    return evolve_profile(msd, x0, own_grid(msd.a0, "evolve_profile"));
}

EvolvedProfile d0_profile(const MassShellDensityM& msd, double x0, const Grid& grid) {
    check_grid(grid, GridKind::minkowski_momentum, msd.params.n, "d0_profile");
    return {x0, Frame::minkowski, tabulate(grid, [&](std::span<const double> p) { return d0_value(msd, x0, p); })};
}

EvolvedProfile d0_profile(const MassShellDensityM& msd, double x0) {
    return d0_profile(msd, x0, own_grid(msd.a0, "d0_profile"));
}

EvolvedProfile tame_profile(const MassShellDensityLC& msd, double xplus, const Grid& lc_grid) {
    check_grid(lc_grid, GridKind::lc_momentum, msd.params().n, "tame_profile");
    if (msd.beta().is_grid() && msd.beta().grid_function().grid() == lc_grid) {
        const GridFunction& g = msd.beta().grid_function();
        std::vector<cplx> values(g.values().begin(), g.values().end());
        if (xplus != 0.0) {
            const auto n = static_cast<std::size_t>(lc_grid.dim());
            Point x{};
            for (std::size_t i = 0; i < values.size(); ++i) {
                lc_grid.node(i, std::span<double>(x.data(), n));
                values[i] *= std::polar(1.0, -lc_omega(std::span<const double>(x.data(), n), msd.params().m) * xplus);
            }
        }
        return {xplus, Frame::lightcone, GridFunction(lc_grid, std::move(values))};
    }
    return {xplus, Frame::lightcone,
            tabulate(lc_grid, [&](std::span<const double> pt) { return tame_value(msd, xplus, pt); })};
}

EvolvedProfile tame_profile(const MassShellDensityLC& msd, double xplus) {
    return tame_profile(msd, xplus, own_grid(msd.beta(), "tame_profile"));
}

CharacteristicData tame_restrict(const MassShellDensityLC& msd) { return {msd.beta(), msd.params()}; }

MassShellDensityLC solve_characteristic(const CharacteristicData& data) {
    return MassShellDensityLC::from_beta(data.u0_lc_hat, data.params);
}

KgResidual kg_residual(const MassShellDensityM& msd, const Grid& position_grid, const std::vector<double>& times) {
    if (times.size() < 5) throw DomainError("kg_residual: need at least 5 time slices");
    check_grid(position_grid, GridKind::minkowski_position, msd.params.n, "kg_residual");
    const double dt = times[1] - times[0];
    if (!(dt > 0.0)) throw DomainError("kg_residual: times must increase");
    for (std::size_t i = 1; i < times.size(); ++i)
        if (std::abs((times[i] - times[i - 1]) - dt) > 1e-9 * std::max(1.0, std::abs(dt)))
            throw DomainError("kg_residual: times must be equally spaced");

    const Grid momentum = reciprocal_grid(position_grid, TransformConvention::euclid);
    std::vector<GridFunction> slices;
    slices.reserve(times.size());
    for (double t : times)
        slices.push_back(dft(evolve_profile(msd, t, momentum).profile, TransformConvention::euclid_inverse));

    KgResidual r;
    for (const auto& s : slices) r.max_u = std::max(r.max_u, sup_norm(s.values()));
    if (r.max_u == 0.0) {
        r.degenerate = true;
        return r;
    }

    const Grid& g = slices.front().grid();
    const auto strides = g.strides();
    const auto n = static_cast<std::size_t>(g.dim());
    const double m2 = msd.params.m * msd.params.m;
    double worst = 0.0;
    for (std::size_t t = 1; t + 1 < slices.size(); ++t) {
        const auto& prev = slices[t - 1].values();
        const auto& cur = slices[t].values();
        const auto& next = slices[t + 1].values();
        for (std::size_t i = 0; i < g.size(); ++i) {
            bool interior = true;
            for (std::size_t d = 0; d < n && interior; ++d) {
                const std::size_t j = (i / strides[d]) % g.axes[d].count;
                interior = j > 0 && j + 1 < g.axes[d].count;
            }
            if (!interior) continue;
            cplx v = (next[i] - 2.0 * cur[i] + prev[i]) / (dt * dt) + m2 * cur[i];
            for (std::size_t d = 0; d < n; ++d) {
                const double h = g.axes[d].step;
                v -= (cur[i + strides[d]] - 2.0 * cur[i] + cur[i - strides[d]]) / (h * h);
            }
            worst = std::max(worst, std::abs(v));
        }
    }
    r.relative = worst / r.max_u;
    return r;
}

}  // namespace charcone
