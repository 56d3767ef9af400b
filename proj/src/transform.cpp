#include "charcone/transform.hpp"

#include <fftw3.h>

#include <cmath>
#include <cstdint>
#include <mutex>
#include <numbers>

#include "charcone/error.hpp"

namespace charcone {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

struct AxisPlan {
    int sign = -1;  // exponent sign of e^{± i x p}
    bool inverse = false;
};

std::vector<AxisPlan> axis_plans(TransformConvention conv, int n) {
    std::vector<AxisPlan> plans(static_cast<std::size_t>(n));
    for (auto& p : plans) {
        switch (conv) {
            case TransformConvention::euclid: p = {-1, false}; break;
            case TransformConvention::euclid_inverse: p = {+1, true}; break;
            case TransformConvention::partial_lc: p = {-1, false}; break;
            case TransformConvention::partial_lc_inverse: p = {+1, true}; break;
            default: throw DomainError("full-frame transforms act on R^{1+n}; use fourier_exact");
        }
    }
    if (conv == TransformConvention::partial_lc) plans[0].sign = +1;
    if (conv == TransformConvention::partial_lc_inverse) plans[0].sign = -1;
    return plans;
}

bool is_lc(TransformConvention c) {
    return c == TransformConvention::partial_lc || c == TransformConvention::partial_lc_inverse;
}

GridKind target_kind(GridKind k, TransformConvention conv) {
    if (conv == TransformConvention::minkowski_full || conv == TransformConvention::lc_full)
        throw DomainError("full-frame transforms act on R^{1+n}; use fourier_exact");
    if (is_lc(conv)) {
        if (conv == TransformConvention::partial_lc && k == GridKind::lc_position) return GridKind::lc_momentum;
        if (conv == TransformConvention::partial_lc_inverse && k == GridKind::lc_momentum) return GridKind::lc_position;
        throw DomainError(std::string(to_string(conv)) + " does not accept a grid of kind " + std::string(to_string(k)));
    }
    if (k == GridKind::minkowski_position) return GridKind::minkowski_momentum;
    if (k == GridKind::minkowski_momentum) return GridKind::minkowski_position;
    throw DomainError(std::string(to_string(conv)) + " does not accept a grid of kind " + std::string(to_string(k)));
}

/// e^{i sign 2π r / (4N)} for integer r, reduced exactly before the call to
/// sin/cos so that mirrored nodes get exactly conjugate phases.
cplx unit_phase(std::int64_t r, std::int64_t four_n, int sign) {
    r %= four_n;
    if (r < 0) r += four_n;
    if (r > four_n / 2) r -= four_n;
    const double angle = kTwoPi * static_cast<double>(r) / static_cast<double>(four_n);
    return {std::cos(angle), sign * std::sin(angle)};
}

std::mutex& planner_mutex() {
    static std::mutex m;
    return m;
}

void fft_axis(std::vector<cplx>& data, const Grid& grid, std::size_t axis, int sign) {
    const auto strides = grid.strides();
    const int rank_other = grid.dim() - 1;
    fftw_iodim dim{static_cast<int>(grid.axes[axis].count), static_cast<int>(strides[axis]),
                   static_cast<int>(strides[axis])};
    std::vector<fftw_iodim> loops;
    for (std::size_t d = 0; d < grid.axes.size(); ++d) {
        if (d == axis) continue;
        loops.push_back({static_cast<int>(grid.axes[d].count), static_cast<int>(strides[d]),
                         static_cast<int>(strides[d])});
    }
    auto* ptr = reinterpret_cast<fftw_complex*>(data.data());
    fftw_plan plan = nullptr;
    {
        std::lock_guard lock(planner_mutex());
        plan = fftw_plan_guru_dft(1, &dim, rank_other, loops.empty() ? nullptr : loops.data(), ptr, ptr,
                                  sign < 0 ? FFTW_FORWARD : FFTW_BACKWARD, FFTW_ESTIMATE);
    }
    if (plan == nullptr) throw NumericalError("FFTW could not create a plan");
    fftw_execute_dft(plan, ptr, ptr);
    std::lock_guard lock(planner_mutex());
    fftw_destroy_plan(plan);
}

/// Multiplies every entry by factor(j) where j is its index along `axis`.
void scale_axis(std::vector<cplx>& data, const Grid& grid, std::size_t axis, const std::vector<cplx>& factor) {
    const auto strides = grid.strides();
    const std::size_t count = grid.axes[axis].count;
    const std::size_t stride = strides[axis];
    for (std::size_t i = 0; i < data.size(); ++i) data[i] *= factor[(i / stride) % count];
}

}  // namespace

Grid reciprocal_grid(const Grid& grid, TransformConvention conv) {
    grid.validate();
    Grid out;
    out.params = grid.params;
    out.kind = target_kind(grid.kind, conv);
    for (std::size_t d = 0; d < grid.axes.size(); ++d) {
        const AxisSpec& a = grid.axes[d];
        const double step = kTwoPi / (a.step * static_cast<double>(a.count));
        AxisOffset off = a.offset;
        if (is_lc(conv) && d == 0) off = off == AxisOffset::centered ? AxisOffset::half_step : AxisOffset::centered;
        out.axes.push_back(off == AxisOffset::centered ? AxisSpec::centered(step, a.count)
                                                       : AxisSpec::half_step(step, a.count));
    }
    out.validate();
    return out;
}

GridFunction dft(const GridFunction& gf, TransformConvention conv) {
    const Grid& in = gf.grid();
    const Grid out = reciprocal_grid(in, conv);
    const auto plans = axis_plans(conv, in.dim());
    std::vector<cplx> data(gf.values().begin(), gf.values().end());
    for (std::size_t d = 0; d < in.axes.size(); ++d) {
        const AxisSpec& ai = in.axes[d];
        const AxisSpec& ao = out.axes[d];
        const auto N = static_cast<std::int64_t>(ai.count);
        // x_j = (j + a) dx, p_k = (k + b) dp with 2a, 2b integers.
        const auto a2 = static_cast<std::int64_t>(std::llround(-2.0 * ai.origin()));
        const auto b2 = static_cast<std::int64_t>(std::llround(-2.0 * ao.origin()));
        const int s = plans[d].sign;
        std::vector<cplx> pre(ai.count), post(ai.count);
        for (std::int64_t j = 0; j < N; ++j) pre[static_cast<std::size_t>(j)] = unit_phase(2 * j * b2, 4 * N, s);
        const double scale = ai.step * (plans[d].inverse ? 1.0 / kTwoPi : 1.0);
        for (std::int64_t k = 0; k < N; ++k)
            post[static_cast<std::size_t>(k)] = scale * unit_phase(a2 * (2 * k + b2), 4 * N, s);
        if (b2 % (2 * N) != 0) scale_axis(data, in, d, pre);
        fft_axis(data, in, d, s);
        scale_axis(data, in, d, post);
    }
    return GridFunction(out, std::move(data));
}

CharacteristicData convert_m_to_lc(const CauchyData& data) {
    const ModelParams P = data.params;
    P.validate();
    if (data.u0_hat.dim() != P.n || data.u1_hat.dim() != P.n) throw DomainError("convert_m_to_lc: dimension mismatch");
    const Density u0 = data.u0_hat;
    const Density u1 = data.u1_hat;
    const double m = P.m;
    auto lc = Density::from_function(P.n, [u0, u1, m](std::span<const double> pt) {
        if (pt[0] == 0.0) throw DomainError("convert_m_to_lc: p+ = 0");
        const Sheet s = pt[0] > 0.0 ? Sheet::plus : Sheet::minus;
        Point p{};
        const std::span<double> pv(p.data(), pt.size());
        nu_unsqueeze(s, pt, m, pv);
        const cplx iu1 = cplx(0.0, sheet_sign(s)) * u1(pv);
        return (omega(pv, m) * u0(pv) + iu1) / (2.0 * std::abs(pt[0]));
    });
    return {std::move(lc), P};
}

CharacteristicData convert_m_to_lc(const CauchyData& data, const Grid& lc_grid) {
    if (lc_grid.kind != GridKind::lc_momentum) throw DomainError("convert_m_to_lc: target grid must be lc-momentum");
    CharacteristicData c = convert_m_to_lc(data);
    c.u0_lc_hat = Density::from_grid(c.u0_lc_hat.sample(lc_grid));
    return c;
}

namespace {

/// (|p+| u~)(μ±(p)) for both sheets.
std::pair<cplx, cplx> pulled_halves(const Density& u, std::span<const double> p, double m) {
    Point pt{};
    const std::span<double> ptv(pt.data(), p.size());
    mu_squeeze(Sheet::plus, p, m, ptv);
    const cplx plus = std::abs(pt[0]) * u(ptv);
    mu_squeeze(Sheet::minus, p, m, ptv);
    const cplx minus = std::abs(pt[0]) * u(ptv);
    return {plus, minus};
}

}  // namespace

CauchyData convert_lc_to_m(const CharacteristicData& data) {
    const ModelParams P = data.params;
    P.validate();
    if (data.u0_lc_hat.dim() != P.n) throw DomainError("convert_lc_to_m: dimension mismatch");
    const Density u = data.u0_lc_hat;
    const double m = P.m;
    auto u0 = Density::from_function(P.n, [u, m](std::span<const double> p) {
        const auto [plus, minus] = pulled_halves(u, p, m);
        return (plus + minus) / omega(p, m);
    });
    auto u1 = Density::from_function(P.n, [u, m](std::span<const double> p) {
        const auto [plus, minus] = pulled_halves(u, p, m);
        return cplx(0.0, -1.0) * (plus - minus);
    });
    return {std::move(u0), std::move(u1), P};
}

CauchyData convert_lc_to_m(const CharacteristicData& data, const Grid& grid) {
    if (grid.kind != GridKind::minkowski_momentum)
        throw DomainError("convert_lc_to_m: target grid must be minkowski-momentum");
    CauchyData c = convert_lc_to_m(data);
    c.u0_hat = Density::from_grid(c.u0_hat.sample(grid));
    c.u1_hat = Density::from_grid(c.u1_hat.sample(grid));
    return c;
}

}  // namespace charcone
