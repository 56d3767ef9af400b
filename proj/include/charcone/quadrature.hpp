#pragma once

// Deterministic tensor-product Gauss-Legendre quadrature over R^n and the
// mass-shell pairings
//   <a δ±, f>   = ∫ d^n p  a(p) f(±ω(p), p) / (2ω(p))
//   <b δ~±, f>  = ∫ d^n p~ Θ(±p+) b(p~) f(Ω~(p~)) / (2|p+|)
// The light-cone pairing is evaluated in Minkowski variables through
// p~ = μ±(p), where d^n p~ / (2|p+|) = d^n p / (2ω(p)).

#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "charcone/error.hpp"
#include "charcone/kinematics.hpp"
#include "charcone/parallel.hpp"

namespace charcone {

using cplx = std::complex<double>;

struct QuadOptions {
    /// 2^level panels of 16 Gauss-Legendre nodes per axis, level in [1, 12].
    int level = 7;
    /// Half-width of the integration box; <= 0 selects default_extent.
    double extent = 0.0;
    /// Largest Gaussian width of the integrand, used by the default extent.
    double sigma_max = 1.0;
    /// Also integrate at level-1 and report |I_l - I_{l-1}|.
    bool richardson = true;
};

struct QuadResult {
    cplx value;
    /// |I_level - I_{level-1}|, or -1 when not requested.
    double error_estimate = -1.0;
    int level = 0;
    double extent = 0.0;
    std::size_t evaluations = 0;
};

/// 10 · max(1, sigma_max) · sqrt(1 + m)
double default_extent(double sigma_max, double m);

/// One-dimensional rule (nodes ascending, weights positive).
struct AxisRule {
    std::vector<double> nodes;
    std::vector<double> weights;
    std::size_t size() const { return nodes.size(); }
};

/// Composite 16-point Gauss-Legendre on s in [-1, 1] (2^level panels), mapped
/// by x = extent · atanh(τ s) / atanh(τ), τ = tanh(1). The map clusters nodes
/// near the origin and keeps the box finite.
AxisRule tanh_rule(int level, double extent);

/// Composite 16-point Gauss-Legendre on [lo, hi] with 2^level panels.
AxisRule linear_rule(int level, double lo, double hi);

namespace detail {

inline constexpr std::size_t kLeafSize = 512;

template <class F>
cplx tensor_leaf(std::span<const AxisRule> axes, std::size_t lo, std::size_t hi, const F& f) {
    const std::size_t n = axes.size();
    std::array<std::size_t, kMaxDim + 1> idx{};
    Point x{};
    std::size_t r = lo;
    for (std::size_t d = n; d-- > 0;) {
        idx[d] = r % axes[d].size();
        r /= axes[d].size();
    }
    cplx sum = 0.0;
    for (std::size_t i = lo; i < hi; ++i) {
        double w = 1.0;
        for (std::size_t d = 0; d < n; ++d) {
            x[d] = axes[d].nodes[idx[d]];
            w *= axes[d].weights[idx[d]];
        }
        sum += w * cplx(f(std::span<const double>(x.data(), n)));
        for (std::size_t d = n; d-- > 0;) {
            if (++idx[d] < axes[d].size()) break;
            idx[d] = 0;
        }
    }
    return sum;
}

template <class F>
cplx tensor_tree(std::span<const AxisRule> axes, std::size_t lo, std::size_t hi, const F& f) {
    if (hi - lo <= kLeafSize) return tensor_leaf(axes, lo, hi, f);
    const std::size_t mid = lo + (hi - lo) / 2;
    return tensor_tree(axes, lo, mid, f) + tensor_tree(axes, mid, hi, f);
}

void split_tree(std::size_t lo, std::size_t hi, int depth, std::vector<std::pair<std::size_t, std::size_t>>& out);
cplx join_tree(std::size_t lo, std::size_t hi, int depth, const std::vector<cplx>& parts, std::size_t& next);
int split_depth();

}  // namespace detail

/// Σ_i w_i f(x_i) over the tensor grid of `axes`, summed along a fixed
/// balanced binary tree over the flat node index. The tree does not depend on
/// the thread count, so results are bit-identical for any worker count.
/// Throws NumericalError if the sum is not finite.
template <class F>
cplx integrate_tensor(std::span<const AxisRule> axes, const F& f) {
    if (axes.empty() || axes.size() > static_cast<std::size_t>(kMaxDim + 1))
        throw DomainError("integrate_tensor: unsupported dimension " + std::to_string(axes.size()));
    std::size_t total = 1;
    for (const auto& a : axes) total *= a.size();
    const int depth = thread_count() > 1 ? detail::split_depth() : 0;
    cplx value;
    if (depth == 0) {
        value = detail::tensor_tree(axes, 0, total, f);
    } else {
        std::vector<std::pair<std::size_t, std::size_t>> ranges;
        detail::split_tree(0, total, depth, ranges);
        std::vector<cplx> parts(ranges.size());
        parallel_for(ranges.size(), [&](std::size_t k) {
            parts[k] = detail::tensor_tree(axes, ranges[k].first, ranges[k].second, f);
        });
        std::size_t next = 0;
        value = detail::join_tree(0, total, depth, parts, next);
    }
    if (!std::isfinite(value.real()) || !std::isfinite(value.imag()))
        throw NumericalError("quadrature: non-finite integrand value");
    return value;
}

/// ∫_{R^n} f over [-E, E]^n with the tanh-mapped rule, plus the two-level
/// Richardson estimate.
template <class F>
QuadResult integrate_rn(const F& f, int n, const QuadOptions& opts, double m = 1.0) {
    if (opts.level < 1 || opts.level > 12) throw DomainError("quadrature level must be in [1, 12]");
    if (n < 1 || n > kMaxDim + 1) throw DomainError("integrate_rn: unsupported dimension");
    QuadResult r;
    r.level = opts.level;
    r.extent = opts.extent > 0.0 ? opts.extent : default_extent(opts.sigma_max, m);
    auto run = [&](int level) {
        const AxisRule rule = tanh_rule(level, r.extent);
        std::vector<AxisRule> axes(static_cast<std::size_t>(n), rule);
        r.evaluations += static_cast<std::size_t>(std::pow(static_cast<double>(rule.size()), n));
        return integrate_tensor(std::span<const AxisRule>(axes), f);
    };
    r.value = run(opts.level);
    if (opts.richardson) r.error_estimate = std::abs(r.value - run(opts.level - 1));
    return r;
}

/// <a δ±, f> = ∫ d^n p a(p) f(Ω±(p)) / (2ω(p)); f takes Minkowski momenta
/// (p0, p1..pn).
template <class A, class F>
QuadResult pair_minkowski_delta(const A& a, const F& f, Sheet sign, const ModelParams& params,
                                const QuadOptions& opts) {
    params.validate();
    const auto n = static_cast<std::size_t>(params.n);
    const double m = params.m;
    auto integrand = [&](std::span<const double> p) -> cplx {
        const cplx av = a(p);
        if (av == cplx(0.0)) return 0.0;
        Point full{};
        omega_lift(sign, p, m, std::span<double>(full.data(), n + 1));
        return av * f(std::span<const double>(full.data(), n + 1)) / (2.0 * std::abs(full[0]));
    };
    return integrate_rn(integrand, params.n, opts, m);
}

enum class LCSide { plus, minus, both };

/// <b δ~, f> restricted to {p+ > 0}, {p+ < 0} or both half-spaces, evaluated
/// through p~ = μ±(p). f takes LC momenta (p+, p_perp, p-). For `both`, the
/// two sheets are added inside one integrand so cancelling parts of b·f
/// combine before summation.
template <class B, class F>
QuadResult pair_lc_delta(const B& b, const F& f, LCSide side, const ModelParams& params, const QuadOptions& opts) {
    params.validate();
    const auto n = static_cast<std::size_t>(params.n);
    const double m = params.m;
    auto sheet_term = [&](Sheet s, std::span<const double> p, double w) -> cplx {
        Point pt{};
        mu_squeeze(s, p, m, w, std::span<double>(pt.data(), n));
        if (pt[0] == 0.0) throw NumericalError("pair_lc_delta: p+ = 0 reached after pullback");
        const std::span<const double> ptv(pt.data(), n);
        const cplx bv = b(ptv);
        if (bv == cplx(0.0)) return 0.0;
        Point full{};
        lc_omega_lift(ptv, m, std::span<double>(full.data(), n + 1));
        return bv * f(std::span<const double>(full.data(), n + 1));
    };
    auto integrand = [&](std::span<const double> p) -> cplx {
        const double w = omega(p, m);
        cplx v = 0.0;
        if (side != LCSide::minus) v += sheet_term(Sheet::plus, p, w);
        if (side != LCSide::plus) v += sheet_term(Sheet::minus, p, w);
        return v / (2.0 * w);
    };
    return integrate_rn(integrand, params.n, opts, m);
}

}  // namespace charcone
