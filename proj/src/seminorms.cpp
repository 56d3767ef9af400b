#include "charcone/seminorms.hpp"

#include <cmath>

#include "charcone/error.hpp"

namespace charcone {

namespace {

void check_lc_grid(const Grid& grid) {
    grid.validate();
    if (grid.axes.front().offset != AxisOffset::half_step)
        throw DomainError("seminorms need a grid whose p+ axis is half-step offset");
}

int order(std::span<const int> alpha) {
    int s = 0;
    for (int a : alpha) {
        if (a < 0) throw DomainError("negative multi-index");
        s += a;
    }
    return s;
}

template <class F>
double sup_over(const Grid& grid, F&& f) {
    const auto n = static_cast<std::size_t>(grid.dim());
    Point x{};
    double best = 0.0;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        grid.node(i, std::span<double>(x.data(), n));
        const double v = f(std::span<const double>(x.data(), n));
        if (std::isnan(v)) throw NumericalError("seminorm: NaN at a grid node");
        best = std::max(best, v);
    }
    return best;
}

double norm(std::span<const double> x) {
    double s = 0.0;
    for (double v : x) s += v * v;
    return std::sqrt(s);
}

double nform_weight(std::span<const double> pt, int N) { return std::pow((1.0 + norm(pt)) / std::abs(pt[0]), N); }

/// |w| · |d| without producing inf · 0.
double weighted(double w, cplx d) {
    const double a = std::abs(d);
    return a == 0.0 ? 0.0 : w * a;
}

}  // namespace

double squeezed_seminorm(const TestFunctionSpec& f, int k, std::span<const int> beta, std::span<const int> alpha,
                         const Grid& grid, bool allow_fd) {
    check_lc_grid(grid);
    const int n = grid.dim();
    if (f.dim() != n || static_cast<int>(alpha.size()) != n || static_cast<int>(beta.size()) != n - 1)
        throw DomainError("squeezed_seminorm: dimension mismatch");
    if (order(alpha) > 2 && !allow_fd) throw DomainError("squeezed_seminorm: |alpha| > 2 needs allow_fd");
    order(beta);
    return sup_over(grid, [&](std::span<const double> pt) {
        double w = std::pow(pt[0], k);
        for (int j = 1; j < n; ++j) w *= std::pow(pt[static_cast<std::size_t>(j)], beta[static_cast<std::size_t>(j - 1)]);
        return weighted(std::abs(w), f.deriv(alpha, pt));
    });
}

double squeezed_seminorm_N(const TestFunctionSpec& f, int N, std::span<const int> alpha, const Grid& grid,
                           bool allow_fd) {
    check_lc_grid(grid);
    if (f.dim() != grid.dim() || static_cast<int>(alpha.size()) != grid.dim())
        throw DomainError("squeezed_seminorm_N: dimension mismatch");
    if (order(alpha) > 2 && !allow_fd) throw DomainError("squeezed_seminorm_N: |alpha| > 2 needs allow_fd");
    return sup_over(grid, [&](std::span<const double> pt) { return weighted(nform_weight(pt, N), f.deriv(alpha, pt)); });
}

Multiplier theta_multiplier(Sheet side) {
    return [side](std::span<const int> alpha, std::span<const double> pt) -> cplx {
        for (int a : alpha)
            if (a != 0) return 0.0;
        return (side == Sheet::plus) == (pt[0] > 0.0) ? 1.0 : 0.0;
    };
}

Multiplier p_plus_power_multiplier(int k) {
    return [k](std::span<const int> alpha, std::span<const double> pt) -> cplx {
        for (std::size_t d = 1; d < alpha.size(); ++d)
            if (alpha[d] != 0) return 0.0;
        const double p = pt[0];
        const double s = p > 0.0 ? 1.0 : -1.0;
        // d^j/dp^j |p|^k = k(k-1)...(k-j+1) |p|^{k-j} sgn(p)^j
        double c = 1.0;
        for (int i = 0; i < alpha[0]; ++i) c *= (k - i) * s;
        return c * std::pow(std::abs(p), k - alpha[0]);
    };
}

Multiplier inverse_p_plus_multiplier() {
    return [](std::span<const int> alpha, std::span<const double> pt) -> cplx {
        for (std::size_t d = 1; d < alpha.size(); ++d)
            if (alpha[d] != 0) return 0.0;
        // d^j/dp^j p^{-1} = (-1)^j j! p^{-1-j}
        double c = 1.0;
        for (int i = 1; i <= alpha[0]; ++i) c *= -i;
        return c * std::pow(pt[0], -1 - alpha[0]);
    };
}

Multiplier lc_omega_multiplier(double m) {
    return [m](std::span<const int> alpha, std::span<const double> pt) -> cplx {
        const std::size_t n = pt.size();
        const double p = pt[0];
        double s = m * m;
        for (std::size_t j = 1; j < n; ++j) s += pt[j] * pt[j];
        int total = 0;
        for (int a : alpha) total += a;
        if (total == 0) return s / (2.0 * p);
        if (total > 2) throw DomainError("lc_omega_multiplier: derivatives up to order 2");
        const int a0 = alpha[0];
        std::vector<std::size_t> perp;
        for (std::size_t j = 1; j < n; ++j)
            for (int c = 0; c < alpha[j]; ++c) perp.push_back(j);
        if (total == 1) return a0 == 1 ? -s / (2.0 * p * p) : pt[perp[0]] / p;
        if (a0 == 2) return s / (p * p * p);
        if (a0 == 1) return -pt[perp[0]] / (p * p);
        return perp[0] == perp[1] ? 1.0 / p : 0.0;
    };
}

MultiplicatorReport multiplicator_check(const Multiplier& M, std::span<const int> alpha, int N, double C,
                                        const Grid& grid) {
    check_lc_grid(grid);
    if (static_cast<int>(alpha.size()) != grid.dim()) throw DomainError("multiplicator_check: dimension mismatch");
    const auto n = static_cast<std::size_t>(grid.dim());
    MultiplicatorReport r;
    r.worst_node.assign(n, 0.0);
    Point x{};
    for (std::size_t i = 0; i < grid.size(); ++i) {
        grid.node(i, std::span<double>(x.data(), n));
        const std::span<const double> pt(x.data(), n);
        const double ratio = std::abs(M(alpha, pt)) / nform_weight(pt, N);
        if (std::isnan(ratio)) throw NumericalError("multiplicator_check: NaN at a grid node");
        if (ratio > r.max_ratio || i == 0) {
            r.max_ratio = ratio;
            r.worst_node.assign(x.begin(), x.begin() + static_cast<std::ptrdiff_t>(n));
        }
    }
    r.pass = r.max_ratio <= C;
    return r;
}

std::vector<Grid> refinement_ladder(const Grid& base, int levels, std::size_t factor) {
    check_lc_grid(base);
    if (levels < 2) throw DomainError("refinement_ladder: need at least 2 levels");
    if (factor < 3 || factor % 2 == 0) throw DomainError("refinement_ladder: factor must be odd and >= 3");
    std::vector<Grid> out{base};
    for (int l = 1; l < levels; ++l) {
        Grid g = out.back();
        const AxisSpec& a = g.axes.front();
        g.axes.front() = AxisSpec::half_step(a.step / static_cast<double>(factor), a.count * factor);
        g.validate();
        out.push_back(std::move(g));
    }
    return out;
}

LadderCertificate ladder_certificate(const std::vector<Grid>& ladder, const std::function<double(const Grid&)>& value) {
    LadderCertificate c;
    for (const auto& g : ladder) c.values.push_back(value(g));
    c.divergent = c.values.size() > 1;
    c.min_growth = INFINITY;
    for (std::size_t l = 0; l + 1 < c.values.size(); ++l) {
        const double a = c.values[l];
        const double b = c.values[l + 1];
        const double growth = a == 0.0 ? (b == 0.0 ? 1.0 : INFINITY) : b / a;
        c.max_growth = std::max(c.max_growth, growth);
        c.min_growth = std::min(c.min_growth, growth);
        if (!(growth < kBoundedGrowth)) c.bounded = false;
        if (!(growth >= kDivergentGrowth)) c.divergent = false;
    }
    return c;
}

bool filtration_check(const TestFunctionSpec& f, int k, const std::vector<Grid>& ladder) {
    if (ladder.empty()) throw DomainError("filtration_check: empty ladder");
    const int n = f.dim();
    auto value = [&](const Grid& g) {
        check_lc_grid(g);
        std::vector<int> alpha(static_cast<std::size_t>(n), 0);
        double best = 0.0;
        for (int d = -1; d < n; ++d) {
            std::fill(alpha.begin(), alpha.end(), 0);
            if (d >= 0) alpha[static_cast<std::size_t>(d)] = 1;
            best = std::max(best, sup_over(g, [&](std::span<const double> pt) {
                const double p = pt[0];
                // ∂(f p^-k) = (∂f) p^-k - δ_{d0} k f p^{-k-1}
                cplx v = f.deriv(alpha, pt);
                if (v != cplx(0.0)) v *= std::pow(p, -k);
                if (d == 0 && k != 0) {
                    const cplx f0 = f(pt);
                    if (f0 != cplx(0.0)) v -= static_cast<double>(k) * f0 * std::pow(p, -k - 1);
                }
                return std::abs(v);
            }));
        }
        return best;
    };
    return ladder_certificate(ladder, value).bounded;
}

}  // namespace charcone
