#include "charcone/pauli_jordan.hpp"

#include <cmath>
#include <numbers>

#include "charcone/error.hpp"
#include "charcone/evolution.hpp"

namespace charcone {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

Density transform_of(const TestFunctionSpec& f) {
    auto hat = fourier_exact(f, TransformConvention::partial_lc);
    if (!hat) throw DomainError("probe has no closed-form partial light-cone transform");
    return Density::from_spec(*hat);
}

QuadOptions with_sigma(QuadOptions o, double sigma) {
    o.sigma_max = std::max(o.sigma_max, sigma);
    return o;
}

}  // namespace

CharacteristicData pj_characteristic_data(const ModelParams& params) {
    params.validate();
    auto u = Density::from_function(params.n, [](std::span<const double> pt) {
        if (pt[0] == 0.0) throw DomainError("Pauli-Jordan data: p+ = 0");
        return cplx(0.0, 1.0) / (2.0 * pt[0]);
    });
    return {std::move(u), params};
}

QuadResult pj_pairing_quadrature_hat(const Density& f_hat, const ModelParams& params, const QuadOptions& opts) {
    params.validate();
    if (f_hat.dim() != params.n) throw DomainError("pj_pairing_quadrature: dimension mismatch");
    const auto n = static_cast<std::size_t>(params.n);
    auto integrand = [&](std::span<const double> p) -> cplx {
        Point q{};
        for (std::size_t i = 0; i < n; ++i) q[i] = -p[i];
        const cplx diff = f_hat(std::span<const double>(q.data(), n)) - f_hat(p);
        return diff / (2.0 * p[0]);
    };
    QuadResult r = integrate_rn(integrand, params.n, opts, params.m);
    const cplx factor = cplx(0.0, 0.5) / std::pow(kTwoPi, params.n);
    r.value *= factor;
    if (r.error_estimate >= 0.0) r.error_estimate *= std::abs(factor);
    return r;
}

QuadResult pj_pairing_quadrature(const TestFunctionSpec& f, const ModelParams& params, const QuadOptions& opts) {
    if (f.dim() != params.n) throw DomainError("pj_pairing_quadrature: probe dimension must be n");
    // The transform of a width-σ Gaussian has width 1/σ.
    return pj_pairing_quadrature_hat(transform_of(f), params, with_sigma(opts, 1.0 / f.sigma_max()));
}

QuadResult pj_pairing_closed_form(const TestFunctionSpec& f, const ModelParams& params, const QuadOptions& opts) {
    params.validate();
    if (f.dim() != params.n) throw DomainError("pj_pairing_closed_form: probe dimension must be n");
    const auto n = static_cast<std::size_t>(params.n);
    auto integrand = [&](std::span<const double> x) -> cplx {
        Point pt{};
        pt[0] = x[0];
        const cplx v = f(std::span<const double>(pt.data(), n));
        return x[0] > 0.0 ? v : (x[0] < 0.0 ? -v : cplx(0.0));
    };
    QuadResult r = integrate_rn(integrand, 1, with_sigma(opts, f.sigma_max()), params.m);
    r.value *= 0.25;
    if (r.error_estimate >= 0.0) r.error_estimate *= 0.25;
    return r;
}

QuadResult pair_profile(const Density& u_hat, const Density& f_hat, int n, const QuadOptions& opts, double m) {
    if (u_hat.dim() != n || f_hat.dim() != n) throw DomainError("pair_profile: dimension mismatch");
    const auto un = static_cast<std::size_t>(n);
    auto integrand = [&](std::span<const double> p) -> cplx {
        Point q{};
        for (std::size_t i = 0; i < un; ++i) q[i] = -p[i];
        const std::span<const double> mp(q.data(), un);
        return 0.5 * (u_hat(p) * f_hat(mp) + u_hat(mp) * f_hat(p));
    };
    QuadResult r = integrate_rn(integrand, n, opts, m);
    const double factor = std::pow(kTwoPi, -n);
    r.value *= factor;
    if (r.error_estimate >= 0.0) r.error_estimate *= factor;
    return r;
}

QuadResult pj_pairing_pipeline(const TestFunctionSpec& f, const ModelParams& params, const QuadOptions& opts) {
    params.validate();
    if (f.dim() != params.n) throw DomainError("pj_pairing_pipeline: probe dimension must be n");
    const MassShellDensityLC msd = solve_characteristic(pj_characteristic_data(params));
    const auto profile = Density::from_function(
        params.n, [msd](std::span<const double> pt) { return tame_value(msd, 0.0, pt); });
    return pair_profile(profile, transform_of(f), params.n, with_sigma(opts, 1.0 / f.sigma_max()), params.m);
}

}  // namespace charcone
