#include "charcone/kinematics.hpp"

#include <cmath>
#include <string>

#include "charcone/error.hpp"

namespace charcone {

namespace {

double perp_squared(std::span<const double> pt) {
    double s = 0.0;
    for (std::size_t i = 1; i < pt.size(); ++i) s += pt[i] * pt[i];
    return s;
}

}  // namespace

void ModelParams::validate() const {
    if (!(m > 0.0) || !std::isfinite(m))
        throw DomainError("mass must be finite and > 0 (got " + std::to_string(m) + ")");
    if (n < 1 || n > kMaxDim)
        throw DomainError("spatial dimension must be in [1, " + std::to_string(kMaxDim) +
                          "] (got " + std::to_string(n) + ")");
}

ModelParams ModelParams::make(double m, int n) {
    ModelParams p{m, n};
    p.validate();
    return p;
}

double omega(std::span<const double> p, double m) {
    double s = m * m;
    for (double v : p) s += v * v;
    return std::sqrt(s);
}

double lc_omega(std::span<const double> pt, double m) {
    if (pt.empty() || pt[0] == 0.0) throw DomainError("lc_omega: p+ must be nonzero");
    return (perp_squared(pt) + m * m) / (2.0 * pt[0]);
}

void mu_squeeze(Sheet sign, std::span<const double> p, double m, std::span<double> out) {
    mu_squeeze(sign, p, m, omega(p, m), out);
}

void mu_squeeze(Sheet sign, std::span<const double> p, double m, double w, std::span<double> out) {
    const std::size_t n = p.size();
    const double pl = p[n - 1];
    double transverse = m * m;
    for (std::size_t i = 0; i + 1 < n; ++i) transverse += p[i] * p[i];
    // (pl ± w)/sqrt2, switching to (w^2 - pl^2)/(w ∓ pl) where the sum cancels.
    double pplus;
    if (sign == Sheet::plus)
        pplus = pl >= 0.0 ? (pl + w) * kInvSqrt2 : transverse / (w - pl) * kInvSqrt2;
    else
        pplus = pl <= 0.0 ? (pl - w) * kInvSqrt2 : -transverse / (w + pl) * kInvSqrt2;
    out[0] = pplus;
    for (std::size_t i = 0; i + 1 < n; ++i) out[i + 1] = p[i];
}

void nu_unsqueeze(Sheet sign, std::span<const double> pt, double m, std::span<double> out) {
    const double pplus = pt[0];
    if (pplus == 0.0) throw DomainError("nu_unsqueeze: p+ = 0 is not in either half-space");
    if ((sign == Sheet::plus) != (pplus > 0.0))
        throw DomainError("nu_unsqueeze: sign of p+ does not match the requested sheet");
    const std::size_t n = pt.size();
    for (std::size_t i = 1; i < n; ++i) out[i - 1] = pt[i];
    out[n - 1] = (pplus - lc_omega(pt, m)) * kInvSqrt2;
}

void kappa(std::span<const double> x, std::span<double> out) {
    const std::size_t d = x.size();
    const double x0 = x[0];
    const double xn = x[d - 1];
    for (std::size_t i = 1; i + 1 < d; ++i) out[i] = x[i];
    out[0] = (x0 + xn) * kInvSqrt2;
    out[d - 1] = (x0 - xn) * kInvSqrt2;
}

void kappa_inv(std::span<const double> xt, std::span<double> out) {
    // kappa is a symmetric orthogonal matrix, hence an involution.
    kappa(xt, out);
}

void omega_lift(Sheet sign, std::span<const double> p, double m, std::span<double> out) {
    out[0] = sheet_sign(sign) * omega(p, m);
    for (std::size_t i = 0; i < p.size(); ++i) out[i + 1] = p[i];
}

void lc_omega_lift(std::span<const double> pt, double m, std::span<double> out) {
    for (std::size_t i = 0; i < pt.size(); ++i) out[i] = pt[i];
    out[pt.size()] = lc_omega(pt, m);
}

double minkowski_form(std::span<const double> x, std::span<const double> y) {
    double s = x[0] * y[0];
    for (std::size_t i = 1; i < x.size(); ++i) s -= x[i] * y[i];
    return s;
}

double lc_form(std::span<const double> x, std::span<const double> y) {
    const std::size_t d = x.size();
    double s = x[0] * y[d - 1] + x[d - 1] * y[0];
    for (std::size_t i = 1; i + 1 < d; ++i) s -= x[i] * y[i];
    return s;
}

double omega(const MinkMomentum& p, const ModelParams& params) {
    params.validate();
    return omega(std::span<const double>(p.p), params.m);
}

double lc_omega(const LCMomentum& pt, const ModelParams& params) {
    params.validate();
    if (pt.p_plus == 0.0) throw DomainError("lc_omega: p+ must be nonzero");
    double s = params.m * params.m;
    for (double v : pt.p_perp) s += v * v;
    return s / (2.0 * pt.p_plus);
}

FullVector kappa(const FullVector& v) {
    if (v.frame != Frame::minkowski) throw DomainError("kappa expects a Minkowski-frame vector");
    if (v.c.size() < 2) throw DomainError("kappa needs at least 1+1 components");
    FullVector out{Frame::lightcone, std::vector<double>(v.c.size())};
    kappa(std::span<const double>(v.c), std::span<double>(out.c));
    return out;
}

FullVector kappa_inv(const FullVector& v) {
    if (v.frame != Frame::lightcone) throw DomainError("kappa_inv expects a light-cone-frame vector");
    if (v.c.size() < 2) throw DomainError("kappa_inv needs at least 1+1 components");
    FullVector out{Frame::minkowski, std::vector<double>(v.c.size())};
    kappa_inv(std::span<const double>(v.c), std::span<double>(out.c));
    return out;
}

LCMomentum mu_squeeze(Sheet sign, const MinkMomentum& p, const ModelParams& params) {
    params.validate();
    if (static_cast<int>(p.p.size()) != params.n) throw DomainError("mu_squeeze: dimension mismatch");
    Point buf{};
    mu_squeeze(sign, p.p, params.m, std::span<double>(buf.data(), p.p.size()));
    LCMomentum out;
    out.p_plus = buf[0];
    out.p_perp.assign(buf.begin() + 1, buf.begin() + static_cast<long>(p.p.size()));
    return out;
}

MinkMomentum nu_unsqueeze(Sheet sign, const LCMomentum& pt, const ModelParams& params) {
    params.validate();
    if (static_cast<int>(pt.p_perp.size()) + 1 != params.n)
        throw DomainError("nu_unsqueeze: dimension mismatch");
    Point in{};
    in[0] = pt.p_plus;
    for (std::size_t i = 0; i < pt.p_perp.size(); ++i) in[i + 1] = pt.p_perp[i];
    MinkMomentum out{std::vector<double>(static_cast<std::size_t>(params.n))};
    nu_unsqueeze(sign, std::span<const double>(in.data(), out.p.size()), params.m, out.p);
    return out;
}

}  // namespace charcone
