#include "charcone/testfn.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "charcone/error.hpp"

namespace charcone {

std::string_view to_string(TransformConvention c) {
    switch (c) {
        case TransformConvention::euclid: return "euclid";
        case TransformConvention::euclid_inverse: return "euclid_inverse";
        case TransformConvention::partial_lc: return "partial_lc";
        case TransformConvention::partial_lc_inverse: return "partial_lc_inverse";
        case TransformConvention::minkowski_full: return "minkowski_full";
        case TransformConvention::lc_full: return "lc_full";
    }
    return "?";
}

namespace {

constexpr int kMaxPoly = 48;
using Poly = std::array<double, kMaxPoly>;
using Index = std::array<int, kMaxDim + 1>;

constexpr double kFdStep = 1e-4;

double horner(const Poly& c, int deg, double t) {
    double r = 0.0;
    for (int i = deg; i >= 0; --i) r = r * t + c[static_cast<std::size_t>(i)];
    return r;
}

double ipow(double t, int a) {
    double r = 1.0;
    for (int i = 0; i < a; ++i) r *= t;
    return r;
}

double binomial(int k, int j) {
    double r = 1.0;
    for (int i = 1; i <= j; ++i) r = r * (k - j + i) / i;
    return r;
}

/// P_k(t) with d^k/dt^k [t^a e^{-t^2 inv_s2 / 2}] = P_k(t) e^{-t^2 inv_s2 / 2}.
double gauss_monomial_deriv(int a, int k, double t, double inv_s2) {
    if (k == 0) return ipow(t, a);
    if (a + k >= kMaxPoly) throw DomainError("Gauss-Hermite derivative order too high");
    Poly p{};
    p[static_cast<std::size_t>(a)] = 1.0;
    int deg = a;
    for (int j = 0; j < k; ++j) {
        Poly q{};
        for (int i = 1; i <= deg; ++i) q[static_cast<std::size_t>(i - 1)] += i * p[static_cast<std::size_t>(i)];
        for (int i = 0; i <= deg; ++i) q[static_cast<std::size_t>(i + 1)] -= inv_s2 * p[static_cast<std::size_t>(i)];
        ++deg;
        p = q;
    }
    return horner(p, deg, t);
}

/// R_j(u) with d^j/dt^j e^{-s/t^2} = R_j(1/t) e^{-s/t^2}.
double flat_factor_deriv(int j, double u, double s) {
    if (j == 0) return 1.0;
    if (3 * j >= kMaxPoly) throw DomainError("flat-at-zero derivative order too high");
    Poly r{};
    r[0] = 1.0;
    int deg = 0;
    for (int step = 0; step < j; ++step) {
        Poly q{};
        for (int i = 1; i <= deg; ++i) q[static_cast<std::size_t>(i + 1)] -= i * r[static_cast<std::size_t>(i)];
        for (int i = 0; i <= deg; ++i) q[static_cast<std::size_t>(i + 3)] += 2.0 * s * r[static_cast<std::size_t>(i)];
        deg += 3;
        r = q;
    }
    return horner(r, deg, u);
}

bool has_wave(const GaussHermite& g) {
    return std::any_of(g.wave.begin(), g.wave.end(), [](double w) { return w != 0.0; });
}

int order(const int* alpha, int dim) {
    int s = 0;
    for (int d = 0; d < dim; ++d) s += alpha[d];
    return s;
}

cplx gh_eval(const GaussHermite& g, const double* x, int dim) {
    const double inv2s2 = 0.5 / (g.sigma * g.sigma);
    double expo = 0.0;
    double poly = 1.0;
    for (int d = 0; d < dim; ++d) {
        const double t = x[d] - g.center[static_cast<std::size_t>(d)];
        expo += t * t;
        poly *= ipow(t, g.poly[static_cast<std::size_t>(d)]);
    }
    const double v = poly * std::exp(-expo * inv2s2);
    if (g.wave.empty()) return v;
    double phase = 0.0;
    for (int d = 0; d < dim; ++d) phase += g.wave[static_cast<std::size_t>(d)] * x[d];
    return v * std::polar(1.0, phase);
}

cplx gh_deriv(const GaussHermite& g, const int* alpha, const double* x, int dim) {
    const double inv_s2 = 1.0 / (g.sigma * g.sigma);
    double expo = 0.0;
    cplx result = 1.0;
    double phase = 0.0;
    for (int d = 0; d < dim; ++d) {
        const auto ud = static_cast<std::size_t>(d);
        const double t = x[d] - g.center[ud];
        expo += t * t;
        const int k = alpha[d];
        const int a = g.poly[ud];
        const double w = g.wave.empty() ? 0.0 : g.wave[ud];
        phase += w * x[d];
        cplx axis = 0.0;
        if (w == 0.0) {
            axis = gauss_monomial_deriv(a, k, t, inv_s2);
        } else {
            const cplx iw(0.0, w);
            for (int j = 0; j <= k; ++j)
                axis += binomial(k, j) * std::pow(iw, k - j) * gauss_monomial_deriv(a, j, t, inv_s2);
        }
        result *= axis;
    }
    result *= std::exp(-0.5 * expo * inv_s2);
    if (phase != 0.0) result *= std::polar(1.0, phase);
    return result;
}

/// Enumerates beta <= alpha (componentwise) in odometer order.
template <class F>
void for_each_subindex(const int* alpha, int dim, F&& f) {
    Index beta{};
    while (true) {
        f(beta);
        int d = dim - 1;
        while (d >= 0 && beta[static_cast<std::size_t>(d)] == alpha[d]) {
            beta[static_cast<std::size_t>(d)] = 0;
            --d;
        }
        if (d < 0) return;
        ++beta[static_cast<std::size_t>(d)];
    }
}

}  // namespace

// -- construction -------------------------------------------------------------

namespace {

int validated_dim(const TestFunctionSpec::Variant& v) {
    return std::visit(
        [](const auto& s) -> int {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, Constant>) {
                if (s.dim < 1 || s.dim > kMaxDim + 1) throw DomainError("constant: bad dimension");
                return s.dim;
            } else if constexpr (std::is_same_v<T, GaussHermite>) {
                const int dim = static_cast<int>(s.center.size());
                if (dim < 1 || dim > kMaxDim + 1) throw DomainError("gauss_hermite: bad dimension");
                if (!(s.sigma > 0.0) || !std::isfinite(s.sigma)) throw DomainError("gauss_hermite: sigma must be > 0");
                if (static_cast<int>(s.poly.size()) != dim) throw DomainError("gauss_hermite: poly/center size mismatch");
                if (!s.wave.empty() && static_cast<int>(s.wave.size()) != dim)
                    throw DomainError("gauss_hermite: wave/center size mismatch");
                for (int a : s.poly)
                    if (a < 0 || a >= kMaxPoly / 2) throw DomainError("gauss_hermite: polynomial degree out of range");
                return dim;
            } else if constexpr (std::is_same_v<T, FlatAtZero>) {
                if (!s.base) throw DomainError("flat_at_zero: missing base");
                if (s.axis < 0 || s.axis >= s.base->dim()) throw DomainError("flat_at_zero: axis out of range");
                if (!(s.scale > 0.0)) throw DomainError("flat_at_zero: scale must be > 0");
                return s.base->dim();
            } else if constexpr (std::is_same_v<T, Pullback>) {
                if (!s.base) throw DomainError("pullback: missing base");
                if (!(s.m > 0.0)) throw DomainError("pullback: mass must be > 0");
                if (s.base->dim() > kMaxDim) throw DomainError("pullback: dimension too large");
                return s.base->dim();
            } else if constexpr (std::is_same_v<T, XMinusDerivative>) {
                if (!s.base) throw DomainError("x_minus_derivative: missing base");
                if (s.order < 1) throw DomainError("x_minus_derivative: order must be >= 1");
                return s.base->dim();
            } else if constexpr (std::is_same_v<T, Sum>) {
                if (s.terms.empty()) throw DomainError("sum: no terms");
                const int dim = s.terms.front().spec->dim();
                for (const auto& t : s.terms)
                    if (!t.spec || t.spec->dim() != dim) throw DomainError("sum: dimension mismatch");
                return dim;
            } else {
                if (s.factors.empty()) throw DomainError("product: no factors");
                const int dim = s.factors.front()->dim();
                for (const auto& f : s.factors)
                    if (!f || f->dim() != dim) throw DomainError("product: dimension mismatch");
                return dim;
            }
        },
        v);
}

SpecPtr share(TestFunctionSpec s) { return std::make_shared<const TestFunctionSpec>(std::move(s)); }

}  // namespace

TestFunctionSpec::TestFunctionSpec(Variant v) : v_(std::move(v)), dim_(validated_dim(v_)) { init_fast_paths(); }

void TestFunctionSpec::init_fast_paths() {
    plain_center_ = nullptr;
    pull_base_ = nullptr;
    if (auto* g = std::get_if<GaussHermite>(&v_)) {
        if (!has_wave(*g)) g->wave.clear();
        if (g->wave.empty() && std::all_of(g->poly.begin(), g->poly.end(), [](int a) { return a == 0; })) {
            plain_center_ = g->center.data();
            plain_inv2s2_ = 0.5 / (g->sigma * g->sigma);
        }
    } else if (const auto* pb = std::get_if<Pullback>(&v_)) {
        pull_base_ = pb->base.get();
        pull_m2_ = pb->m * pb->m;
        pull_plus_ = pb->sign == Sheet::plus;
    }
}

TestFunctionSpec::TestFunctionSpec(const TestFunctionSpec& o) : TestFunctionSpec(Variant(o.v_)) {}

TestFunctionSpec& TestFunctionSpec::operator=(const TestFunctionSpec& o) {
    if (this != &o) *this = TestFunctionSpec(Variant(o.v_));
    return *this;
}

TestFunctionSpec::TestFunctionSpec(TestFunctionSpec&& o) noexcept : v_(Constant{}) { *this = std::move(o); }

TestFunctionSpec& TestFunctionSpec::operator=(TestFunctionSpec&& o) noexcept {
    v_ = std::move(o.v_);
    dim_ = o.dim_;
    init_fast_paths();
    o.plain_center_ = nullptr;
    o.pull_base_ = nullptr;
    return *this;
}

TestFunctionSpec TestFunctionSpec::constant(int dim, cplx value) { return TestFunctionSpec(Constant{dim, value}); }

TestFunctionSpec TestFunctionSpec::gaussian(std::vector<double> center, double sigma) {
    std::vector<int> poly(center.size(), 0);
    return TestFunctionSpec(GaussHermite{std::move(center), sigma, std::move(poly), {}});
}

TestFunctionSpec TestFunctionSpec::gauss_hermite(std::vector<double> center, double sigma, std::vector<int> poly,
                                                 std::vector<double> wave) {
    return TestFunctionSpec(GaussHermite{std::move(center), sigma, std::move(poly), std::move(wave)});
}

TestFunctionSpec TestFunctionSpec::flat_at_zero(TestFunctionSpec base, int axis, double scale) {
    return TestFunctionSpec(FlatAtZero{share(std::move(base)), axis, scale});
}

TestFunctionSpec TestFunctionSpec::pullback(Sheet sign, TestFunctionSpec base, double m) {
    return TestFunctionSpec(Pullback{share(std::move(base)), sign, m});
}

TestFunctionSpec TestFunctionSpec::x_minus_derivative(TestFunctionSpec base, int order) {
    return TestFunctionSpec(XMinusDerivative{share(std::move(base)), order});
}

TestFunctionSpec TestFunctionSpec::sum(std::vector<std::pair<cplx, TestFunctionSpec>> terms) {
    Sum s;
    for (auto& [c, t] : terms) s.terms.push_back(Term{c, share(std::move(t))});
    return TestFunctionSpec(std::move(s));
}

TestFunctionSpec TestFunctionSpec::product(std::vector<TestFunctionSpec> factors, cplx coef) {
    Product p;
    p.coef = coef;
    for (auto& f : factors) p.factors.push_back(share(std::move(f)));
    return TestFunctionSpec(std::move(p));
}

TestFunctionSpec TestFunctionSpec::scaled(cplx coef, TestFunctionSpec spec) {
    std::vector<std::pair<cplx, TestFunctionSpec>> t;
    t.emplace_back(coef, std::move(spec));
    return sum(std::move(t));
}

// -- evaluation -----------------------------------------------------------------

void TestFunctionSpec::throw_dim_mismatch(std::size_t got) const {
    throw DomainError("test function of dimension " + std::to_string(dim_) + " evaluated at a point of dimension " +
                      std::to_string(got));
}

cplx TestFunctionSpec::eval_general(const double* x) const {
    return std::visit(
        [&](const auto& s) -> cplx {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, Constant>) {
                return s.value;
            } else if constexpr (std::is_same_v<T, GaussHermite>) {
                return gh_eval(s, x, dim_);
            } else if constexpr (std::is_same_v<T, FlatAtZero>) {
                const double t = x[s.axis];
                if (t == 0.0) return 0.0;
                const double e = std::exp(-s.scale / (t * t));
                if (e == 0.0) return 0.0;
                return e * s.base->eval_unchecked(x);
            } else if constexpr (std::is_same_v<T, Pullback>) {
                return eval_pullback(x);
            } else if constexpr (std::is_same_v<T, XMinusDerivative>) {
                Index a{};
                a[0] = s.order;
                return s.base->deriv_unchecked(a.data(), x);
            } else if constexpr (std::is_same_v<T, Sum>) {
                cplx r = 0.0;
                for (const auto& t : s.terms) r += t.coef * t.spec->eval_unchecked(x);
                return r;
            } else {
                cplx r = s.coef;
                for (const auto& f : s.factors) r *= f->eval_unchecked(x);
                return r;
            }
        },
        v_);
}

cplx TestFunctionSpec::deriv(std::span<const int> alpha, std::span<const double> x) const {
    if (static_cast<int>(x.size()) != dim_ || static_cast<int>(alpha.size()) != dim_)
        throw DomainError("deriv: dimension mismatch");
    for (int a : alpha)
        if (a < 0) throw DomainError("deriv: negative multi-index");
    return deriv_unchecked(alpha.data(), x.data());
}

namespace {

cplx product_deriv(const std::vector<SpecPtr>& factors, std::size_t first, const int* alpha, const double* x,
                   int dim);

}  // namespace

cplx TestFunctionSpec::deriv_unchecked(const int* alpha, const double* x) const {
    const int ord = order(alpha, dim_);
    if (ord == 0) return eval_unchecked(x);
    return std::visit(
        [&](const auto& s) -> cplx {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, Constant>) {
                return 0.0;
            } else if constexpr (std::is_same_v<T, GaussHermite>) {
                return gh_deriv(s, alpha, x, dim_);
            } else if constexpr (std::is_same_v<T, FlatAtZero>) {
                const double t = x[s.axis];
                if (t == 0.0) return 0.0;
                const double u = 1.0 / t;
                const double e = std::exp(-s.scale * u * u);
                if (e == 0.0) return 0.0;
                const int k = alpha[s.axis];
                Index rest{};
                std::copy(alpha, alpha + dim_, rest.begin());
                cplx r = 0.0;
                for (int j = 0; j <= k; ++j) {
                    rest[static_cast<std::size_t>(s.axis)] = k - j;
                    r += binomial(k, j) * flat_factor_deriv(j, u, s.scale) * s.base->deriv_unchecked(rest.data(), x);
                }
                return r * e;
            } else if constexpr (std::is_same_v<T, Pullback>) {
                if (ord <= 2) {
                    const Jet2 j = jet2(std::span<const double>(x, static_cast<std::size_t>(dim_)));
                    int a = -1, b = -1;
                    for (int d = 0; d < dim_; ++d)
                        for (int c = 0; c < alpha[d]; ++c) (a < 0 ? a : b) = d;
                    if (b < 0) return j.grad[static_cast<std::size_t>(a)];
                    return j.hess[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
                }
                int axis = 0;
                while (alpha[axis] == 0) ++axis;
                Index lower{};
                std::copy(alpha, alpha + dim_, lower.begin());
                --lower[static_cast<std::size_t>(axis)];
                Point xs{};
                std::copy(x, x + dim_, xs.begin());
                auto at = [&](double shift) {
                    xs[static_cast<std::size_t>(axis)] = x[axis] + shift;
                    return deriv_unchecked(lower.data(), xs.data());
                };
                const double h = kFdStep;
                return (-at(2 * h) + 8.0 * at(h) - 8.0 * at(-h) + at(-2 * h)) / (12.0 * h);
            } else if constexpr (std::is_same_v<T, XMinusDerivative>) {
                Index a{};
                std::copy(alpha, alpha + dim_, a.begin());
                a[0] += s.order;
                return s.base->deriv_unchecked(a.data(), x);
            } else if constexpr (std::is_same_v<T, Sum>) {
                cplx r = 0.0;
                for (const auto& t : s.terms) r += t.coef * t.spec->deriv_unchecked(alpha, x);
                return r;
            } else {
                return s.coef * product_deriv(s.factors, 0, alpha, x, dim_);
            }
        },
        v_);
}

namespace {

cplx product_deriv(const std::vector<SpecPtr>& factors, std::size_t first, const int* alpha, const double* x,
                   int dim) {
    const auto& f = *factors[first];
    if (first + 1 == factors.size()) return f.deriv(std::span<const int>(alpha, static_cast<std::size_t>(dim)),
                                                   std::span<const double>(x, static_cast<std::size_t>(dim)));
    cplx r = 0.0;
    for_each_subindex(alpha, dim, [&](const Index& beta) {
        Index rest{};
        double c = 1.0;
        for (int d = 0; d < dim; ++d) {
            const auto ud = static_cast<std::size_t>(d);
            rest[ud] = alpha[d] - beta[ud];
            c *= binomial(alpha[d], beta[ud]);
        }
        const cplx lhs = f.deriv(std::span<const int>(beta.data(), static_cast<std::size_t>(dim)),
                                 std::span<const double>(x, static_cast<std::size_t>(dim)));
        if (lhs == cplx(0.0)) return;
        r += c * lhs * product_deriv(factors, first + 1, rest.data(), x, dim);
    });
    return r;
}

}  // namespace

Jet2 TestFunctionSpec::jet2(std::span<const double> x) const {
    if (static_cast<int>(x.size()) != dim_) throw DomainError("jet2: dimension mismatch");
    if (dim_ > kMaxDim) throw DomainError("jet2: dimension too large");
    const auto n = static_cast<std::size_t>(dim_);
    Jet2 out;
    if (const auto* pb = std::get_if<Pullback>(&v_)) {
        const double q0 = x[0];
        if (q0 == 0.0 || (pb->sign == Sheet::plus) != (q0 > 0.0)) return out;
        Point y{};
        nu_unsqueeze(pb->sign, x, pb->m, std::span<double>(y.data(), n));
        const Jet2 base = pb->base->jet2(std::span<const double>(y.data(), n));
        constexpr double r2 = 0.70710678118654752440;
        double s = 0.0;
        for (std::size_t j = 1; j < n; ++j) s += x[j] * x[j];
        const double sm = s + pb->m * pb->m;
        // Jacobian of nu: y_i = q_{i+1} (i < n-1), y_{n-1} = g(q).
        std::array<std::array<double, kMaxDim>, kMaxDim> jac{};
        std::array<double, kMaxDim> g1{};
        std::array<std::array<double, kMaxDim>, kMaxDim> g2{};
        g1[0] = (1.0 + sm / (2.0 * q0 * q0)) * r2;
        g2[0][0] = -sm / (q0 * q0 * q0) * r2;
        for (std::size_t j = 1; j < n; ++j) {
            g1[j] = -x[j] / q0 * r2;
            g2[0][j] = g2[j][0] = x[j] / (q0 * q0) * r2;
            g2[j][j] = -1.0 / q0 * r2;
        }
        for (std::size_t i = 0; i + 1 < n; ++i) jac[i][i + 1] = 1.0;
        jac[n - 1] = g1;
        out.value = base.value;
        for (std::size_t a = 0; a < n; ++a) {
            cplx g = 0.0;
            for (std::size_t i = 0; i < n; ++i) g += base.grad[i] * jac[i][a];
            out.grad[a] = g;
        }
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = a; b < n; ++b) {
                cplx h = base.grad[n - 1] * g2[a][b];
                for (std::size_t i = 0; i < n; ++i) {
                    if (jac[i][a] == 0.0) continue;
                    for (std::size_t k = 0; k < n; ++k) h += base.hess[i][k] * jac[i][a] * jac[k][b];
                }
                out.hess[a][b] = out.hess[b][a] = h;
            }
        return out;
    }
    if (const auto* sm = std::get_if<Sum>(&v_)) {
        for (const auto& t : sm->terms) {
            const Jet2 j = t.spec->jet2(x);
            out.value += t.coef * j.value;
            for (std::size_t a = 0; a < n; ++a) {
                out.grad[a] += t.coef * j.grad[a];
                for (std::size_t b = 0; b < n; ++b) out.hess[a][b] += t.coef * j.hess[a][b];
            }
        }
        return out;
    }
    Index alpha{};
    out.value = eval_unchecked(x.data());
    for (std::size_t a = 0; a < n; ++a) {
        alpha[a] = 1;
        out.grad[a] = deriv_unchecked(alpha.data(), x.data());
        for (std::size_t b = a; b < n; ++b) {
            ++alpha[b];
            out.hess[a][b] = out.hess[b][a] = deriv_unchecked(alpha.data(), x.data());
            --alpha[b];
        }
        alpha[a] = 0;
    }
    return out;
}

double TestFunctionSpec::sigma_max() const {
    return std::visit(
        [](const auto& s) -> double {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, Constant>) {
                return 1.0;
            } else if constexpr (std::is_same_v<T, GaussHermite>) {
                return s.sigma;
            } else if constexpr (std::is_same_v<T, Sum>) {
                double r = 0.0;
                for (const auto& t : s.terms) r = std::max(r, t.spec->sigma_max());
                return r;
            } else if constexpr (std::is_same_v<T, Product>) {
                double r = 0.0;
                for (const auto& f : s.factors) r = std::max(r, f->sigma_max());
                return r;
            } else {
                return s.base->sigma_max();
            }
        },
        v_);
}

// -- closed-form transforms -----------------------------------------------------

namespace {

using Expansion = std::vector<std::pair<cplx, GaussHermite>>;

void differentiate_axis0(const cplx& coef, const GaussHermite& g, Expansion& out) {
    const double w0 = g.wave.empty() ? 0.0 : g.wave[0];
    if (w0 != 0.0) out.emplace_back(coef * cplx(0.0, w0), g);
    if (g.poly[0] > 0) {
        GaussHermite lower = g;
        --lower.poly[0];
        out.emplace_back(coef * static_cast<double>(g.poly[0]), lower);
    }
    GaussHermite higher = g;
    ++higher.poly[0];
    out.emplace_back(-coef / (g.sigma * g.sigma), higher);
}

}  // namespace

std::optional<Expansion> expand_gauss_hermite(const TestFunctionSpec& spec) {
    return std::visit(
        [&](const auto& s) -> std::optional<Expansion> {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, GaussHermite>) {
                return Expansion{{cplx(1.0), s}};
            } else if constexpr (std::is_same_v<T, Sum>) {
                Expansion out;
                for (const auto& t : s.terms) {
                    auto sub = expand_gauss_hermite(*t.spec);
                    if (!sub) return std::nullopt;
                    for (auto& [c, g] : *sub) out.emplace_back(t.coef * c, std::move(g));
                }
                return out;
            } else if constexpr (std::is_same_v<T, XMinusDerivative>) {
                auto cur = expand_gauss_hermite(*s.base);
                if (!cur) return std::nullopt;
                for (int k = 0; k < s.order; ++k) {
                    Expansion next;
                    for (const auto& [c, g] : *cur) differentiate_axis0(c, g, next);
                    cur = std::move(next);
                }
                return cur;
            } else if constexpr (std::is_same_v<T, Product>) {
                // Only products of terms sharing one center combine in closed form.
                auto acc = expand_gauss_hermite(*s.factors.front());
                if (!acc) return std::nullopt;
                for (auto& [c, g] : *acc) c *= s.coef;
                for (std::size_t i = 1; i < s.factors.size(); ++i) {
                    auto rhs = expand_gauss_hermite(*s.factors[i]);
                    if (!rhs) return std::nullopt;
                    Expansion next;
                    for (const auto& [ca, ga] : *acc)
                        for (const auto& [cb, gb] : *rhs) {
                            if (ga.center != gb.center) return std::nullopt;
                            GaussHermite g = ga;
                            g.sigma = 1.0 / std::sqrt(1.0 / (ga.sigma * ga.sigma) + 1.0 / (gb.sigma * gb.sigma));
                            for (std::size_t d = 0; d < g.poly.size(); ++d) g.poly[d] += gb.poly[d];
                            if (!gb.wave.empty()) {
                                if (g.wave.empty()) g.wave.assign(g.center.size(), 0.0);
                                for (std::size_t d = 0; d < g.wave.size(); ++d) g.wave[d] += gb.wave[d];
                            }
                            next.emplace_back(ca * cb, std::move(g));
                        }
                    acc = std::move(next);
                }
                return acc;
            } else {
                return std::nullopt;
            }
        },
        spec.variant());
}

namespace {

/// Coefficients of Q_a with ∫ t^a e^{-t^2/(2σ^2)} e^{-itq} dt = Q_a(q) e^{-σ^2 q^2 / 2}.
std::vector<cplx> gauss_monomial_transform(int a, double sigma) {
    std::vector<cplx> q{cplx(sigma * std::sqrt(2.0 * std::numbers::pi))};
    const double s2 = sigma * sigma;
    for (int k = 0; k < a; ++k) {
        std::vector<cplx> next(q.size() + 1);
        for (std::size_t i = 1; i < q.size(); ++i) next[i - 1] += static_cast<double>(i) * q[i];
        for (std::size_t i = 0; i < q.size(); ++i) next[i + 1] -= s2 * q[i];
        for (auto& c : next) c *= cplx(0.0, 1.0);
        q = std::move(next);
    }
    return q;
}

/// Signed permutation L with F_conv f(p) = scale · F_euclid f(L p),
/// (L p)_d = sign[d] · p[perm[d]].
struct SignedPerm {
    std::vector<int> perm;
    std::vector<double> sign;
    double scale = 1.0;
};

SignedPerm convention_map(TransformConvention conv, int dim) {
    SignedPerm L;
    L.perm.resize(static_cast<std::size_t>(dim));
    L.sign.assign(static_cast<std::size_t>(dim), 1.0);
    for (int d = 0; d < dim; ++d) L.perm[static_cast<std::size_t>(d)] = d;
    const double inv2pi_n = std::pow(2.0 * std::numbers::pi, -dim);
    switch (conv) {
        case TransformConvention::euclid: break;
        case TransformConvention::euclid_inverse:
            std::fill(L.sign.begin(), L.sign.end(), -1.0);
            L.scale = inv2pi_n;
            break;
        case TransformConvention::partial_lc:
        case TransformConvention::minkowski_full: L.sign[0] = -1.0; break;
        case TransformConvention::partial_lc_inverse:
            for (int d = 1; d < dim; ++d) L.sign[static_cast<std::size_t>(d)] = -1.0;
            L.scale = inv2pi_n;
            break;
        case TransformConvention::lc_full:
            if (dim < 2) throw DomainError("lc_full transform needs 1+n >= 2 dimensions");
            L.perm[0] = dim - 1;
            L.perm[static_cast<std::size_t>(dim - 1)] = 0;
            L.sign[0] = -1.0;
            L.sign[static_cast<std::size_t>(dim - 1)] = -1.0;
            break;
    }
    return L;
}

/// term(L p) rewritten as a GaussHermite term in p.
std::pair<cplx, GaussHermite> compose(const std::pair<cplx, GaussHermite>& term, const SignedPerm& L) {
    const auto& [coef, g] = term;
    const std::size_t dim = g.center.size();
    GaussHermite out;
    out.sigma = g.sigma;
    out.center.assign(dim, 0.0);
    out.poly.assign(dim, 0);
    if (!g.wave.empty()) out.wave.assign(dim, 0.0);
    cplx c = coef;
    for (std::size_t d = 0; d < dim; ++d) {
        const auto to = static_cast<std::size_t>(L.perm[d]);
        const double s = L.sign[d];
        out.center[to] = s * g.center[d];
        out.poly[to] = g.poly[d];
        if (!g.wave.empty()) out.wave[to] = s * g.wave[d];
        if (s < 0.0 && g.poly[d] % 2 == 1) c = -c;
    }
    return {c, std::move(out)};
}

}  // namespace

std::optional<TestFunctionSpec> fourier_exact(const TestFunctionSpec& spec, TransformConvention conv) {
    const auto expansion = expand_gauss_hermite(spec);
    if (!expansion) return std::nullopt;
    const int dim = spec.dim();
    const SignedPerm L = convention_map(conv, dim);

    std::vector<std::pair<cplx, TestFunctionSpec>> terms;
    for (const auto& [coef, g] : *expansion) {
        const auto udim = static_cast<std::size_t>(dim);
        std::vector<std::vector<cplx>> axis_poly(udim);
        cplx constant = coef;
        for (std::size_t d = 0; d < udim; ++d) {
            axis_poly[d] = gauss_monomial_transform(g.poly[d], g.sigma);
            const double w = g.wave.empty() ? 0.0 : g.wave[d];
            constant *= std::polar(1.0, g.center[d] * w);
        }
        GaussHermite shape;
        shape.sigma = 1.0 / g.sigma;
        shape.center = g.wave.empty() ? std::vector<double>(udim, 0.0) : g.wave;
        shape.wave.resize(udim);
        for (std::size_t d = 0; d < udim; ++d) shape.wave[d] = -g.center[d];
        // Cartesian product of per-axis polynomial coefficients.
        std::vector<int> idx(udim, 0);
        while (true) {
            cplx c = constant;
            for (std::size_t d = 0; d < udim; ++d) c *= axis_poly[d][static_cast<std::size_t>(idx[d])];
            if (c != cplx(0.0)) {
                GaussHermite term = shape;
                term.poly = idx;
                auto [cc, gg] = compose({c * L.scale, std::move(term)}, L);
                terms.emplace_back(cc, TestFunctionSpec(std::move(gg)));
            }
            std::size_t d = udim;
            while (d > 0) {
                --d;
                if (++idx[d] < static_cast<int>(axis_poly[d].size())) break;
                idx[d] = 0;
                if (d == 0) { d = udim + 1; break; }
            }
            if (d == udim + 1) break;
        }
    }
    if (terms.empty()) terms.emplace_back(0.0, TestFunctionSpec::gaussian(std::vector<double>(static_cast<std::size_t>(dim), 0.0), 1.0));
    return TestFunctionSpec::sum(std::move(terms));
}

GridFunction sample(const TestFunctionSpec& spec, const Grid& grid) {
    grid.validate();
    if (spec.dim() != grid.dim())
        throw DomainError("sample: spec dimension " + std::to_string(spec.dim()) + " != grid dimension " +
                          std::to_string(grid.dim()));
    std::vector<cplx> values(grid.size());
    Point x{};
    const auto n = static_cast<std::size_t>(grid.dim());
    for (std::size_t i = 0; i < values.size(); ++i) {
        grid.node(i, std::span<double>(x.data(), n));
        values[i] = spec(std::span<const double>(x.data(), n));
    }
    return GridFunction(grid, std::move(values));
}

}  // namespace charcone
