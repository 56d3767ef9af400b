#include "charcone/verify.hpp"

#include <cmath>
#include <numbers>
#include <random>

#include "charcone/error.hpp"
#include "charcone/evolution.hpp"
#include "charcone/gfn_io.hpp"
#include "charcone/pauli_jordan.hpp"
#include "charcone/seminorms.hpp"
#include "charcone/transform.hpp"

namespace charcone {

namespace {

class Suite {
public:
    Suite(std::string name, const VerifyOptions& opts, std::vector<CheckResult>& out)
        : name_(std::move(name)), opts_(opts), out_(out) {}

    void at_most(const std::string& check, double measured, double tol) {
        const double t = opts_.tol > 0.0 ? opts_.tol : tol;
        out_.push_back({name_, check, measured, t, measured <= t, "<="});
    }
    void at_least(const std::string& check, double measured, double bound) {
        out_.push_back({name_, check, measured, bound, measured >= bound, ">="});
    }

private:
    std::string name_;
    const VerifyOptions& opts_;
    std::vector<CheckResult>& out_;
};

Grid momentum_grid(const ModelParams& P, GridKind kind) {
    const std::size_t count = P.n == 1 ? 1024 : (P.n == 2 ? 64 : 24);
    const double step = P.n == 1 ? 0.03 : 0.5;
    return uniform_grid(P, kind, count, step);
}

std::vector<double> zeros(int n) { return std::vector<double>(static_cast<std::size_t>(n), 0.0); }

TestFunctionSpec random_gaussian(std::mt19937_64& rng, int dim, double spread, double smin, double smax) {
    std::uniform_real_distribution<double> c(-spread, spread), s(smin, smax);
    std::vector<double> center(static_cast<std::size_t>(dim));
    for (auto& v : center) v = c(rng);
    return TestFunctionSpec::gaussian(std::move(center), s(rng));
}

void roundtrip(const VerifyOptions& o, std::vector<CheckResult>& out) {
    Suite s("roundtrip", o, out);
    const ModelParams P = ModelParams::make(o.m, o.n);
    std::mt19937_64 rng(20240601);

    // ν∘μ and μ∘ν
    std::normal_distribution<double> g(0.0, 2.0);
    double worst = 0.0;
    const auto n = static_cast<std::size_t>(P.n);
    for (int i = 0; i < 10000; ++i) {
        Point p{}, q{}, r{};
        for (std::size_t d = 0; d < n; ++d) p[d] = g(rng);
        const Sheet sh = i % 2 == 0 ? Sheet::plus : Sheet::minus;
        mu_squeeze(sh, std::span<const double>(p.data(), n), P.m, std::span<double>(q.data(), n));
        nu_unsqueeze(sh, std::span<const double>(q.data(), n), P.m, std::span<double>(r.data(), n));
        for (std::size_t d = 0; d < n; ++d) worst = std::max(worst, std::abs(r[d] - p[d]) / std::max(1.0, std::abs(p[d])));
    }
    s.at_most("squeeze_inverse", worst, 1e-12);

    // Cauchy data -> densities -> x0 = 0 slices
    const Grid grid = momentum_grid(P, GridKind::minkowski_momentum);
    const auto u0 = sample(TestFunctionSpec::gaussian(zeros(P.n), 0.7), grid);
    const auto u1 = sample(TestFunctionSpec::gauss_hermite(zeros(P.n), 1.1, std::vector<int>(n, 1)), grid);
    const CauchyData data{Density::from_grid(u0), Density::from_grid(u1), P};
    const MassShellDensityM msd = from_cauchy(data);
    s.at_most("cauchy_u0", relative_sup_error(evolve_profile(msd, 0.0).profile.values(), u0.values()), 1e-13);
    s.at_most("cauchy_u1", relative_sup_error(d0_profile(msd, 0.0).profile.values(), u1.values()), 1e-13);

    // characteristic data <-> LC density, bitwise
    const Grid lc = momentum_grid(P, GridKind::lc_momentum);
    std::normal_distribution<double> z(0.0, 1.0);
    std::vector<cplx> vals(lc.size());
    for (auto& v : vals) v = {z(rng), z(rng)};
    const GridFunction beta(lc, vals);
    const CharacteristicData cd{Density::from_grid(beta), P};
    const auto back = tame_restrict(solve_characteristic(cd)).u0_lc_hat.grid_function();
    std::size_t diff = 0;
    for (std::size_t i = 0; i < beta.size(); ++i) diff += back[i] != beta[i];
    s.at_most("characteristic_solve_then_restrict_mismatches", static_cast<double>(diff), 0.0);
    const auto msd_lc = MassShellDensityLC::from_beta(Density::from_grid(beta), P);
    const auto again = solve_characteristic(tame_restrict(msd_lc)).beta().grid_function();
    diff = 0;
    for (std::size_t i = 0; i < beta.size(); ++i) diff += again[i] != beta[i];
    s.at_most("characteristic_restrict_then_solve_mismatches", static_cast<double>(diff), 0.0);
}

std::vector<int> multi(int n, int first = 0) {
    std::vector<int> a(static_cast<std::size_t>(n), 0);
    a[0] = first;
    return a;
}

Grid seminorm_base(const ModelParams& P) {
    // p+ step 0.02 resolves the narrowest weighted peak (k = -8, |alpha| = 2,
    // width ~0.018 near p+ ~ 0.09) to within a factor 2 on the coarsest grid.
    std::vector<AxisSpec> axes{AxisSpec::half_step(0.02, 600)};
    for (int d = 1; d < P.n; ++d) axes.push_back(AxisSpec::centered(1.0, P.n == 2 ? 9 : 5));
    return make_grid(P, GridKind::lc_momentum, std::move(axes));
}

void seminorms(const VerifyOptions& o, std::vector<CheckResult>& out) {
    Suite s("seminorms", o, out);
    const ModelParams P = ModelParams::make(o.m, o.n);
    const auto ladder = refinement_ladder(seminorm_base(P), 3, 11);
    const auto pull = TestFunctionSpec::pullback(Sheet::plus, TestFunctionSpec::gaussian(zeros(P.n), 1.0), P.m);
    const std::vector<int> beta0(static_cast<std::size_t>(P.n - 1), 0);
    double worst_growth = 0.0;
    for (int k = -8; k <= 8; ++k) {
        for (int a = 0; a <= 2; ++a) {
            const auto alpha = multi(P.n, a);
            const auto c = ladder_certificate(ladder, [&](const Grid& g) { return squeezed_seminorm(pull, k, beta0, alpha, g); });
            worst_growth = std::max(worst_growth, c.max_growth);
        }
    }
    s.at_most("pullback_gaussian_max_growth", worst_growth, kBoundedGrowth * (1.0 - 1e-12));

    const auto flat = TestFunctionSpec::flat_at_zero(TestFunctionSpec::gaussian(zeros(P.n), 1.0), 0, 1.0);
    const auto cf = ladder_certificate(ladder, [&](const Grid& g) { return squeezed_seminorm(flat, -4, beta0, multi(P.n), g); });
    s.at_most("flat_at_zero_k-4_max_growth", cf.max_growth, kBoundedGrowth * (1.0 - 1e-12));

    const auto gauss = TestFunctionSpec::gaussian(zeros(P.n), 1.0);
    const auto cg = ladder_certificate(ladder, [&](const Grid& g) { return squeezed_seminorm(gauss, -1, beta0, multi(P.n), g); });
    s.at_least("gaussian_k-1_min_growth", cg.min_growth, kDivergentGrowth);
}

void multiplicators(const VerifyOptions& o, std::vector<CheckResult>& out) {
    Suite s("multiplicators", o, out);
    const ModelParams P = ModelParams::make(o.m, o.n);
    const Grid g = seminorm_base(P);
    const auto a0 = multi(P.n);
    s.at_most("theta_plus_N0", multiplicator_check(theta_multiplier(Sheet::plus), a0, 0, 1.0, g).max_ratio, 1.0);
    s.at_most("theta_minus_N0", multiplicator_check(theta_multiplier(Sheet::minus), a0, 0, 1.0, g).max_ratio, 1.0);
    s.at_most("inverse_p_plus_N1", multiplicator_check(inverse_p_plus_multiplier(), a0, 1, 1.0, g).max_ratio, 1.0);
    for (int k = -3; k <= -1; ++k)
        s.at_most("abs_p_plus_pow" + std::to_string(k) + "_N" + std::to_string(-k),
                  multiplicator_check(p_plus_power_multiplier(k), a0, -k, 1.0, g).max_ratio, 1.0);
    const double pmax = g.axes.front().max();
    for (int k = 0; k <= 3; ++k)
        s.at_most("abs_p_plus_pow" + std::to_string(k) + "_N0",
                  multiplicator_check(p_plus_power_multiplier(k), a0, 0, std::pow(pmax, k), g).max_ratio,
                  std::pow(pmax, k) * (1.0 + 1e-12));
    std::vector<AxisSpec> small{AxisSpec::half_step(0.25, 16)};
    for (int d = 1; d < P.n; ++d) small.push_back(AxisSpec::centered(0.5, 9));
    const Grid gs = make_grid(P, GridKind::lc_momentum, std::move(small));
    s.at_most("lc_omega_N2", multiplicator_check(lc_omega_multiplier(P.m), a0, 2, 1.0, gs).max_ratio, 1.0);
}

void transform2(const VerifyOptions& o, std::vector<CheckResult>& out) {
    Suite s("transform2", o, out);
    const ModelParams P = ModelParams::make(o.m, o.n);
    QuadOptions q;
    q.level = o.level > 0 ? o.level : (P.n == 1 ? 7 : 3);
    std::mt19937_64 rng(77);
    const int pairs = P.n == 1 ? 20 : 2;
    double worst = 0.0;
    for (int i = 0; i < pairs; ++i) {
        const auto a = random_gaussian(rng, P.n, 1.0, 0.6, 1.5);
        const auto f = random_gaussian(rng, P.n + 1, 1.0, 0.6, 1.5);
        const Sheet sh = i % 2 == 0 ? Sheet::plus : Sheet::minus;
        q.sigma_max = std::max(a.sigma_max(), f.sigma_max());
        auto f_kappa = [&](std::span<const double> x) {
            Point y{};
            kappa(x, std::span<double>(y.data(), x.size()));
            return f(std::span<const double>(y.data(), x.size()));
        };
        const cplx lhs = pair_minkowski_delta(a, f_kappa, sh, P, q).value;
        const auto b = TestFunctionSpec::pullback(sh, a, P.m);
        const cplx rhs = pair_lc_delta(b, f, sh == Sheet::plus ? LCSide::plus : LCSide::minus, P, q).value;
        worst = std::max(worst, std::abs(lhs - rhs) / std::abs(lhs));
    }
    s.at_most("pairing_identity_rel", worst, 1e-8);
}

void pauli_jordan(const VerifyOptions& o, std::vector<CheckResult>& out) {
    Suite s("pauli-jordan", o, out);
    QuadOptions q;
    q.level = o.level > 0 ? o.level : (o.n == 1 ? 7 : 4);
    const std::vector<double> masses{0.5, 1.0, 2.0};
    std::vector<double> probe_center = zeros(o.n);
    std::vector<int> poly(static_cast<std::size_t>(o.n), 0);
    poly[0] = 1;
    const auto f = TestFunctionSpec::gauss_hermite(probe_center, std::sqrt(0.5), poly);
    const auto probe = TestFunctionSpec::scaled(-2.0, f);
    const double tol = o.n == 1 ? 1e-8 : 1e-6;
    double spread = 0.0;
    cplx first = 0.0;
    for (std::size_t i = 0; i < masses.size(); ++i) {
        const ModelParams P = ModelParams::make(masses[i], o.n);
        const cplx a = pj_pairing_quadrature(probe, P, q).value;
        const cplx b = pj_pairing_closed_form(probe, P, q).value;
        const cplx c = pj_pairing_pipeline(probe, P, q).value;
        const std::string tag = "_m" + format_double(masses[i]);
        s.at_most("routes_delta" + tag, std::abs(a - b), tol);
        s.at_most("pipeline_delta" + tag, std::abs(c - b), tol);
        if (i == 0) first = b;
        spread = std::max({spread, std::abs(a - first), std::abs(b - first), std::abs(c - first)});
    }
    s.at_most("closed_form_value", std::abs(first - cplx(-0.5)), tol);
    s.at_most("mass_independence", spread, tol);
}

}  // namespace

std::vector<CheckResult> run_suite(std::string_view suite, const VerifyOptions& opts) {
    std::vector<CheckResult> out;
    if (suite == "all") {
        for (auto s : kSuites) {
            auto part = run_suite(s, opts);
            out.insert(out.end(), part.begin(), part.end());
        }
        return out;
    }
    if (suite == "roundtrip") roundtrip(opts, out);
    else if (suite == "seminorms") seminorms(opts, out);
    else if (suite == "multiplicators") multiplicators(opts, out);
    else if (suite == "transform2") transform2(opts, out);
    else if (suite == "pauli-jordan") pauli_jordan(opts, out);
    else throw DomainError("unknown suite '" + std::string(suite) + "'");
    return out;
}

std::string format_check(const CheckResult& c) {
    return std::string(c.pass ? "PASS " : "FAIL ") + c.suite + "/" + c.name + " measured=" + format_double(c.measured) +
           " " + c.relation + " " + format_double(c.tolerance);
}

}  // namespace charcone
