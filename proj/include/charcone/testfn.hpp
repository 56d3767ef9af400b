#pragma once

// Closed-form rapidly decreasing test functions: Gauss-Hermite monomials,
// functions flat at p+ = 0, squeezing pullbacks, x- derivatives, and sums and
// products of these.

#include <array>
#include <cmath>
#include <complex>
#include <memory>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "charcone/conventions.hpp"
#include "charcone/grid.hpp"
#include "charcone/kinematics.hpp"

namespace charcone {

class TestFunctionSpec;
using SpecPtr = std::shared_ptr<const TestFunctionSpec>;

struct Constant {
    int dim = 1;
    cplx value{1.0, 0.0};
};

/// e^{i wave·x} (x-c)^poly exp(-|x-c|^2 / (2 sigma^2)); `wave` may be empty
/// (no modulation).
struct GaussHermite {
    std::vector<double> center;
    double sigma = 1.0;
    std::vector<int> poly;
    std::vector<double> wave;
};

/// base(x) · exp(-scale / t^2) with t = x[axis], extended by 0 at t = 0.
struct FlatAtZero {
    SpecPtr base;
    int axis = 0;
    double scale = 1.0;
};

/// base ∘ nu_{sign} on the half-space {sign·p+ > 0}, 0 elsewhere (and at p+ = 0).
struct Pullback {
    SpecPtr base;
    Sheet sign = Sheet::plus;
    double m = 1.0;
};

/// ∂^order base / ∂x-^order, x- being axis 0.
struct XMinusDerivative {
    SpecPtr base;
    int order = 1;
};

struct Term {
    cplx coef{1.0, 0.0};
    SpecPtr spec;
};

struct Sum {
    std::vector<Term> terms;
};

struct Product {
    cplx coef{1.0, 0.0};
    std::vector<SpecPtr> factors;
};

/// Value, gradient and Hessian at a point (first dim entries used).
struct Jet2 {
    cplx value;
    std::array<cplx, kMaxDim> grad{};
    std::array<std::array<cplx, kMaxDim>, kMaxDim> hess{};
};

class TestFunctionSpec {
public:
    using Variant = std::variant<Constant, GaussHermite, FlatAtZero, Pullback, XMinusDerivative, Sum, Product>;

    /// Validates the variant (positive widths, consistent dimensions, ...).
    explicit TestFunctionSpec(Variant v);
    TestFunctionSpec(const TestFunctionSpec& other);
    TestFunctionSpec& operator=(const TestFunctionSpec& other);
    TestFunctionSpec(TestFunctionSpec&& other) noexcept;
    TestFunctionSpec& operator=(TestFunctionSpec&& other) noexcept;
    ~TestFunctionSpec() = default;

    static TestFunctionSpec constant(int dim, cplx value);
    static TestFunctionSpec gaussian(std::vector<double> center, double sigma);
    static TestFunctionSpec gauss_hermite(std::vector<double> center, double sigma, std::vector<int> poly,
                                          std::vector<double> wave = {});
    static TestFunctionSpec flat_at_zero(TestFunctionSpec base, int axis, double scale);
    static TestFunctionSpec pullback(Sheet sign, TestFunctionSpec base, double m);
    static TestFunctionSpec x_minus_derivative(TestFunctionSpec base, int order);
    static TestFunctionSpec sum(std::vector<std::pair<cplx, TestFunctionSpec>> terms);
    static TestFunctionSpec product(std::vector<TestFunctionSpec> factors, cplx coef = 1.0);
    static TestFunctionSpec scaled(cplx coef, TestFunctionSpec spec);

    const Variant& variant() const { return v_; }
    int dim() const { return dim_; }

    /// Exact closed-form value. Throws DomainError on dimension mismatch.
    cplx operator()(std::span<const double> x) const {
        if (static_cast<int>(x.size()) != dim_) throw_dim_mismatch(x.size());
        return eval_unchecked(x.data());
    }
    cplx eval(std::span<const double> x) const { return (*this)(x); }

    /// ∂^alpha at x. Exact for every variant except Pullback with |alpha| > 2,
    /// which applies a 4th-order central difference (h = 1e-4) on top of the
    /// exact second derivatives; truncation error O(h^4).
    cplx deriv(std::span<const int> alpha, std::span<const double> x) const;

    /// All derivatives of order <= 2 at once.
    Jet2 jet2(std::span<const double> x) const;

    /// Largest Gaussian width among the leaves (1 if none), used for
    /// quadrature extents.
    double sigma_max() const;

private:
    cplx eval_unchecked(const double* x) const {
        if (pull_base_ != nullptr) return eval_pullback(x);
        if (plain_center_ == nullptr) return eval_general(x);
        double e = 0.0;
        for (int d = 0; d < dim_; ++d) {
            const double t = x[d] - plain_center_[d];
            e += t * t;
        }
        return std::exp(-e * plain_inv2s2_);
    }
    cplx eval_general(const double* x) const;
    void init_fast_paths();

    // Pullback: b(pt) = base(nu(pt)) on its own half-space, 0 elsewhere.
    cplx eval_pullback(const double* x) const {
        const double pp = x[0];
        if (pp == 0.0 || pull_plus_ != (pp > 0.0)) return 0.0;
        Point y{};
        double q = 0.0;
        for (int i = 1; i < dim_; ++i) {
            y[i - 1] = x[i];
            q += x[i] * x[i];
        }
        y[dim_ - 1] = (pp - (q + pull_m2_) / (2.0 * pp)) * kInvSqrt2;
        return pull_base_->eval_unchecked(y.data());
    }
    [[noreturn]] void throw_dim_mismatch(std::size_t got) const;
    cplx deriv_unchecked(const int* alpha, const double* x) const;

    Variant v_;
    int dim_ = 0;
    // Fast path for unmodulated degree-0 Gaussians.
    const double* plain_center_ = nullptr;
    double plain_inv2s2_ = 0.0;
    const TestFunctionSpec* pull_base_ = nullptr;
    double pull_m2_ = 0.0;
    bool pull_plus_ = true;
};

/// Expands GaussHermite / Sum / XMinusDerivative-of-expandable into a flat sum
/// of GaussHermite monomial terms; nullopt for anything else.
std::optional<std::vector<std::pair<cplx, GaussHermite>>> expand_gauss_hermite(const TestFunctionSpec& spec);

/// Closed-form transform under `conv` (euclid, partial_lc, minkowski_full,
/// lc_full). Available for GaussHermite and sums/x- derivatives of them;
/// nullopt otherwise (callers fall back to a numeric DFT).
std::optional<TestFunctionSpec> fourier_exact(const TestFunctionSpec& spec,
                                              TransformConvention conv = TransformConvention::euclid);

/// Pointwise evaluation on every node. Throws DomainError on dimension mismatch.
GridFunction sample(const TestFunctionSpec& spec, const Grid& grid);

}  // namespace charcone
