#pragma once

// Complex functions on R^n carried either in closed form (any callable) or as
// samples on a grid with separable cubic Lagrange interpolation off the nodes.

#include <functional>
#include <memory>
#include <optional>
#include <span>

#include "charcone/grid.hpp"
#include "charcone/testfn.hpp"

namespace charcone {

class Density {
public:
    using Fn = std::function<cplx(std::span<const double>)>;

    /// The zero function on R^1.
    Density();

    static Density from_function(int dim, Fn fn);
    static Density from_spec(const TestFunctionSpec& spec);
    static Density from_grid(GridFunction gf);
    static Density constant(int dim, cplx value);
    static Density zero(int dim) { return constant(dim, 0.0); }

    int dim() const { return dim_; }
    bool is_grid() const { return grid_ != nullptr; }
    /// Throws DomainError unless is_grid().
    const GridFunction& grid_function() const;

    /// Closed form: the function. Grid form: the stored value at nodes and a
    /// 4^n-point Lagrange interpolant in between; points outside the sampled
    /// box raise NumericalError.
    cplx operator()(std::span<const double> p) const;

    /// Values on `grid`. A grid-form density asked for its own grid returns
    /// its samples unchanged.
    GridFunction sample(const Grid& grid) const;

private:
    Density(int dim, std::shared_ptr<const Fn> fn, std::shared_ptr<const GridFunction> grid);

    int dim_ = 1;
    std::shared_ptr<const Fn> fn_;
    std::shared_ptr<const GridFunction> grid_;
};

/// op(p, u(p)) pointwise. Grid-form input gives grid-form output on the same
/// grid; closed-form input gives a closure.
Density map(const Density& u, std::function<cplx(std::span<const double>, cplx)> op);

/// op(p, u(p), v(p)) pointwise. Grid form only when both inputs share a grid.
Density combine(const Density& u, const Density& v,
                std::function<cplx(std::span<const double>, cplx, cplx)> op);

/// Cubic Lagrange interpolation of grid samples at p; returns the stored
/// sample when p is a node.
cplx interpolate(const GridFunction& gf, std::span<const double> p);

}  // namespace charcone
