#include "charcone/density.hpp"

#include <cmath>
#include <string>

#include "charcone/error.hpp"

namespace charcone {

namespace {

void check_dim(int dim) {
    if (dim < 1 || dim > kMaxDim + 1) throw DomainError("density: unsupported dimension");
}

}  // namespace

Density::Density() : fn_(std::make_shared<const Fn>([](std::span<const double>) { return cplx(0.0); })) {}

Density::Density(int dim, std::shared_ptr<const Fn> fn, std::shared_ptr<const GridFunction> grid)
    : dim_(dim), fn_(std::move(fn)), grid_(std::move(grid)) {}

Density Density::from_function(int dim, Fn fn) {
    check_dim(dim);
    if (!fn) throw DomainError("density: empty function");
    return Density(dim, std::make_shared<const Fn>(std::move(fn)), nullptr);
}

Density Density::from_spec(const TestFunctionSpec& spec) {
    auto s = std::make_shared<const TestFunctionSpec>(spec);
    return from_function(spec.dim(), [s](std::span<const double> p) { return (*s)(p); });
}

Density Density::from_grid(GridFunction gf) {
    gf.grid().validate();
    const int dim = gf.grid().dim();
    return Density(dim, nullptr, std::make_shared<const GridFunction>(std::move(gf)));
}

Density Density::constant(int dim, cplx value) {
    check_dim(dim);
    return Density(dim, std::make_shared<const Fn>([value](std::span<const double>) { return value; }), nullptr);
}

const GridFunction& Density::grid_function() const {
    if (!grid_) throw DomainError("density is not in grid form");
    return *grid_;
}

cplx Density::operator()(std::span<const double> p) const {
    if (static_cast<int>(p.size()) != dim_)
        throw DomainError("density of dimension " + std::to_string(dim_) + " evaluated at a point of dimension " +
                          std::to_string(p.size()));
    if (grid_) return interpolate(*grid_, p);
    return (*fn_)(p);
}

GridFunction Density::sample(const Grid& grid) const {
    grid.validate();
    if (grid.dim() != dim_) throw DomainError("density sample: dimension mismatch");
    if (grid_ && grid_->grid() == grid) return *grid_;
    std::vector<cplx> values(grid.size());
    Point x{};
    const auto n = static_cast<std::size_t>(dim_);
    for (std::size_t i = 0; i < values.size(); ++i) {
        grid.node(i, std::span<double>(x.data(), n));
        values[i] = (*this)(std::span<const double>(x.data(), n));
    }
    return GridFunction(grid, std::move(values));
}

Density map(const Density& u, std::function<cplx(std::span<const double>, cplx)> op) {
    if (u.is_grid()) {
        const GridFunction& g = u.grid_function();
        const auto n = static_cast<std::size_t>(g.grid().dim());
        std::vector<cplx> values(g.size());
        Point x{};
        for (std::size_t i = 0; i < values.size(); ++i) {
            g.grid().node(i, std::span<double>(x.data(), n));
            values[i] = op(std::span<const double>(x.data(), n), g[i]);
        }
        return Density::from_grid(GridFunction(g.grid(), std::move(values)));
    }
    return Density::from_function(u.dim(), [u, op](std::span<const double> p) { return op(p, u(p)); });
}

Density combine(const Density& u, const Density& v,
                std::function<cplx(std::span<const double>, cplx, cplx)> op) {
    if (u.dim() != v.dim()) throw DomainError("combine: dimension mismatch");
    if (u.is_grid() && v.is_grid()) {
        const GridFunction& gu = u.grid_function();
        const GridFunction& gv = v.grid_function();
        if (!(gu.grid() == gv.grid())) throw DomainError("combine: grid mismatch");
        const auto n = static_cast<std::size_t>(gu.grid().dim());
        std::vector<cplx> values(gu.size());
        Point x{};
        for (std::size_t i = 0; i < values.size(); ++i) {
            gu.grid().node(i, std::span<double>(x.data(), n));
            values[i] = op(std::span<const double>(x.data(), n), gu[i], gv[i]);
        }
        return Density::from_grid(GridFunction(gu.grid(), std::move(values)));
    }
    return Density::from_function(u.dim(), [u, v, op](std::span<const double> p) { return op(p, u(p), v(p)); });
}

cplx interpolate(const GridFunction& gf, std::span<const double> p) {
    const Grid& g = gf.grid();
    const auto n = static_cast<std::size_t>(g.dim());
    if (p.size() != n) throw DomainError("interpolate: dimension mismatch");
    std::array<std::size_t, kMaxDim + 1> first{};
    std::array<std::array<double, 4>, kMaxDim + 1> w{};
    std::array<std::size_t, kMaxDim + 1> width{};
    for (std::size_t d = 0; d < n; ++d) {
        const AxisSpec& a = g.axes[d];
        const double t = p[d] / a.step + a.origin();
        const double last = static_cast<double>(a.count - 1);
        if (!(t >= 0.0 && t <= last))
            throw NumericalError("interpolation outside the sampled range on axis " + std::to_string(d) + " (" +
                                 std::to_string(p[d]) + " not in [" + std::to_string(a.node(0)) + ", " +
                                 std::to_string(a.max()) + "])");
        const auto j = static_cast<std::size_t>(std::floor(t));
        const auto jr = static_cast<std::size_t>(std::lround(t));
        if (a.node(jr) == p[d]) {
            first[d] = jr;
            width[d] = 1;
            w[d][0] = 1.0;
            continue;
        }
        const std::size_t k = std::min(a.count - 1, j);
        std::size_t lo = k >= 1 ? k - 1 : 0;
        if (a.count < 4) lo = 0;
        else if (lo + 4 > a.count) lo = a.count - 4;
        const std::size_t m = std::min<std::size_t>(4, a.count);
        first[d] = lo;
        width[d] = m;
        for (std::size_t i = 0; i < m; ++i) {
            double l = 1.0;
            const double ti = static_cast<double>(lo + i);
            for (std::size_t q = 0; q < m; ++q) {
                if (q == i) continue;
                const double tq = static_cast<double>(lo + q);
                l *= (t - tq) / (ti - tq);
            }
            w[d][i] = l;
        }
    }
    const auto strides = g.strides();
    std::array<std::size_t, kMaxDim + 1> idx{};
    cplx sum = 0.0;
    while (true) {
        double wt = 1.0;
        std::size_t flat = 0;
        for (std::size_t d = 0; d < n; ++d) {
            wt *= w[d][idx[d]];
            flat += (first[d] + idx[d]) * strides[d];
        }
        sum += wt * gf[flat];
        std::size_t d = n;
        while (d > 0) {
            --d;
            if (++idx[d] < width[d]) break;
            idx[d] = 0;
            if (d == 0) return sum;
        }
    }
}

}  // namespace charcone
