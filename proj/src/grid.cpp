#include "charcone/grid.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "charcone/error.hpp"

namespace charcone {

AxisSpec AxisSpec::centered(double step, std::size_t count) {
    AxisSpec a;
    a.step = step;
    a.count = count;
    a.offset = AxisOffset::centered;
    a.min = a.node(0);
    a.validate();
    return a;
}

AxisSpec AxisSpec::half_step(double step, std::size_t count) {
    AxisSpec a;
    a.step = step;
    a.count = count;
    a.offset = AxisOffset::half_step;
    a.min = a.node(0);
    a.validate();
    return a;
}

double AxisSpec::origin() const {
    if (offset == AxisOffset::centered) return static_cast<double>(count / 2);
    return 0.5 * static_cast<double>(count - 1);
}

void AxisSpec::validate() const {
    if (!(step > 0.0) || !std::isfinite(step)) throw DomainError("axis step must be finite and > 0");
    if (count < 2) throw DomainError("axis count must be >= 2");
    if (offset == AxisOffset::half_step && count % 2 != 0)
        throw DomainError("half-step axis needs an even count (otherwise 0 is a node)");
    const double expected = node(0);
    if (!std::isfinite(min) || std::abs(min - expected) > 1e-12 * std::max(1.0, std::abs(expected)))
        throw DomainError("axis min " + std::to_string(min) + " inconsistent with " +
                          std::string(to_string(offset)) + " offset (expected " +
                          std::to_string(expected) + ")");
}

std::string_view to_string(GridKind kind) {
    switch (kind) {
        case GridKind::minkowski_momentum: return "minkowski-momentum";
        case GridKind::lc_momentum: return "lc-momentum";
        case GridKind::minkowski_position: return "minkowski-position";
        case GridKind::lc_position: return "lc-position";
    }
    return "?";
}

GridKind grid_kind_from_string(std::string_view s) {
    if (s == "minkowski-momentum") return GridKind::minkowski_momentum;
    if (s == "lc-momentum") return GridKind::lc_momentum;
    if (s == "minkowski-position") return GridKind::minkowski_position;
    if (s == "lc-position") return GridKind::lc_position;
    throw FormatError("unknown grid kind '" + std::string(s) + "'");
}

std::string_view to_string(AxisOffset offset) {
    return offset == AxisOffset::centered ? "centered" : "half-step";
}

AxisOffset axis_offset_from_string(std::string_view s) {
    if (s == "centered") return AxisOffset::centered;
    if (s == "half-step") return AxisOffset::half_step;
    throw FormatError("unknown axis offset '" + std::string(s) + "'");
}

void Grid::validate() const {
    params.validate();
    if (dim() != params.n)
        throw DomainError("grid has " + std::to_string(dim()) + " axes but n = " + std::to_string(params.n));
    for (const auto& a : axes) a.validate();
    if (kind == GridKind::lc_momentum && axes[0].offset != AxisOffset::half_step)
        throw DomainError("lc-momentum grid requires a half-step p+ axis (p+ = 0 must not be a node)");
}

std::size_t Grid::size() const {
    std::size_t s = 1;
    for (const auto& a : axes) s *= a.count;
    return s;
}

std::vector<std::size_t> Grid::strides() const {
    std::vector<std::size_t> st(axes.size(), 1);
    for (int d = dim() - 2; d >= 0; --d) st[d] = st[d + 1] * axes[d + 1].count;
    return st;
}

void Grid::node(std::size_t flat, std::span<double> out) const {
    for (int d = dim() - 1; d >= 0; --d) {
        const auto& a = axes[static_cast<std::size_t>(d)];
        out[static_cast<std::size_t>(d)] = a.node(flat % a.count);
        flat /= a.count;
    }
}

Grid make_grid(const ModelParams& params, GridKind kind, std::vector<AxisSpec> axes) {
    Grid g{params, std::move(axes), kind};
    g.validate();
    return g;
}

Grid uniform_grid(const ModelParams& params, GridKind kind, std::size_t count, double step) {
    std::vector<AxisSpec> axes;
    for (int d = 0; d < params.n; ++d) {
        if (d == 0 && kind == GridKind::lc_momentum)
            axes.push_back(AxisSpec::half_step(step, count));
        else
            axes.push_back(AxisSpec::centered(step, count));
    }
    return make_grid(params, kind, std::move(axes));
}

GridFunction::GridFunction(Grid grid, std::vector<cplx> values)
    : grid_(std::move(grid)), values_(std::move(values)) {
    grid_.validate();
    if (values_.size() != grid_.size())
        throw DomainError("grid function has " + std::to_string(values_.size()) + " values, grid has " +
                          std::to_string(grid_.size()) + " nodes");
    for (const auto& v : values_)
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
            throw DomainError("grid function values must be finite");
}

GridFunction GridFunction::zeros(Grid grid) {
    const std::size_t n = grid.size();
    return GridFunction(std::move(grid), std::vector<cplx>(n));
}

double sup_norm(std::span<const cplx> values) {
    double s = 0.0;
    for (const auto& v : values) s = std::max(s, std::abs(v));
    return s;
}

double relative_sup_error(std::span<const cplx> a, std::span<const cplx> b) {
    if (a.size() != b.size()) throw DomainError("relative_sup_error: size mismatch");
    double diff = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) diff = std::max(diff, std::abs(a[i] - b[i]));
    return diff / std::max(sup_norm(b), std::numeric_limits<double>::min());
}

}  // namespace charcone
