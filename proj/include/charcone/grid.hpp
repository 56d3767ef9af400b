#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "charcone/kinematics.hpp"

namespace charcone {

using cplx = std::complex<double>;

enum class AxisOffset { centered, half_step };

/// Uniform axis. Node j sits at (j - origin)·step with origin = floor(count/2)
/// for centered axes (a node at 0) and origin = (count-1)/2 for half-step axes
/// (nodes at ±step/2, ±3step/2, ...; count must be even).
///
/// Writing nodes as (integer or half-integer)·step keeps mirrored nodes
/// exact negatives of each other.
struct AxisSpec {
    double min = 0.0;
    double step = 1.0;
    std::size_t count = 2;
    AxisOffset offset = AxisOffset::centered;

    static AxisSpec centered(double step, std::size_t count);
    static AxisSpec half_step(double step, std::size_t count);

    double origin() const;
    double node(std::size_t j) const { return (static_cast<double>(j) - origin()) * step; }
    double max() const { return node(count - 1); }

    /// Checks step > 0, count >= 2, half-step count even and that `min`
    /// agrees with the offset rule.
    void validate() const;

    bool operator==(const AxisSpec&) const = default;
};

enum class GridKind { minkowski_momentum, lc_momentum, minkowski_position, lc_position };

std::string_view to_string(GridKind kind);
GridKind grid_kind_from_string(std::string_view s);
std::string_view to_string(AxisOffset offset);
AxisOffset axis_offset_from_string(std::string_view s);

inline bool is_lightcone(GridKind k) { return k == GridKind::lc_momentum || k == GridKind::lc_position; }
inline bool is_momentum(GridKind k) {
    return k == GridKind::lc_momentum || k == GridKind::minkowski_momentum;
}

/// Tensor grid over R^n; flat index is row-major with the last axis fastest.
struct Grid {
    ModelParams params;
    std::vector<AxisSpec> axes;
    GridKind kind = GridKind::minkowski_momentum;

    /// Validates params, axis count == n, every axis, and the lc-momentum
    /// rule that axis 0 (p+) is half-step so p+ = 0 is never a node.
    void validate() const;

    int dim() const { return static_cast<int>(axes.size()); }
    std::size_t size() const;
    void node(std::size_t flat, std::span<double> out) const;
    std::vector<std::size_t> strides() const;

    bool operator==(const Grid&) const = default;
};

/// Convenience constructor; validates.
Grid make_grid(const ModelParams& params, GridKind kind, std::vector<AxisSpec> axes);

/// Centered axes on every dimension except (for lc kinds) a half-step axis 0.
Grid uniform_grid(const ModelParams& params, GridKind kind, std::size_t count, double step);

class GridFunction {
public:
    GridFunction() = default;
    /// Throws DomainError on size mismatch or non-finite values.
    GridFunction(Grid grid, std::vector<cplx> values);
    static GridFunction zeros(Grid grid);

    const Grid& grid() const { return grid_; }
    std::span<const cplx> values() const { return values_; }
    std::size_t size() const { return values_.size(); }
    const cplx& operator[](std::size_t i) const { return values_[i]; }

private:
    Grid grid_;
    std::vector<cplx> values_;
};

/// max_i |values_i|
double sup_norm(std::span<const cplx> values);
/// max_i |a_i - b_i| / max(max_i |b_i|, tiny)
double relative_sup_error(std::span<const cplx> a, std::span<const cplx> b);

}  // namespace charcone
