#pragma once

// GFN1 binary grid files and CSV export.
//
// GFN1 layout:
//   line 1   "GFN1"
//   line 2   {"version":1,"kind":...,"m":...,"n":...,"axes":[{"min","step","count","offset"}, ...]}
//   payload  count(grid) pairs of little-endian IEEE-754 doubles (re, im),
//            row-major, last axis fastest

#include <filesystem>
#include <string>

#include "charcone/grid.hpp"
#include "json.hpp"

namespace charcone {

inline constexpr int kGfnVersion = 1;

nlohmann::json grid_to_json(const Grid& grid);
/// Throws FormatError (with the offending key) on schema violations and on
/// grids that fail Grid::validate.
Grid grid_from_json(const nlohmann::json& j);

void write_gfn(const GridFunction& gf, const std::filesystem::path& path);
GridFunction read_gfn(const std::filesystem::path& path);

/// Shortest round-trip decimal form, always containing '.' or an exponent
/// ("1.0", "2.5e-07").
std::string format_double(double v);

/// Header "# <grid json>", a column-name row (coordinates, re, im), then one
/// row per node in storage order.
void to_csv(const GridFunction& gf, const std::filesystem::path& path);
GridFunction read_csv(const std::filesystem::path& path);

/// Column names of the coordinate axes for a grid kind, e.g. p_plus, p_perp1.
std::string axis_name(GridKind kind, int axis, int n);

}  // namespace charcone
