#pragma once

// Time slices of solutions in momentum space.
//   Minkowski:  u_{x0}^  = (a0 e^{-iωx0} + a1 e^{iωx0}) / (4πω)
//               (∂0u)^   = (a0 e^{-iωx0} - a1 e^{iωx0}) / (4πi)
//   light cone: u*_{x+}^L = e^{-iω~x+} b / (4π|p+|)

#include <vector>

#include "charcone/massshell.hpp"

namespace charcone {

struct EvolvedProfile {
    double time = 0.0;
    Frame frame = Frame::minkowski;
    GridFunction profile;
};

cplx evolve_value(const MassShellDensityM& msd, double x0, std::span<const double> p);
cplx d0_value(const MassShellDensityM& msd, double x0, std::span<const double> p);
cplx tame_value(const MassShellDensityLC& msd, double xplus, std::span<const double> pt);

/// Profiles on `grid` (a minkowski-momentum grid, or lc-momentum for the
/// tame family). The overloads without a grid require grid-form densities
/// and use their grid.
EvolvedProfile evolve_profile(const MassShellDensityM& msd, double x0, const Grid& grid);
EvolvedProfile evolve_profile(const MassShellDensityM& msd, double x0);
EvolvedProfile d0_profile(const MassShellDensityM& msd, double x0, const Grid& grid);
EvolvedProfile d0_profile(const MassShellDensityM& msd, double x0);
EvolvedProfile tame_profile(const MassShellDensityLC& msd, double xplus, const Grid& lc_grid);
EvolvedProfile tame_profile(const MassShellDensityLC& msd, double xplus);

/// u0~^L = b / (4π|p+|). Returns the stored profile itself.
CharacteristicData tame_restrict(const MassShellDensityLC& msd);
/// b = 4π|p+| u0~^L, stored so that tame_restrict returns `data` unchanged.
MassShellDensityLC solve_characteristic(const CharacteristicData& data);

struct KgResidual {
    /// max over interior nodes of |(D_tt - Σ D_xx + m^2) u| / max |u|.
    double relative = 0.0;
    double max_u = 0.0;
    /// Set when max |u| == 0; `relative` is then 0.
    bool degenerate = false;
};

/// Position slices at each time by inverse DFT from the reciprocal momentum
/// grid, then the second-order centered stencil for ∂0^2 - Δ + m^2 on all
/// interior (time, node) points. Times must be >= 5 and equally spaced.
KgResidual kg_residual(const MassShellDensityM& msd, const Grid& position_grid, const std::vector<double>& times);

}  // namespace charcone
