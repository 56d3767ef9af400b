#pragma once

// Mass-shell densities of Klein-Gordon solutions
//   u^ = a0(p) δ+(p^2 - m^2) + a1(p) δ-(p^2 - m^2)      (Minkowski)
//   u^L = b(p~) δ(p~^2 - m^2),  p+ != 0                  (light cone)
// and the Cauchy / characteristic data they are built from.

#include <utility>

#include "charcone/density.hpp"
#include "charcone/quadrature.hpp"

namespace charcone {

/// Spatial Fourier transforms of u|_{x0=0} and ∂0 u|_{x0=0}.
struct CauchyData {
    Density u0_hat;
    Density u1_hat;
    ModelParams params;
};

/// Partial light-cone transform of the tame restriction u|*_{x+=0}.
struct CharacteristicData {
    Density u0_lc_hat;
    ModelParams params;
};

struct MassShellDensityM {
    Density a0;
    Density a1;
    ModelParams params;
};

/// Light-cone density. Stored as beta = b / (4π|p+|), the x+ = 0 profile,
/// so that restriction and the characteristic solve are exact inverses.
class MassShellDensityLC {
public:
    MassShellDensityLC() = default;
    static MassShellDensityLC from_b(const Density& b, const ModelParams& params);
    static MassShellDensityLC from_beta(Density beta, const ModelParams& params);

    const ModelParams& params() const { return params_; }
    const Density& beta() const { return beta_; }
    /// b(p~) = 4π|p+| beta(p~).
    cplx b(std::span<const double> pt) const;
    Density b_density() const;

private:
    Density beta_;
    ModelParams params_;
};

/// 4π|p+|
double lc_weight(double p_plus);

/// a0 = 2π(ω u0^ + i u1^), a1 = 2π(ω u0^ - i u1^).
MassShellDensityM from_cauchy(const CauchyData& data);

/// (Θ(p+) b, Θ(-p+) b).
std::pair<MassShellDensityLC, MassShellDensityLC> split_pm(const MassShellDensityLC& msd);

/// b(p~) = a0(ν>0(p~)) for p+ > 0 and a1(ν<0(p~)) for p+ < 0. Without a grid
/// the result is a closure; with one it is sampled there.
MassShellDensityLC lc_from_m(const MassShellDensityM& msd);
MassShellDensityLC lc_from_m(const MassShellDensityM& msd, const Grid& lc_grid);

/// a0(p) = b(μ>0(p)), a1(p) = b(μ<0(p)).
MassShellDensityM m_from_lc(const MassShellDensityLC& msd);
MassShellDensityM m_from_lc(const MassShellDensityLC& msd, const Grid& grid);

/// Σ± <a± δ±, (p^2 - m^2 - shift) f>; zero up to rounding for shift = 0.
/// f lives on Minkowski momentum space R^{1+n}.
cplx division_residual(const MassShellDensityM& msd, const TestFunctionSpec& f, const QuadOptions& opts,
                       double mass_sq_shift = 0.0);
/// <b δ~, (p~^2 - m^2 - shift) f>, f on LC momentum space (p+, p_perp, p-).
cplx division_residual(const MassShellDensityLC& msd, const TestFunctionSpec& f, const QuadOptions& opts,
                       double mass_sq_shift = 0.0);

}  // namespace charcone
