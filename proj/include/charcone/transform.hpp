#pragma once

// Grid Fourier transforms in every convention of conventions.hpp, plus the
// conversion laws between Cauchy data on {x0 = 0} and characteristic data on
// {x+ = 0}:
//   u0~^L(p~) = (ω u0^ ± i u1^)(ν±(p~)) / (2|p+|),        ± = sign p+
//   u0^(p)    = (|p+| u0~^L)(μ+(p)) + (|p+| u0~^L)(μ-(p))) / ω
//   u1^(p)    = -i ((|p+| u0~^L)(μ+(p)) - (|p+| u0~^L)(μ-(p)))

#include "charcone/conventions.hpp"
#include "charcone/grid.hpp"
#include "charcone/massshell.hpp"

namespace charcone {

/// Target grid of `dft(., conv)`: step' = 2π / (step · count), same counts.
/// Light-cone conventions swap the offset of axis 0 (centered x- <-> half-step
/// p+); euclidean ones keep offsets. Throws DomainError for grid kinds the
/// convention does not accept and for the full-frame conventions, which act
/// on R^{1+n} and are only available through fourier_exact.
Grid reciprocal_grid(const Grid& grid, TransformConvention conv);

/// Riemann-sum approximation of the transform integral, evaluated per axis
/// with FFTW and exact phase factors for the axis offsets. Mapping twice with
/// euclid returns (2π)^n f(-x) up to rounding; forward then the matching
/// inverse returns the input.
GridFunction dft(const GridFunction& gf, TransformConvention conv);

CharacteristicData convert_m_to_lc(const CauchyData& data);
CharacteristicData convert_m_to_lc(const CauchyData& data, const Grid& lc_grid);

CauchyData convert_lc_to_m(const CharacteristicData& data);
CauchyData convert_lc_to_m(const CharacteristicData& data, const Grid& grid);

}  // namespace charcone
