#pragma once

// Tame restriction of the Pauli-Jordan function D_m (Cauchy data u0 = 0,
// u1 = δ) to {x+ = 0}, paired with a probe f on R^n = {(x-, x_perp)}.
//   closed data       u0~^L(p~) = i / (2 p+)
//   momentum route    (i / (2π)^n) ∫_{p+>0} d^n p~ / (2p+) (f^(-p~) - f^(p~))
//   position route    (1/4) ∫ dx- ε(x-) f(x-, 0_perp)
// f^ is the partial light-cone transform.

#include "charcone/massshell.hpp"
#include "charcone/quadrature.hpp"
#include "charcone/testfn.hpp"

namespace charcone {

/// i / (2 p+), independent of p_perp and m.
CharacteristicData pj_characteristic_data(const ModelParams& params);

/// Momentum route with f^ supplied directly (e.g. probes defined in
/// momentum space). The integral over p+ > 0 is evaluated as half the
/// integral over R^n of the even integrand (f^(-p~) - f^(p~)) / (2p+).
QuadResult pj_pairing_quadrature_hat(const Density& f_hat, const ModelParams& params, const QuadOptions& opts);

/// Momentum route with f^ from the closed-form transform. Throws DomainError
/// when f has none.
QuadResult pj_pairing_quadrature(const TestFunctionSpec& f, const ModelParams& params, const QuadOptions& opts);

/// Position route: 1-D quadrature of ε(x-) f(x-, 0_perp) / 4.
QuadResult pj_pairing_closed_form(const TestFunctionSpec& f, const ModelParams& params, const QuadOptions& opts);

/// Generic pipeline: the x+ = 0 tame profile of solve_characteristic applied
/// to the Pauli-Jordan data, paired with f as
///   (2π)^{-n} ∫ u~(p~) f^(-p~) d^n p~,
/// integrated as the p~ <-> -p~ symmetrization of the integrand.
QuadResult pj_pairing_pipeline(const TestFunctionSpec& f, const ModelParams& params, const QuadOptions& opts);

/// (2π)^{-n} ∫ u(p~) f^(-p~) d^n p~ with the symmetrized integrand; both
/// arguments are partial light-cone transforms.
QuadResult pair_profile(const Density& u_hat, const Density& f_hat, int n, const QuadOptions& opts, double m = 1.0);

}  // namespace charcone
