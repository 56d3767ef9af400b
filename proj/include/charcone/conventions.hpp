#pragma once

#include <string_view>

namespace charcone {

/// Fourier conventions.
///   euclid               ∫ dx f(x) e^{-i x·p}
///   euclid_inverse       (2π)^{-n} ∫ dp F(p) e^{+i x·p}
///   partial_lc           ∫ dx f(x) e^{+i (x- p+ - x_perp·p_perp)}   (axis 0 is x- / p+)
///   partial_lc_inverse   (2π)^{-n} ∫ dp F(p) e^{-i (x- p+ - x_perp·p_perp)}
///   minkowski_full       ∫ dx f(x) e^{+i <x,p>_M}   on R^{1+n}, (x0, x)
///   lc_full              ∫ dx f(x) e^{+i [x,p]_L}   on R^{1+n}, (x+, x_perp, x-)
enum class TransformConvention {
    euclid,
    euclid_inverse,
    partial_lc,
    partial_lc_inverse,
    minkowski_full,
    lc_full,
};

std::string_view to_string(TransformConvention c);

}  // namespace charcone
