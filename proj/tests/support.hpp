#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <random>
#include <span>
#include <vector>

#include "charcone/grid.hpp"

namespace testing_support {

using cplx = std::complex<double>;

inline std::mt19937_64& rng() {
    static std::mt19937_64 g(20240611);
    return g;
}

inline double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng()); }

inline std::vector<double> uniform_vec(int n, double lo, double hi) {
    std::vector<double> v(static_cast<std::size_t>(n));
    for (auto& x : v) x = uniform(lo, hi);
    return v;
}

/// Light-cone momentum with log-uniform |p+| in [e^-3, e^3] and random sign.
inline std::vector<double> random_lc(int n, double perp = 5.0) {
    std::vector<double> v = uniform_vec(n, -perp, perp);
    v[0] = (uniform(0, 1) < 0.5 ? -1.0 : 1.0) * std::exp(uniform(-3.0, 3.0));
    return v;
}

inline double max_abs_diff(std::span<const cplx> a, std::span<const cplx> b) {
    double e = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) e = std::max(e, std::abs(a[i] - b[i]));
    return e;
}

inline double max_abs(std::span<const cplx> a) {
    double e = 0.0;
    for (const auto& v : a) e = std::max(e, std::abs(v));
    return e;
}

/// Composite trapezoid on [lo, hi] with `count` intervals; spectrally accurate
/// for smooth integrands that decay at both ends.
template <class F>
cplx trapezoid(const F& f, double lo, double hi, int count) {
    const double h = (hi - lo) / count;
    cplx s = 0.5 * (f(lo) + f(hi));
    for (int i = 1; i < count; ++i) s += f(lo + i * h);
    return s * h;
}

}  // namespace testing_support
