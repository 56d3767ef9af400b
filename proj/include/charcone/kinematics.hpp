#pragma once

// On-shell energies, the light-cone coordinate map and the squeezing maps
// between Minkowski spatial momenta and the half-spaces {±p+ > 0}.
//
// Storage conventions used across the library:
//   Minkowski spatial vector      (p1, ..., pn)
//   LC spatial momentum           (p+, p_perp_1, ..., p_perp_{n-1})
//   Minkowski spacetime vector    (x0, x1, ..., xn)
//   LC spacetime vector           (x+, x_perp, x-)

#include <array>
#include <cstddef>
#include <span>
#include <vector>

namespace charcone {

/// Largest spatial dimension supported by the allocation-free kernels.
inline constexpr int kMaxDim = 8;
inline constexpr double kInvSqrt2 = 0.70710678118654752440;

using Point = std::array<double, kMaxDim + 1>;

struct ModelParams {
    double m = 1.0;
    int n = 1;

    /// Throws DomainError unless m > 0 (finite) and 1 <= n <= kMaxDim.
    void validate() const;
    static ModelParams make(double m, int n);

    bool operator==(const ModelParams&) const = default;
};

/// Sheet of the mass shell / half-space sign: plus <-> p0 > 0 <-> p+ > 0.
enum class Sheet { plus, minus };

inline double sheet_sign(Sheet s) { return s == Sheet::plus ? 1.0 : -1.0; }

struct MinkMomentum {
    std::vector<double> p;
};

struct LCMomentum {
    double p_plus = 0.0;
    std::vector<double> p_perp;
};

enum class Frame { minkowski, lightcone };

struct FullVector {
    Frame frame = Frame::minkowski;
    std::vector<double> c;
};

// -- span kernels (no allocation; used in quadrature hot loops) ---------------

/// sqrt(|p|^2 + m^2)
double omega(std::span<const double> p, double m);

/// (|p_perp|^2 + m^2) / (2 p+) for pt = (p+, p_perp). Throws on p+ == 0.
double lc_omega(std::span<const double> pt, double m);

/// mu_±(p): Minkowski spatial momentum -> LC spatial momentum on {±p+ > 0}.
/// Evaluated without cancellation on both sheets.
void mu_squeeze(Sheet sign, std::span<const double> p, double m, std::span<double> out);
/// Same with w = omega(p, m) supplied by the caller.
void mu_squeeze(Sheet sign, std::span<const double> p, double m, double w, std::span<double> out);

/// nu_{≷0}(pt): inverse of mu_squeeze. Throws if sign(p+) does not match.
void nu_unsqueeze(Sheet sign, std::span<const double> pt, double m, std::span<double> out);

/// x -> kappa(x) for Minkowski spacetime vectors (x0, x1..xn) -> (x+, x_perp, x-).
void kappa(std::span<const double> x, std::span<double> out);
/// LC spacetime vector -> Minkowski spacetime vector.
void kappa_inv(std::span<const double> xt, std::span<double> out);

/// Omega_±(p) = (±omega(p), p).
void omega_lift(Sheet sign, std::span<const double> p, double m, std::span<double> out);
/// Omega~(pt) = (p+, p_perp, lc_omega(pt)).
void lc_omega_lift(std::span<const double> pt, double m, std::span<double> out);

double minkowski_form(std::span<const double> x, std::span<const double> y);
double lc_form(std::span<const double> x, std::span<const double> y);

// -- value-type API -----------------------------------------------------------

double omega(const MinkMomentum& p, const ModelParams& params);
double lc_omega(const LCMomentum& pt, const ModelParams& params);
FullVector kappa(const FullVector& v);
FullVector kappa_inv(const FullVector& v);
LCMomentum mu_squeeze(Sheet sign, const MinkMomentum& p, const ModelParams& params);
MinkMomentum nu_unsqueeze(Sheet sign, const LCMomentum& pt, const ModelParams& params);

}  // namespace charcone
