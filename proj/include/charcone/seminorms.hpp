#pragma once

// Finite-order certificates for membership in the squeezed space S_{p+}:
// suprema of weighted derivatives over light-cone grids, evaluated on a
// ladder of grids refined toward p+ = 0.

#include <functional>
#include <string>
#include <vector>

#include "charcone/grid.hpp"
#include "charcone/testfn.hpp"

namespace charcone {

/// sup over nodes of |(p+)^k p_perp^beta ∂^alpha f|. beta has n-1 entries,
/// alpha has n. |alpha| > 2 requires allow_fd (finite-difference
/// derivatives); otherwise DomainError.
double squeezed_seminorm(const TestFunctionSpec& f, int k, std::span<const int> beta, std::span<const int> alpha,
                         const Grid& grid, bool allow_fd = false);

/// sup over nodes of ((1 + |p~|) / |p+|)^N |∂^alpha f|.
double squeezed_seminorm_N(const TestFunctionSpec& f, int N, std::span<const int> alpha, const Grid& grid,
                           bool allow_fd = false);

/// Smooth function on {p+ != 0}: returns ∂^alpha M at pt.
using Multiplier = std::function<cplx(std::span<const int> alpha, std::span<const double> pt)>;

Multiplier theta_multiplier(Sheet side);
/// |p+|^k
Multiplier p_plus_power_multiplier(int k);
/// 1 / p+
Multiplier inverse_p_plus_multiplier();
/// (|p_perp|^2 + m^2) / (2 p+)
Multiplier lc_omega_multiplier(double m);

struct MultiplicatorReport {
    bool pass = true;
    /// max over nodes of |∂^alpha M| / ((1 + |p~|) / |p+|)^N
    double max_ratio = 0.0;
    std::vector<double> worst_node;
};

/// Checks |∂^alpha M| <= C ((1 + |p~|) / |p+|)^N at every node.
MultiplicatorReport multiplicator_check(const Multiplier& M, std::span<const int> alpha, int N, double C,
                                        const Grid& grid);

/// Grids whose p+ axis step is divided by factor^l (l = 0..levels-1) at a
/// fixed extent. With an odd factor every half-step grid contains the
/// previous one, so suprema can only grow along the ladder.
std::vector<Grid> refinement_ladder(const Grid& base, int levels = 3, std::size_t factor = 11);

struct LadderCertificate {
    std::vector<double> values;
    /// Largest ratio values[l+1] / values[l].
    double max_growth = 0.0;
    /// Smallest ratio values[l+1] / values[l].
    double min_growth = 0.0;
    /// Every growth ratio < bounded_growth.
    bool bounded = true;
    /// Every growth ratio >= divergent_growth.
    bool divergent = false;
};

inline constexpr double kBoundedGrowth = 2.0;
inline constexpr double kDivergentGrowth = 10.0;

LadderCertificate ladder_certificate(const std::vector<Grid>& ladder, const std::function<double(const Grid&)>& value);

/// f / (p+)^k and its first derivatives stay bounded along the ladder.
bool filtration_check(const TestFunctionSpec& f, int k, const std::vector<Grid>& ladder);

}  // namespace charcone
