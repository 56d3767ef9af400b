#include "charcone/quadrature.hpp"

#include <boost/math/quadrature/gauss.hpp>

namespace charcone {

namespace {

constexpr int kPanelNodes = 16;

/// Composite rule on [-1, 1] with 2^level panels.
AxisRule reference_rule(int level) {
    if (level < 0 || level > 12) throw DomainError("quadrature level must be in [0, 12]");
    using GL = boost::math::quadrature::gauss<double, kPanelNodes>;
    const auto& absc = GL::abscissa();
    const auto& wts = GL::weights();
    const std::size_t panels = std::size_t{1} << level;
    const double h = 2.0 / static_cast<double>(panels);
    AxisRule r;
    r.nodes.reserve(panels * kPanelNodes);
    r.weights.reserve(panels * kPanelNodes);
    for (std::size_t k = 0; k < panels; ++k) {
        const double mid = -1.0 + (static_cast<double>(k) + 0.5) * h;
        for (std::size_t i = absc.size(); i-- > 0;) {
            r.nodes.push_back(mid - 0.5 * h * absc[i]);
            r.weights.push_back(0.5 * h * wts[i]);
        }
        for (std::size_t i = 0; i < absc.size(); ++i) {
            r.nodes.push_back(mid + 0.5 * h * absc[i]);
            r.weights.push_back(0.5 * h * wts[i]);
        }
    }
    return r;
}

}  // namespace

double default_extent(double sigma_max, double m) { return 10.0 * std::max(1.0, sigma_max) * std::sqrt(1.0 + m); }

AxisRule tanh_rule(int level, double extent) {
    if (!(extent > 0.0)) throw DomainError("quadrature extent must be > 0");
    const double tau = std::tanh(1.0);
    AxisRule r = reference_rule(level);
    for (std::size_t i = 0; i < r.size(); ++i) {
        const double s = r.nodes[i];
        r.nodes[i] = extent * std::atanh(tau * s);
        r.weights[i] *= extent * tau / (1.0 - tau * tau * s * s);
    }
    return r;
}

AxisRule linear_rule(int level, double lo, double hi) {
    if (!(hi > lo)) throw DomainError("linear_rule: empty interval");
    AxisRule r = reference_rule(level);
    const double half = 0.5 * (hi - lo);
    const double mid = 0.5 * (hi + lo);
    for (std::size_t i = 0; i < r.size(); ++i) {
        r.nodes[i] = mid + half * r.nodes[i];
        r.weights[i] *= half;
    }
    return r;
}

namespace detail {

int split_depth() {
    int d = 0;
    while ((1 << d) < 4 * thread_count() && d < 12) ++d;
    return d;
}

void split_tree(std::size_t lo, std::size_t hi, int depth, std::vector<std::pair<std::size_t, std::size_t>>& out) {
    if (depth == 0 || hi - lo <= kLeafSize) {
        out.emplace_back(lo, hi);
        return;
    }
    const std::size_t mid = lo + (hi - lo) / 2;
    split_tree(lo, mid, depth - 1, out);
    split_tree(mid, hi, depth - 1, out);
}

cplx join_tree(std::size_t lo, std::size_t hi, int depth, const std::vector<cplx>& parts, std::size_t& next) {
    if (depth == 0 || hi - lo <= kLeafSize) return parts[next++];
    const std::size_t mid = lo + (hi - lo) / 2;
    const cplx left = join_tree(lo, mid, depth - 1, parts, next);
    return left + join_tree(mid, hi, depth - 1, parts, next);
}

}  // namespace detail

}  // namespace charcone
