#include "sepvol/curvature.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace sepvol {

namespace {
// Guard for spectra within roundoff of a two-zero-eigenvalue configuration,
// where the denominator vanishes identically.
constexpr double kDenominatorTol = 1e-12;
}  // namespace

ScalarCurvature scalar_curvature(const Spectrum& s) {
    const auto& l = s.lambda;
    const double e2 = l[0] * l[1] + l[0] * l[2] + l[0] * l[3] + l[1] * l[2] +
                      l[1] * l[3] + l[2] * l[3];
    const double e3 = l[0] * l[1] * l[2] + l[0] * l[1] * l[3] +
                      l[0] * l[2] * l[3] + l[1] * l[2] * l[3];
    const double e4 = l[0] * l[1] * l[2] * l[3];
    const double den = e4 + e3 * e3 - e2 * e3;
    if (std::abs(den) < kDenominatorTol * std::max({e4, e3 * e3, e2 * e3, 1e-300}))
        return {0.0, true};
    const double num =
        63.0 * e4 + 35.0 * e3 * e3 - 43.0 * e2 * e3 - 7.0 * e3 - 3.0 * e2 * e2;
    return {6.0 * num / den, false};
}

double min_scalar_curvature(int m) {
    if (m < 2) throw std::invalid_argument("min_scalar_curvature needs m >= 2");
    const double m2 = static_cast<double>(m) * m;
    return (5.0 * m2 - 4.0) * (m2 - 1.0) / 2.0;
}

BallGeometry ball_geometry(int dimension, double radius) {
    if (dimension < 1 || radius <= 0.0)
        throw std::invalid_argument("ball_geometry needs d >= 1 and r > 0");
    const double d = static_cast<double>(dimension);
    const double log_vol = 0.5 * d * std::log(std::numbers::pi) +
                           d * std::log(radius) - std::lgamma(0.5 * d + 1.0);
    BallGeometry g;
    g.volume = std::exp(log_vol);
    g.area = d * g.volume / radius;
    return g;
}

IsoperimetricComparison levy_gromov_comparison(double v_sep, double v_total,
                                               double a_sep) {
    if (v_sep < 0.0 || v_total <= 0.0 || a_sep < 0.0 || v_sep > v_total)
        throw std::invalid_argument(
            "levy_gromov_comparison needs 0 <= V_sep <= V_total and A_sep >= 0");
    IsoperimetricComparison cmp;
    cmp.dimension = 15;
    cmp.alpha = v_sep / v_total;
    cmp.unit_ball_volume = ball_geometry(15, 1.0).volume;
    // ball of volume alpha * V(unit): radius alpha^(1/15)
    cmp.small_ball_radius = std::pow(cmp.alpha, 1.0 / 15.0);
    cmp.small_ball_area = cmp.alpha > 0.0
                              ? ball_geometry(15, cmp.small_ball_radius).area
                              : 0.0;
    cmp.w = cmp.small_ball_area / cmp.unit_ball_volume;
    cmp.ratio = a_sep / v_total;
    cmp.inequality_holds = cmp.ratio >= cmp.w;
    return cmp;
}

}  // namespace sepvol
