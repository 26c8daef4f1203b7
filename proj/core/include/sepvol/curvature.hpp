#pragma once

#include "sepvol/state_space.hpp"

namespace sepvol {

/// Scalar curvature value; `singular` marks a vanishing denominator (spectra
/// with two zero eigenvalues), where the curvature is unbounded.
struct ScalarCurvature {
    double value = 0.0;
    bool singular = false;
};

/// Scalar curvature of the Bures metric from the elementary symmetric
/// invariants e_i of the spectrum:
///   S = 6 (63 e4 + 35 e3^2 - 43 e2 e3 - 7 e3 - 3 e2^2) / (e4 + e3^2 - e2 e3).
/// Minimum 570 at the maximally mixed state; unbounded above.
ScalarCurvature scalar_curvature(const Spectrum& s);

/// (5 m^2 - 4)(m^2 - 1)/2, attained at the maximally mixed m-level state.
double min_scalar_curvature(int m);

struct BallGeometry {
    double volume = 0.0;
    double area = 0.0;
};

/// Euclidean d-ball volume pi^(d/2) r^d / Gamma(d/2 + 1) and the bounding
/// sphere area d * volume / r.
BallGeometry ball_geometry(int dimension, double radius);

/// Arithmetic of the Levy-Gromov comparison in 15 dimensions: alpha is the
/// volume fraction, s(alpha) the boundary area of a ball holding volume
/// alpha * V(unit ball), w = s(alpha)/V(unit ball), ratio = A_sep/V_total.
struct IsoperimetricComparison {
    int dimension = 15;
    double alpha = 0.0;
    double unit_ball_volume = 0.0;
    double small_ball_radius = 0.0;
    double small_ball_area = 0.0;
    double w = 0.0;
    double ratio = 0.0;
    bool inequality_holds = false;  // ratio >= w
};

IsoperimetricComparison levy_gromov_comparison(double v_sep, double v_total,
                                               double a_sep);

}  // namespace sepvol
