#pragma once

#include <Eigen/Dense>

#include <array>
#include <span>

namespace sepvol {

/// Two-qubit density matrix: 4x4 complex, Hermitian, unit trace, PSD.
using DensityMatrix = Eigen::Matrix4cd;

/// Eigenvector frame of a two-qubit state. Columns are orthonormal; the
/// overall and per-column phases are irrelevant once the frame is contracted
/// into U diag(lambda) U^dagger.
using CosetUnitary = Eigen::Matrix4cd;

/// The three spherical angles that carry the eigenvalue simplex,
/// each in [0, pi/2].
struct EigenAngles {
    double theta1 = 0.0;
    double theta2 = 0.0;
    double theta3 = 0.0;
};

/// Eigenvalue 4-vector: nonnegative, sums to one.
struct Spectrum {
    std::array<double, 4> lambda{};

    double operator[](int i) const { return lambda[static_cast<std::size_t>(i)]; }
};

/// Twelve unit-interval coordinates determining the eigenvector frame.
/// All strictly inside (0,1); the endpoints hit coordinate-chart singularities.
struct UnitaryCoords {
    std::array<double, 12> u{};
};

/// lambda = (s1^2 s2^2 s3^2, c1^2 s2^2 s3^2, c2^2 s3^2, c3^2). Covers the full
/// 3-simplex exactly once as the angles range over [0, pi/2]^3.
/// Throws std::domain_error when an angle is out of range (tolerance 1e-15).
Spectrum spectrum_from_angles(const EigenAngles& a);

/// |det d(lambda1,lambda2,lambda3)/d(theta1,theta2,theta3)| in closed form:
///   sin(2 t1) sin(2 t2) sin(2 t3) sin^2(t2) sin^4(t3).
/// Nonnegative on the whole box, zero on its faces.
double angle_jacobian(const EigenAngles& a);

/// True iff the angles lie in the nested region
///   pi/4 <= t1 <= pi/2,  f(t1) <= t2 <= pi/2,  f(t2) <= t3 <= pi/2,
/// with f(x) = arccot(cos x); there the spectrum is weakly decreasing.
bool ordered_range_membership(const EigenAngles& a);

/// Map twelve unit-cube coordinates to an eigenvector frame carrying the
/// invariant (truncated Haar) measure. Columns are built as uniform points of
/// the complex projective spaces CP^3, CP^2, CP^1 of successive orthogonal
/// complements: squared moduli are flat simplex points (inverse-CDF
/// stick-breaking), relative phases are uniform. The complement bases come
/// from a deterministic largest-residual pivot over the standard basis, which
/// never degenerates. Throws std::domain_error for coordinates at 0 or 1.
CosetUnitary unitary_from_coords(const UnitaryCoords& u);

/// rho = U diag(lambda) U^dagger.
DensityMatrix assemble_density(const CosetUnitary& frame, const Spectrum& s);

/// Flat (Dirichlet(1,...,1)) point of the (n-1)-simplex from n-1 unit-interval
/// coordinates via the conditional inverse-CDF chain; smooth and exactly
/// measure-preserving on the open cube. Exposed for the quadrature helpers.
void flat_simplex_point(std::span<const double> coords, std::span<double> out);

}  // namespace sepvol
