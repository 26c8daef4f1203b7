#pragma once

#include "sepvol/state_space.hpp"

#include <array>

namespace sepvol {

/// |det| at or below this counts as a boundary hit; such states are
/// classified separable and tallied in the run diagnostics.
inline constexpr double kBoundaryDetTol = 1e-14;

/// Partial transpose of a two-qubit state together with its spectrum and
/// determinant. At most one eigenvalue can be negative, so the determinant
/// sign alone decides separability.
struct PartialTranspose {
    Eigen::Matrix4cd matrix;
    std::array<double, 4> eigenvalues{};  // ascending
    double determinant = 0.0;
};

/// Transpose each 2x2 block of rho in place (transposition on the second
/// qubit). Hermiticity and trace are preserved.
PartialTranspose partial_transpose(const DensityMatrix& rho);

/// Peres-Horodecki test via the determinant sign: separable iff
/// det(rho^PT) >= 0 (ties within kBoundaryDetTol are separable).
bool is_separable(const DensityMatrix& rho);

/// N = 2 max(0, -lambda_min(rho^PT)); 1 on Bell states, bounded above by the
/// concurrence.
double negativity(const DensityMatrix& rho);
double negativity(const PartialTranspose& pt);

/// Wootters concurrence: C = max(0, sqrt(mu1)-sqrt(mu2)-sqrt(mu3)-sqrt(mu4))
/// with mu the decreasing eigenvalues of rho (sy x sy) rho* (sy x sy).
/// Evaluated through the Hermitian similar form sqrt(rho) S rho* S sqrt(rho),
/// which has the same spectrum. Throws std::runtime_error if an eigenvalue
/// drops below -1e-10.
double concurrence(const DensityMatrix& rho);

/// Fast path when the Hermitian square root of rho is already known (as it is
/// along the sampling pipeline, where rho = U diag(lambda) U^dagger).
double concurrence_with_sqrt(const DensityMatrix& rho,
                             const Eigen::Matrix4cd& sqrt_rho);

/// Validate the density-matrix invariants (Hermitian to 1e-12, unit trace to
/// 1e-12, smallest eigenvalue >= -1e-10); throws std::invalid_argument.
void validate_density(const DensityMatrix& rho);

}  // namespace sepvol
