#include "sepvol/separability.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <stdexcept>

namespace sepvol {

namespace {

// sigma_y tensor sigma_y (the spin-flip operator); real in this basis.
const Eigen::Matrix4d kSpinFlip = [] {
    Eigen::Matrix4d s = Eigen::Matrix4d::Zero();
    s(0, 3) = -1.0;
    s(1, 2) = 1.0;
    s(2, 1) = 1.0;
    s(3, 0) = -1.0;
    return s;
}();

double concurrence_from_hermitian(const Eigen::Matrix4cd& r) {
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> es(r, Eigen::EigenvaluesOnly);
    Eigen::Vector4d mu = es.eigenvalues();  // ascending
    for (int i = 0; i < 4; ++i) {
        if (mu[i] < -1e-10)
            throw std::runtime_error("concurrence: spin-flip spectrum left PSD range");
        if (mu[i] < 0.0) mu[i] = 0.0;
    }
    const double c = std::sqrt(mu[3]) - std::sqrt(mu[2]) - std::sqrt(mu[1]) -
                     std::sqrt(mu[0]);
    return c > 0.0 ? c : 0.0;
}

}  // namespace

PartialTranspose partial_transpose(const DensityMatrix& rho) {
    PartialTranspose pt;
    pt.matrix = rho;
    for (int bi = 0; bi < 2; ++bi)
        for (int bj = 0; bj < 2; ++bj)
            pt.matrix.block<2, 2>(2 * bi, 2 * bj) =
                rho.block<2, 2>(2 * bi, 2 * bj).transpose().eval();

    // direct 4x4 expansion; the determinant of a Hermitian matrix is real
    pt.determinant = pt.matrix.determinant().real();

    Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> es(pt.matrix,
                                                       Eigen::EigenvaluesOnly);
    for (int i = 0; i < 4; ++i) pt.eigenvalues[static_cast<std::size_t>(i)] = es.eigenvalues()[i];
    return pt;
}

bool is_separable(const DensityMatrix& rho) {
    const double det = partial_transpose(rho).determinant;
    return det >= 0.0 || std::abs(det) <= kBoundaryDetTol;
}

double negativity(const PartialTranspose& pt) {
    const double lo = pt.eigenvalues[0];
    return lo < 0.0 ? -2.0 * lo : 0.0;
}

double negativity(const DensityMatrix& rho) {
    return negativity(partial_transpose(rho));
}

double concurrence_with_sqrt(const DensityMatrix& rho,
                             const Eigen::Matrix4cd& sqrt_rho) {
    const Eigen::Matrix4cd flipped = kSpinFlip * rho.conjugate() * kSpinFlip;
    return concurrence_from_hermitian(sqrt_rho * flipped * sqrt_rho);
}

double concurrence(const DensityMatrix& rho) {
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> es(rho);
    Eigen::Vector4d ev = es.eigenvalues();
    for (int i = 0; i < 4; ++i)
        if (ev[i] < 0.0) ev[i] = 0.0;  // clip roundoff below the PSD cone
    const Eigen::Matrix4cd sqrt_rho = es.eigenvectors() *
                                      ev.cwiseSqrt().asDiagonal() *
                                      es.eigenvectors().adjoint();
    return concurrence_with_sqrt(rho, sqrt_rho);
}

void validate_density(const DensityMatrix& rho) {
    if ((rho - rho.adjoint()).cwiseAbs().maxCoeff() > 1e-12)
        throw std::invalid_argument("density matrix is not Hermitian to 1e-12");
    if (std::abs(rho.trace().real() - 1.0) > 1e-12 ||
        std::abs(rho.trace().imag()) > 1e-12)
        throw std::invalid_argument("density matrix trace differs from 1 by more than 1e-12");
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> es(rho, Eigen::EigenvaluesOnly);
    if (es.eigenvalues()[0] < -1e-10)
        throw std::invalid_argument("density matrix has an eigenvalue below -1e-10");
}

}  // namespace sepvol
