#pragma once

// Test-only oracles, independent of the library implementation paths they
// check: finite-difference Jacobians, Haar frames from Gaussian
// orthonormalization, direct spin-flip spectra, and small statistics helpers.

#include "sepvol/state_space.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

namespace oracles {

// |det d(lambda_1..3)/d(theta_1..3)| by central finite differences of the
// eigenvalue chain itself.
inline double jacobian_fd(const sepvol::EigenAngles& a, double h = 1e-6) {
    auto lam = [](double t1, double t2, double t3) {
        return sepvol::spectrum_from_angles({t1, t2, t3});
    };
    Eigen::Matrix3d m;
    const double t[3] = {a.theta1, a.theta2, a.theta3};
    for (int j = 0; j < 3; ++j) {
        double lo[3] = {t[0], t[1], t[2]};
        double hi[3] = {t[0], t[1], t[2]};
        lo[j] -= h;
        hi[j] += h;
        const auto sl = lam(lo[0], lo[1], lo[2]);
        const auto sh = lam(hi[0], hi[1], hi[2]);
        for (int i = 0; i < 3; ++i)
            m(i, j) = (sh.lambda[static_cast<std::size_t>(i)] -
                       sl.lambda[static_cast<std::size_t>(i)]) /
                      (2.0 * h);
    }
    return std::abs(m.determinant());
}

// Haar-distributed eigenvector frame by Gram-Schmidt of an iid complex
// Gaussian matrix (per-column phases are irrelevant downstream).
inline Eigen::Matrix4cd haar_frame(std::mt19937_64& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    Eigen::Matrix4cd z;
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) z(r, c) = {gauss(rng), gauss(rng)};
    Eigen::Matrix4cd q;
    for (int c = 0; c < 4; ++c) {
        Eigen::Vector4cd v = z.col(c);
        for (int k = 0; k < c; ++k) v -= q.col(k) * (q.col(k).adjoint() * v)(0);
        for (int k = 0; k < c; ++k) v -= q.col(k) * (q.col(k).adjoint() * v)(0);
        q.col(c) = v / v.norm();
    }
    return q;
}

// Random density matrix: flat-simplex eigenvalues, Haar frame.
inline sepvol::DensityMatrix random_density(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    std::array<double, 3> u{uni(rng), uni(rng), uni(rng)};
    std::array<double, 4> lam;
    sepvol::flat_simplex_point(u, lam);
    const Eigen::Matrix4cd q = haar_frame(rng);
    const Eigen::Vector4d l(lam[0], lam[1], lam[2], lam[3]);
    Eigen::Matrix4cd rho = q * l.asDiagonal() * q.adjoint();
    return 0.5 * (rho + rho.adjoint().eval());
}

// Wootters spectrum straight from the non-Hermitian product
// rho (sy x sy) rho* (sy x sy), decreasing.
inline std::array<double, 4> spin_flip_mu_direct(const sepvol::DensityMatrix& rho) {
    Eigen::Matrix4cd s = Eigen::Matrix4cd::Zero();
    s(0, 3) = -1.0;
    s(1, 2) = 1.0;
    s(2, 1) = 1.0;
    s(3, 0) = -1.0;
    const Eigen::Matrix4cd r = rho * s * rho.conjugate() * s;
    Eigen::ComplexEigenSolver<Eigen::Matrix4cd> es(r, false);
    std::array<double, 4> mu;
    for (int i = 0; i < 4; ++i)
        mu[static_cast<std::size_t>(i)] = std::max(0.0, es.eigenvalues()[i].real());
    std::sort(mu.begin(), mu.end(), std::greater<>());
    return mu;
}

// Kolmogorov-Smirnov distance of samples against a CDF.
template <typename Cdf>
double ks_distance(std::vector<double> xs, const Cdf& cdf) {
    std::sort(xs.begin(), xs.end());
    const double n = static_cast<double>(xs.size());
    double d = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const double f = cdf(xs[i]);
        d = std::max(d, std::abs(f - static_cast<double>(i) / n));
        d = std::max(d, std::abs(f - static_cast<double>(i + 1) / n));
    }
    return d;
}

// Werner state p * Bell + (1-p)/4 * I.
inline sepvol::DensityMatrix werner(double p) {
    sepvol::DensityMatrix bell = sepvol::DensityMatrix::Zero();
    bell(0, 0) = bell(0, 3) = bell(3, 0) = bell(3, 3) = 0.5;
    return p * bell + (1.0 - p) * 0.25 * sepvol::DensityMatrix::Identity();
}

inline sepvol::DensityMatrix bell_phi_plus() { return werner(1.0); }

// Random single-qubit unitary (Gaussian orthonormalization in C^2).
inline Eigen::Matrix2cd haar_qubit(std::mt19937_64& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    Eigen::Matrix2cd z;
    for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c) z(r, c) = {gauss(rng), gauss(rng)};
    Eigen::Vector2cd a = z.col(0).normalized();
    Eigen::Vector2cd b = z.col(1) - a * (a.adjoint() * z.col(1))(0);
    Eigen::Matrix2cd q;
    q.col(0) = a;
    q.col(1) = b.normalized();
    return q;
}

// Random product state sigma (x) tau from pure-ish single-qubit factors.
inline sepvol::DensityMatrix random_product_state(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    const auto qubit = [&](double w) {
        const Eigen::Matrix2cd q = haar_qubit(rng);
        Eigen::Vector2d lam(w, 1.0 - w);
        Eigen::Matrix2cd m = q * lam.asDiagonal() * q.adjoint();
        return m;
    };
    const Eigen::Matrix2cd sigma = qubit(uni(rng));
    const Eigen::Matrix2cd tau = qubit(uni(rng));
    sepvol::DensityMatrix rho;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            rho.block<2, 2>(2 * i, 2 * j) = sigma(i, j) * tau;
    return rho;
}

}  // namespace oracles
