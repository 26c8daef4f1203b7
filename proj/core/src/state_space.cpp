#include "sepvol/state_space.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace sepvol {

namespace {

constexpr double kHalfPi = std::numbers::pi / 2.0;
constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kAngleTol = 1e-15;

void check_angle(double t, const char* name) {
    if (!(t >= -kAngleTol && t <= kHalfPi + kAngleTol))
        throw std::domain_error(std::string(name) + " outside [0, pi/2]");
}

using Vector4cd = Eigen::Vector4cd;

// Deterministic orthonormal basis of the orthogonal complement of `fixed`
// columns: repeatedly take the standard basis vector with the largest residual
// norm (ties broken by index), project, normalize. The largest residual is at
// least (n-k)/n, so the pivot never degenerates.
template <int N>
void complete_basis(const Eigen::Matrix<std::complex<double>, 4, N>& fixed,
                    Eigen::Matrix<std::complex<double>, 4, 4 - N>& complement) {
    Eigen::Matrix<std::complex<double>, 4, 4> have;
    have.template leftCols<N>() = fixed;
    int filled = N;
    while (filled < 4) {
        int pivot = -1;
        double best = -1.0;
        for (int j = 0; j < 4; ++j) {
            double residual = 1.0;
            for (int k = 0; k < filled; ++k)
                residual -= std::norm(have.col(k)[j]);
            if (residual > best + 1e-12) {
                best = residual;
                pivot = j;
            }
        }
        Vector4cd v = Vector4cd::Zero();
        v[pivot] = 1.0;
        for (int k = 0; k < filled; ++k)
            v -= have.col(k) * (have.col(k).adjoint() * v)(0);
        // second pass for orthogonality at working precision
        for (int k = 0; k < filled; ++k)
            v -= have.col(k) * (have.col(k).adjoint() * v)(0);
        have.col(filled++) = v / v.norm();
    }
    complement = have.template rightCols<4 - N>();
}

}  // namespace

Spectrum spectrum_from_angles(const EigenAngles& a) {
    check_angle(a.theta1, "theta1");
    check_angle(a.theta2, "theta2");
    check_angle(a.theta3, "theta3");
    const double s1 = std::sin(a.theta1), c1 = std::cos(a.theta1);
    const double s2 = std::sin(a.theta2), c2 = std::cos(a.theta2);
    const double s3 = std::sin(a.theta3), c3 = std::cos(a.theta3);
    Spectrum s;
    s.lambda = {s1 * s1 * s2 * s2 * s3 * s3, c1 * c1 * s2 * s2 * s3 * s3,
                c2 * c2 * s3 * s3, c3 * c3};
    return s;
}

double angle_jacobian(const EigenAngles& a) {
    check_angle(a.theta1, "theta1");
    check_angle(a.theta2, "theta2");
    check_angle(a.theta3, "theta3");
    const double s2 = std::sin(a.theta2);
    const double s3 = std::sin(a.theta3);
    return std::sin(2.0 * a.theta1) * std::sin(2.0 * a.theta2) *
           std::sin(2.0 * a.theta3) * s2 * s2 * (s3 * s3) * (s3 * s3);
}

bool ordered_range_membership(const EigenAngles& a) {
    check_angle(a.theta1, "theta1");
    check_angle(a.theta2, "theta2");
    check_angle(a.theta3, "theta3");
    // boundary slack so the region corners classify as members
    constexpr double tol = 1e-12;
    const auto f = [](double x) { return std::atan2(1.0, std::cos(x)); };
    if (a.theta1 < std::numbers::pi / 4.0 - tol) return false;
    if (a.theta2 < f(a.theta1) - tol) return false;
    if (a.theta3 < f(a.theta2) - tol) return false;
    return true;
}

void flat_simplex_point(std::span<const double> coords, std::span<double> out) {
    const std::size_t n = coords.size() + 1;
    double remaining = 1.0;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        // first component of a flat Dirichlet on n-k parts is Beta(1, n-k-1)
        const double exponent = 1.0 / static_cast<double>(n - 1 - k);
        const double p = remaining * (1.0 - std::pow(1.0 - coords[k], exponent));
        out[k] = p;
        remaining -= p;
    }
    out[n - 1] = remaining;
}

CosetUnitary unitary_from_coords(const UnitaryCoords& u) {
    for (const double c : u.u)
        if (!(c > 0.0 && c < 1.0))
            throw std::domain_error("unitary coordinate outside the open interval (0,1)");

    CosetUnitary frame;
    const std::complex<double> i1(0.0, 1.0);

    // column 1: uniform point of CP^3 in the standard basis
    std::array<double, 4> m4;
    flat_simplex_point(std::span(u.u).subspan(0, 3), m4);
    Vector4cd col1;
    col1[0] = std::sqrt(m4[0]);
    for (int j = 1; j < 4; ++j)
        col1[j] = std::sqrt(m4[j]) * std::exp(i1 * (kTwoPi * u.u[2 + j]));
    frame.col(0) = col1;

    // column 2: uniform CP^2 point in the complement of column 1
    Eigen::Matrix<std::complex<double>, 4, 3> basis3;
    {
        Eigen::Matrix<std::complex<double>, 4, 1> fixed = col1;
        complete_basis<1>(fixed, basis3);
    }
    std::array<double, 3> m3;
    flat_simplex_point(std::span(u.u).subspan(6, 2), m3);
    Eigen::Vector3cd w3;
    w3[0] = std::sqrt(m3[0]);
    w3[1] = std::sqrt(m3[1]) * std::exp(i1 * (kTwoPi * u.u[8]));
    w3[2] = std::sqrt(m3[2]) * std::exp(i1 * (kTwoPi * u.u[9]));
    frame.col(1) = basis3 * w3;

    // column 3: uniform CP^1 point in the remaining complement
    Eigen::Matrix<std::complex<double>, 4, 2> basis2;
    {
        Eigen::Matrix<std::complex<double>, 4, 2> fixed;
        fixed.col(0) = frame.col(0);
        fixed.col(1) = frame.col(1);
        complete_basis<2>(fixed, basis2);
    }
    const double p1 = u.u[10];  // flat on the 1-simplex
    Eigen::Vector2cd w2;
    w2[0] = std::sqrt(p1);
    w2[1] = std::sqrt(1.0 - p1) * std::exp(i1 * (kTwoPi * u.u[11]));
    frame.col(2) = basis2 * w2;

    // column 4: the leftover direction (phase lies in the stabilizer)
    Eigen::Matrix<std::complex<double>, 4, 1> basis1;
    {
        Eigen::Matrix<std::complex<double>, 4, 3> fixed;
        fixed.col(0) = frame.col(0);
        fixed.col(1) = frame.col(1);
        fixed.col(2) = frame.col(2);
        complete_basis<3>(fixed, basis1);
    }
    frame.col(3) = basis1;
    return frame;
}

DensityMatrix assemble_density(const CosetUnitary& frame, const Spectrum& s) {
    const Eigen::Vector4d lam(s.lambda[0], s.lambda[1], s.lambda[2], s.lambda[3]);
    DensityMatrix rho = frame * lam.asDiagonal() * frame.adjoint();
    // symmetrize away the last-ulp Hermiticity drift from the two products
    rho = 0.5 * (rho + rho.adjoint().eval());
    return rho;
}

}  // namespace sepvol
