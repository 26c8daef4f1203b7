#pragma once

#include <array>
#include <cmath>
#include <functional>
#include <queue>
#include <span>
#include <stdexcept>
#include <vector>

namespace sepvol {

struct QuadratureError : std::runtime_error {
    QuadratureError(const std::string& what, double achieved)
        : std::runtime_error(what), achieved_error(achieved) {}
    double achieved_error;
};

namespace detail {

// 15-point Kronrod nodes/weights with the embedded 7-point Gauss rule
// (QUADPACK dqk15 constants).
inline constexpr std::array<double, 8> kKronrodX = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
inline constexpr std::array<double, 8> kKronrodW = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
inline constexpr std::array<double, 4> kGaussW = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

template <typename F>
void gk15(const F& f, double a, double b, double& kronrod, double& error) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    const double fc = f(c);
    double resk = kKronrodW[7] * fc;
    double resg = kGaussW[3] * fc;
    for (int j = 0; j < 7; ++j) {
        const double x = h * kKronrodX[j];
        const double fsum = f(c - x) + f(c + x);
        resk += kKronrodW[j] * fsum;
        if (j % 2 == 1) resg += kGaussW[j / 2] * fsum;
    }
    kronrod = resk * h;
    error = std::abs((resk - resg) * h);
    // QUADPACK-style sharpening of the raw Gauss/Kronrod difference
    if (error != 0.0) {
        const double scale = std::pow(200.0 * error / std::abs(kronrod + 1e-300), 1.5);
        if (scale < 1.0) error = std::abs(kronrod) * scale + 1e-300;
    }
}

struct Segment {
    double error, value, a, b;
    bool operator<(const Segment& o) const { return error < o.error; }
};

}  // namespace detail

/// Globally adaptive Gauss-Kronrod integration of f over [a, b]: the segment
/// with the largest error estimate is bisected until the summed error meets
/// the absolute tolerance. Throws QuadratureError when the budget cannot be
/// met within max_segments.
template <typename F>
double integrate(const F& f, double a, double b, double abs_tol,
                 int max_segments = 4000) {
    std::priority_queue<detail::Segment> queue;
    double value, error;
    detail::gk15(f, a, b, value, error);
    double total_error = error;
    queue.push({error, value, a, b});
    while (total_error > abs_tol &&
           static_cast<int>(queue.size()) < max_segments) {
        const detail::Segment s = queue.top();
        if (s.b - s.a < 1e-14) break;  // roundoff floor
        queue.pop();
        const double mid = 0.5 * (s.a + s.b);
        double v1, e1, v2, e2;
        detail::gk15(f, s.a, mid, v1, e1);
        detail::gk15(f, mid, s.b, v2, e2);
        total_error += e1 + e2 - s.error;
        queue.push({e1, v1, s.a, mid});
        queue.push({e2, v2, mid, s.b});
    }
    if (total_error > 8.0 * abs_tol)
        throw QuadratureError("quadrature did not converge to requested tolerance",
                              total_error);
    // final value from the segments themselves, smallest first
    std::vector<double> parts;
    parts.reserve(queue.size());
    while (!queue.empty()) {
        parts.push_back(queue.top().value);
        queue.pop();
    }
    double sum = 0.0;
    for (auto it = parts.rbegin(); it != parts.rend(); ++it) sum += *it;
    return sum;
}

/// Iterated integration over the box [0, hi]^dim with per-level tolerance
/// splitting; the innermost dimension varies fastest.
double integrate_box(const std::function<double(std::span<const double>)>& f,
                     int dim, double hi, double abs_tol);

/// Gauss-Legendre nodes and weights on [0, hi] (Newton iteration on the
/// Legendre recurrence).
void gauss_legendre(int n, double hi, std::vector<double>& nodes,
                    std::vector<double>& weights);

/// Fixed-order tensor-product Gauss-Legendre cubature over [0, hi]^dim.
/// Cheaper than nesting adaptive rules in four dimensions; callers verify
/// convergence by comparing two orders.
double tensor_box(const std::function<double(std::span<const double>)>& f,
                  int dim, double hi, int order);

}  // namespace sepvol
