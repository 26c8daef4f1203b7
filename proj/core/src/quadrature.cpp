#include "sepvol/quadrature.hpp"

#include <numbers>
#include <span>
#include <vector>

namespace sepvol {

namespace {

struct BoxIntegrator {
    const std::function<double(std::span<const double>)>& f;
    int dim;
    double hi;
    std::vector<double> coords;

    // level k integrates coordinate k; tolerance shrinks by 2*hi per level so
    // the inner errors stay inside the outer budget.
    double level(int k, double tol) {
        if (k == dim)
            return f(std::span<const double>(coords.data(),
                                             static_cast<std::size_t>(dim)));
        return integrate(
            [&](double x) {
                coords[static_cast<std::size_t>(k)] = x;
                return level(k + 1, tol / (2.0 * hi));
            },
            0.0, hi, 0.5 * tol);
    }
};

}  // namespace

double integrate_box(const std::function<double(std::span<const double>)>& f,
                     int dim, double hi, double abs_tol) {
    BoxIntegrator box{f, dim, hi, std::vector<double>(static_cast<std::size_t>(dim))};
    return box.level(0, abs_tol);
}

void gauss_legendre(int n, double hi, std::vector<double>& nodes,
                    std::vector<double>& weights) {
    nodes.resize(static_cast<std::size_t>(n));
    weights.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < (n + 1) / 2; ++i) {
        // Chebyshev-based initial guess, then Newton on P_n
        double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        nodes[static_cast<std::size_t>(i)] = 0.5 * hi * (1.0 - x);
        nodes[static_cast<std::size_t>(n - 1 - i)] = 0.5 * hi * (1.0 + x);
        weights[static_cast<std::size_t>(i)] = 0.5 * hi * w;
        weights[static_cast<std::size_t>(n - 1 - i)] = 0.5 * hi * w;
    }
}

double tensor_box(const std::function<double(std::span<const double>)>& f,
                  int dim, double hi, int order) {
    std::vector<double> x, w;
    gauss_legendre(order, hi, x, w);
    std::vector<double> coords(static_cast<std::size_t>(dim));
    std::vector<int> idx(static_cast<std::size_t>(dim), 0);
    double sum = 0.0;
    for (;;) {
        double wt = 1.0;
        for (int d = 0; d < dim; ++d) {
            coords[static_cast<std::size_t>(d)] = x[static_cast<std::size_t>(idx[static_cast<std::size_t>(d)])];
            wt *= w[static_cast<std::size_t>(idx[static_cast<std::size_t>(d)])];
        }
        sum += wt * f(coords);
        int d = 0;
        while (d < dim && ++idx[static_cast<std::size_t>(d)] == order) {
            idx[static_cast<std::size_t>(d)] = 0;
            ++d;
        }
        if (d == dim) break;
    }
    return sum;
}

}  // namespace sepvol
