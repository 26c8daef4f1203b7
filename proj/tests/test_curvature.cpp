#include "sepvol/curvature.hpp"

#include "sepvol/measures.hpp"
#include "sepvol/state_space.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

using namespace sepvol;

namespace {
constexpr double kPi = std::numbers::pi;

// elementary symmetric polynomials by expanding prod (t - lambda_i)
// = t^4 - e1 t^3 + e2 t^2 - e3 t + e4
std::array<double, 4> elementary_by_expansion(const Spectrum& s) {
    std::array<double, 5> c{};  // coefficients by degree
    c[0] = 1.0;
    int deg = 0;
    for (const double l : s.lambda) {
        ++deg;
        for (int k = deg; k > 0; --k)
            c[static_cast<std::size_t>(k)] =
                c[static_cast<std::size_t>(k - 1)] - l * c[static_cast<std::size_t>(k)];
        c[0] *= -l;
    }
    return {-c[3], c[2], -c[1], c[0]};
}

}  // namespace

TEST_SUITE("curvature") {

TEST_CASE("scalar curvature at the maximally mixed state is 570") {
    const auto s = scalar_curvature({{0.25, 0.25, 0.25, 0.25}});
    CHECK_FALSE(s.singular);
    CHECK(s.value == doctest::Approx(570.0).epsilon(1e-12));
}

TEST_CASE("two zero eigenvalues force the singular flag") {
    CHECK(scalar_curvature({{0.5, 0.5, 0.0, 0.0}}).singular);
    CHECK(scalar_curvature({{1.0, 0.0, 0.0, 0.0}}).singular);
}

TEST_CASE("generic spectrum matches the symmetric-polynomial oracle") {
    const Spectrum s{{0.4, 0.3, 0.2, 0.1}};
    const auto e = elementary_by_expansion(s);
    CHECK(e[0] == doctest::Approx(1.0).epsilon(1e-13));
    const double num = 63.0 * e[3] + 35.0 * e[2] * e[2] - 43.0 * e[1] * e[2] -
                       7.0 * e[2] - 3.0 * e[1] * e[1];
    const double den = e[3] + e[2] * e[2] - e[1] * e[2];
    const auto got = scalar_curvature(s);
    CHECK_FALSE(got.singular);
    CHECK(got.value == doctest::Approx(6.0 * num / den).epsilon(1e-11));
}

TEST_CASE("curvature is a symmetric function of the spectrum") {
    std::array<double, 4> lam{0.45, 0.3, 0.2, 0.05};
    const double base = scalar_curvature({lam}).value;
    std::sort(lam.begin(), lam.end());
    do {
        CHECK(scalar_curvature({lam}).value == doctest::Approx(base).epsilon(1e-10));
    } while (std::next_permutation(lam.begin(), lam.end()));
}

TEST_CASE("one-sided minimum over random spectra") {
    std::mt19937_64 rng(31);
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    for (int k = 0; k < 100000; ++k) {
        std::array<double, 3> u{uni(rng), uni(rng), uni(rng)};
        std::array<double, 4> lam;
        flat_simplex_point(u, lam);
        const auto s = scalar_curvature({lam});
        if (s.singular) continue;
        CHECK(s.value >= 570.0 - 1e-6);
    }
}

TEST_CASE("minimum formula by level count") {
    CHECK(min_scalar_curvature(2) == doctest::Approx(24.0));
    CHECK(min_scalar_curvature(3) == doctest::Approx(164.0));
    CHECK(min_scalar_curvature(4) == doctest::Approx(570.0));
    CHECK_THROWS_AS(min_scalar_curvature(1), std::invalid_argument);
}

TEST_CASE("ball geometry") {
    const auto unit15 = ball_geometry(15, 1.0);
    CHECK(unit15.volume ==
          doctest::Approx(256.0 * std::pow(kPi, 7) / 2027025.0).epsilon(1e-12));
    CHECK(unit15.area == doctest::Approx(15.0 * unit15.volume).epsilon(1e-13));

    // radius carrying the full state-space volume
    CHECK(ball_geometry(15, 1.19682).volume ==
          doctest::Approx(std::pow(kPi, 8) / 1680.0).epsilon(1e-4));
    CHECK(ball_geometry(15, 1.19682).area == doctest::Approx(70.7865).epsilon(1e-4));

    // area = d * volume / r across dimensions
    std::mt19937_64 rng(32);
    std::uniform_real_distribution<double> uni(0.1, 3.0);
    for (int d = 1; d <= 20; ++d) {
        const double r = uni(rng);
        const auto g = ball_geometry(d, r);
        CHECK(g.area == doctest::Approx(d * g.volume / r).epsilon(1e-12));
    }
    CHECK_THROWS_AS(ball_geometry(0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(ball_geometry(3, -1.0), std::invalid_argument);
}

TEST_CASE("levy-gromov comparison arithmetic") {
    const double v_sep = std::pow(kPi, 6) / 2310.0;
    const double v_total = std::pow(kPi, 8) / 1680.0;
    const auto cmp = levy_gromov_comparison(v_sep, v_total, 1.75414);
    CHECK(cmp.alpha == doctest::Approx(8.0 / (11.0 * kPi * kPi)).epsilon(1e-13));
    CHECK(cmp.w == doctest::Approx(1.31521).epsilon(1e-5));
    // the defining quotient of the stated inputs
    CHECK(cmp.ratio == doctest::Approx(1.75414 / v_total).epsilon(1e-13));
    CHECK(cmp.ratio == doctest::Approx(0.310581).epsilon(1e-5));
    CHECK_FALSE(cmp.inequality_holds);

    // w in closed form: 15 alpha^(14/15)
    CHECK(cmp.w ==
          doctest::Approx(15.0 * std::pow(cmp.alpha, 14.0 / 15.0)).epsilon(1e-12));

    SUBCASE("degenerate ends") {
        const auto full = levy_gromov_comparison(v_total, v_total, 1.0);
        CHECK(full.alpha == doctest::Approx(1.0));
        CHECK(full.small_ball_area ==
              doctest::Approx(ball_geometry(15, 1.0).area).epsilon(1e-12));
        const auto empty = levy_gromov_comparison(0.0, v_total, 0.0);
        CHECK(empty.w == 0.0);
        CHECK(empty.inequality_holds);
    }
    CHECK_THROWS_AS(levy_gromov_comparison(2.0, 1.0, 1.0), std::invalid_argument);
}

}  // TEST_SUITE
