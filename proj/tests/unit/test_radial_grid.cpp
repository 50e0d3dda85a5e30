#include "dirac/radial_grid.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

using dirac::RadialGrid;

TEST_CASE("construction invariants") {
    CHECK_THROWS_AS(RadialGrid(std::vector<double>(10, 1.0)), std::invalid_argument);
    std::vector<double> pts(1200);
    for (std::size_t i = 0; i < pts.size(); ++i) {
        pts[i] = 0.01 * double(i + 1);
    }
    CHECK_NOTHROW(RadialGrid{pts});
    auto bad = pts;
    bad[500] = bad[499];
    CHECK_THROWS_AS(RadialGrid{bad}, std::invalid_argument);
    bad = pts;
    bad[0] = 0.0;
    CHECK_THROWS_AS(RadialGrid{bad}, std::invalid_argument);
    CHECK_THROWS_AS(RadialGrid::log_linear(1.0, 0.5, 2.0, 0.01), std::invalid_argument);
}

TEST_CASE("log-linear layout") {
    auto const g = RadialGrid::log_linear(1e-7, 1.0, 50.0, 0.01);
    CHECK(g.size() >= RadialGrid::min_points);
    CHECK(g.r_min() == doctest::Approx(1e-7));
    CHECK(g.r_max() >= 50.0);
    auto const r = g.points();
    for (std::size_t i = 1; i < r.size(); ++i) {
        REQUIRE(r[i] > r[i - 1]);
    }
    // ratio constant in the log part, spacing constant in the linear part
    CHECK(r[11] / r[10] == doctest::Approx(r[101] / r[100]).epsilon(1e-12));
    std::size_t const n = r.size();
    CHECK(r[n - 1] - r[n - 2] == doctest::Approx(r[n - 100] - r[n - 101]).epsilon(1e-9));
    CHECK(g.nearest_index(1.0) < n);
    CHECK(std::abs(r[g.nearest_index(1.0)] - 1.0) < 0.011);
}

TEST_CASE("quadrature accuracy") {
    auto const g = RadialGrid::log_linear(1e-8, 1.0, 60.0, 0.01);
    auto const r = g.points();
    std::vector<double> f(r.size());
    // int_0^inf r^2 e^{-r} dr = 2
    for (std::size_t i = 0; i < r.size(); ++i) {
        f[i] = r[i] * r[i] * std::exp(-r[i]);
    }
    CHECK(g.integrate(f) == doctest::Approx(2.0).epsilon(1e-10));
    // int_0^inf e^{-r^2} dr = sqrt(pi)/2 (the missing [0, r_min] piece is ~1e-8)
    for (std::size_t i = 0; i < r.size(); ++i) {
        f[i] = std::exp(-r[i] * r[i]);
    }
    CHECK(g.integrate(f) == doctest::Approx(0.5 * std::sqrt(std::numbers::pi) - 1e-8).epsilon(1e-9));
    double wsum = 0.0;
    for (double w : g.weights()) {
        CHECK(w > 0.0);
        wsum += w;
    }
    CHECK(wsum == doctest::Approx(g.r_max() - g.r_min()).epsilon(1e-13));
    CHECK_THROWS_AS(g.integrate(std::vector<double>(3)), std::invalid_argument);
}

TEST_CASE("odd and even interval counts") {
    for (std::size_t n : {1001u, 1002u}) {
        std::vector<double> pts(n);
        for (std::size_t i = 0; i < n; ++i) {
            double const x = double(i) / double(n - 1);
            pts[i] = 1.0 + 2.0 * x + 0.3 * x * x; // smooth nonuniform map onto [1, 3.3]
        }
        RadialGrid const g(pts);
        std::vector<double> quad(n), cubic(n);
        for (std::size_t i = 0; i < n; ++i) {
            quad[i] = pts[i] * pts[i];
            cubic[i] = quad[i] * pts[i];
        }
        // exact for quadratics on any spacing, h^4-accurate beyond
        CHECK(g.integrate(quad) == doctest::Approx((std::pow(3.3, 3) - 1.0) / 3.0).epsilon(1e-14));
        CHECK(g.integrate(cubic) == doctest::Approx((std::pow(3.3, 4) - 1.0) / 4.0).epsilon(1e-11));
    }
}

TEST_CASE("five-point derivative") {
    auto const g = RadialGrid::log_linear(1e-3, 1.0, 20.0, 0.005);
    auto const r = g.points();
    std::vector<double> f(r.size());
    for (std::size_t i = 0; i < r.size(); ++i) {
        f[i] = std::sin(r[i]) * std::exp(-0.1 * r[i]);
    }
    auto const d = dirac::finite_difference_derivative(g, f);
    double worst = 0.0;
    for (std::size_t i = 0; i < r.size(); ++i) {
        double const exact = std::exp(-0.1 * r[i]) * (std::cos(r[i]) - 0.1 * std::sin(r[i]));
        worst = std::max(worst, std::abs(d[i] - exact));
    }
    CHECK(worst < 1e-7);
}
