#include "dirac/radial_solver.hpp"

#include "dirac/coulomb_exact.hpp"
#include "dirac/table1_reference.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <cmath>
#include <sstream>
#include <vector>

using namespace dirac;

namespace {

double residual_scaled(RadialSolution const& s, PotentialModel const& pot) {
    auto const r = s.grid.points();
    auto const d1 = finite_difference_derivative(s.grid, s.psi1);
    auto const d2 = finite_difference_derivative(s.grid, s.psi2);
    auto const V = sample(pot, r);
    double peak = 0.0;
    for (std::size_t i = 0; i < r.size(); ++i) {
        peak = std::max(peak, std::abs(s.psi1[i]) + std::abs(s.psi2[i]));
    }
    double const tk = s.ch.tau() * s.ch.k();
    double worst = 0.0;
    for (std::size_t i = 2; i + 2 < r.size(); ++i) {
        double const amp = std::abs(s.psi1[i]) + std::abs(s.psi2[i]);
        if (amp < 1e-6 * peak) {
            continue;
        }
        double const e2 = d2[i] - tk / r[i] * s.psi2[i] - (1.0 + V[i] - s.E) * s.psi1[i];
        double const e1 = d1[i] + tk / r[i] * s.psi1[i] - (1.0 - V[i] + s.E) * s.psi2[i];
        worst = std::max(worst, r[i] * (std::abs(e1) + std::abs(e2)) / amp);
    }
    return worst;
}

} // namespace

TEST_CASE("bound-state window") {
    auto const w = bound_state_window(PureCoulomb{0.3});
    CHECK(w.lo == doctest::Approx(-1.0 + 1e-9).epsilon(1e-15));
    CHECK(w.hi == doctest::Approx(1.0 - 1e-9).epsilon(1e-15));
    auto const sw = bound_state_window(ShiftedCoulomb{0.05, 0.3});
    CHECK(sw.hi == doctest::Approx(1.05 - 1e-9).epsilon(1e-15));
}

TEST_CASE("count_nodes") {
    CHECK(count_nodes(std::vector<double>{0.0, 1.0, 2.0, 1.0, 0.0}) == 0);
    CHECK(count_nodes(std::vector<double>{0.0, 1.0, 0.0, 1.0, 0.5}) == 0);
    CHECK(count_nodes(std::vector<double>{0.0, 1.0, -1.0, 1.0, 0.0}) == 2);
    CHECK(count_nodes(std::vector<double>{0.0, 1.0, 1e-12, -1e-12, 1.0}) == 0);
    CHECK(count_nodes(std::vector<double>{0.0, 1.0, 0.0, -1.0}) == 1);
}

TEST_CASE("Coulomb oracle across channels") {
    for (double u : {0.1, 0.3, 0.58}) {
        for (int tau : {-1, 1}) {
            for (int two_j : {1, 3}) {
                for (int n : {1, 2}) {
                    Channel const ch(tau, two_j, n);
                    auto const sol = solve_eigenvalue(PureCoulomb{u}, ch);
                    double const exact = double(oracle::coulomb_D(u, tau, ch.k(), n));
                    INFO("u = " << u << " " << spectroscopic_label(ch));
                    CHECK(std::abs(sol.E - exact) < 1e-8);
                    CHECK(std::abs(sol.norm - 1.0) < 1e-8);
                    // nodes: n - 1 in the large component, one more in the small one for tau = +1
                    CHECK(sol.nodes1 == n - 1);
                    CHECK(sol.nodes2 == n - 1 + (tau == 1 ? 1 : 0));
                }
            }
        }
    }
}

TEST_CASE("ground state at the Z=80 unscreened coupling") {
    auto const sol = solve_eigenvalue(PureCoulomb{0.583788}, Channel(-1, 1, 1));
    CHECK(std::abs(sol.E - std::sqrt(1.0 - 0.583788 * 0.583788)) < 1e-8);
    CHECK(sol.E == doctest::Approx(0.811906).epsilon(1e-6));
}

TEST_CASE("shift covariance") {
    for (double A : {-0.05, 0.01, 0.2}) {
        for (double B : {0.15, 0.45}) {
            for (Channel const& ch : {Channel(-1, 1, 1), Channel(-1, 3, 1), Channel(1, 1, 1)}) {
                double const shifted = solve_eigenvalue(ShiftedCoulomb{A, B}, ch).E;
                double const pure = solve_eigenvalue(PureCoulomb{B}, ch).E;
                CHECK(std::abs(shifted - (A + pure)) < 1e-8);
                CHECK(std::abs(shifted - (A + coulomb_eigenvalue(B, ch))) < 1e-8);
            }
        }
    }
}

TEST_CASE("screened Coulomb reference cells") {
    PhysicalConstants const c;
    auto const z20 = solve_eigenvalue(ScreenedCoulomb::from_charge(20), Channel(-1, 1, 1));
    CHECK(std::abs(to_binding_keV(z20.E, c) - (-4.3157)) < 0.005);
    auto const z80 = solve_eigenvalue(ScreenedCoulomb::from_charge(80), Channel(-1, 3, 1));
    CHECK(std::abs(to_binding_keV(z80.E, c) - (-14.9877)) < 0.005);
    CHECK(z20.nodes1 == 0);
    CHECK(z20.nodes2 == 0);
    CHECK(z80.nodes1 == 0);
    CHECK(z80.nodes2 == 0);
}

TEST_CASE("grid robustness") {
    for (PotentialModel const& pot : {PotentialModel(ScreenedCoulomb::from_charge(50)), PotentialModel(PureCoulomb{0.4})}) {
        for (Channel const& ch : {Channel(-1, 1, 1), Channel(-1, 3, 1)}) {
            SolverOptions fine;
            fine.grid_scale = 2.0;
            double const e1 = solve_eigenvalue(pot, ch).E;
            double const e2 = solve_eigenvalue(pot, ch, fine).E;
            CHECK(std::abs(e1 - e2) < 1e-9);
        }
    }
}

TEST_CASE("boundary behaviour, ODE residual and normalisation") {
    auto const pot = ScreenedCoulomb::from_charge(60);
    for (Channel const& ch : {Channel(-1, 1, 1), Channel(-1, 3, 1), Channel(1, 1, 1), Channel(-1, 1, 2)}) {
        auto const sol = solve_eigenvalue(pot, ch);
        double peak = 0.0;
        for (std::size_t i = 0; i < sol.psi1.size(); ++i) {
            peak = std::max(peak, std::abs(sol.psi1[i]) + std::abs(sol.psi2[i]));
        }
        INFO(spectroscopic_label(ch));
        CHECK(std::abs(sol.psi1.front()) < 1e-5 * peak);
        CHECK(std::abs(sol.psi2.front()) < 1e-5 * peak);
        CHECK(std::abs(sol.psi1.back()) < 1e-12 * peak);
        CHECK(std::abs(sol.psi2.back()) < 1e-12 * peak);
        CHECK(std::abs(sol.norm - 1.0) < 1e-8);
        CHECK(sol.psi1[1] > 0.0);
        CHECK(residual_scaled(sol, pot) < 1e-6);
    }
}

TEST_CASE("normalize") {
    auto const sol = solve_eigenvalue(PureCoulomb{0.5}, Channel(-1, 1, 1));
    auto const again = normalize(sol);
    for (std::size_t i = 0; i < sol.psi1.size(); i += 97) {
        CHECK(again.psi1[i] == doctest::Approx(sol.psi1[i]).epsilon(1e-12));
        CHECK(again.psi2[i] == doctest::Approx(sol.psi2[i]).epsilon(1e-12));
    }
    auto scaled = sol;
    for (auto& x : scaled.psi1) {
        x *= 7.0;
    }
    for (auto& x : scaled.psi2) {
        x *= 7.0;
    }
    auto const back = normalize(scaled);
    for (std::size_t i = 0; i < sol.psi1.size(); i += 97) {
        CHECK(back.psi1[i] == doctest::Approx(sol.psi1[i]).epsilon(1e-12));
    }
    auto zero = sol;
    std::fill(zero.psi1.begin(), zero.psi1.end(), 0.0);
    std::fill(zero.psi2.begin(), zero.psi2.end(), 0.0);
    CHECK_THROWS_AS(normalize(zero), std::invalid_argument);
}

TEST_CASE("small to large component ratio of the Coulomb ground state") {
    for (double u : {0.2, 0.6, 0.9}) {
        auto const sol = solve_eigenvalue(PureCoulomb{u}, Channel(-1, 1, 1));
        std::vector<double> p1(sol.psi1.size()), p2(sol.psi2.size());
        for (std::size_t i = 0; i < p1.size(); ++i) {
            p1[i] = sol.psi1[i] * sol.psi1[i];
            p2[i] = sol.psi2[i] * sol.psi2[i];
        }
        double const D = std::sqrt(1.0 - u * u);
        CHECK(sol.grid.integrate(p2) / sol.grid.integrate(p1) == doctest::Approx((1.0 - D) / (1.0 + D)).epsilon(1e-8));
    }
}

TEST_CASE("integrate_radial: mismatch and node signal") {
    PureCoulomb const pot{0.3};
    Channel const ch(-1, 1, 1);
    double const E0 = std::sqrt(1.0 - 0.09);
    CHECK(E0 == doctest::Approx(0.953939).epsilon(1e-6));

    // the mismatch at the exact level, converted to an energy offset by its slope
    for (double scale : {0.5, 1.0, 2.0}) {
        auto const g = default_grid(pot, E0, scale);
        std::size_t const match = g.size() / 2;
        double const m = matching_mismatch(pot, ch, E0, g, match);
        double const slope = (matching_mismatch(pot, ch, E0 + 1e-6, g, match) -
                              matching_mismatch(pot, ch, E0 - 1e-6, g, match)) / 2e-6;
        CHECK(std::abs(m / slope) < 1e-8);
    }

    auto nodes_of_outward = [&](double E) {
        auto const g = default_grid(pot, E);
        auto const sw = integrate_radial(pot, ch, E, g, Direction::outward, g.nearest_index(outer_turning_point(pot, E)));
        return count_nodes(sw.psi1);
    };
    CHECK(nodes_of_outward(0.90) == 0);
    int levels_below = 0;
    for (int n = 1; n < 200; ++n) {
        levels_below += oracle::coulomb_D(0.3L, -1, 1, n) < 0.999L ? 1 : 0;
    }
    CHECK(levels_below >= 1);
    CHECK(nodes_of_outward(0.999) >= 1);
    CHECK(count_states_below(pot, ch, 0.999) == levels_below);
    CHECK(count_states_below(pot, ch, 0.90) == 0);
}

TEST_CASE("shifted problem: mismatch vanishes at A + D(B)") {
    ShiftedCoulomb const pot{0.03, 0.4};
    Channel const ch(-1, 3, 1);
    double const E = 0.03 + coulomb_eigenvalue(0.4, ch);
    auto const g = default_grid(pot, E);
    std::size_t const match = g.size() / 2;
    double const slope =
        (matching_mismatch(pot, ch, E + 1e-6, g, match) - matching_mismatch(pot, ch, E - 1e-6, g, match)) / 2e-6;
    CHECK(std::abs(matching_mismatch(pot, ch, E, g, match) / slope) < 1e-8);
}

TEST_CASE("failures are explicit") {
    CHECK_THROWS_AS(solve_eigenvalue(PureCoulomb{0.1}, Channel(-1, 1, 200)), NoBoundState);
    SolverOptions bad;
    bad.grid_scale = -1.0;
    CHECK_THROWS_AS(solve_eigenvalue(PureCoulomb{0.1}, Channel(-1, 1, 1), bad), std::invalid_argument);
}

TEST_CASE("wavefunction CSV") {
    auto const sol = solve_eigenvalue(PureCoulomb{0.4}, Channel(-1, 1, 1));
    std::ostringstream os;
    write_wavefunction_csv(os, sol);
    std::istringstream is(os.str());
    std::string line;
    std::getline(is, line);
    CHECK(line == "r,psi1,psi2");
    std::size_t rows = 0;
    while (std::getline(is, line)) {
        ++rows;
    }
    CHECK(rows == sol.grid.size());
}
