#include "dirac/comparison.hpp"

#include "dirac/envelope.hpp"

#include <doctest.h>

#include <cmath>

using namespace dirac;

namespace {

Channel const s12(-1, 1, 1);
Channel const p32(-1, 3, 1);

} // namespace

TEST_CASE("identical problems give a vanishing identity") {
    auto const pot = ScreenedCoulomb::from_charge(30);
    auto const a = solve_eigenvalue(pot, s12);
    auto const id = identity_residual(a, a, pot, pot);
    CHECK(id.lhs == 0.0);
    CHECK(id.rhs == 0.0);
    CHECK(id.overlap == doctest::Approx(1.0).epsilon(1e-8));
    CHECK(derivative_identity_check(a, a, pot, pot) < 1e-7);
    CHECK(std::abs(a.E - solve_eigenvalue(pot, s12).E) < 2e-12);
}

TEST_CASE("incompatible solutions are rejected") {
    auto const pot = ScreenedCoulomb::from_charge(30);
    auto const a = solve_eigenvalue(pot, s12);
    auto const b = solve_eigenvalue(pot, p32);
    CHECK_THROWS_AS(identity_residual(a, b, pot, pot), std::invalid_argument);
    auto const c = solve_eigenvalue(ScreenedCoulomb::from_charge(31), s12);
    CHECK_THROWS_AS(identity_residual(a, c, pot, pot), std::invalid_argument);
}

TEST_CASE("hypothesis checks") {
    auto const pot = ScreenedCoulomb::from_charge(40);
    CHECK_THROWS_AS(assert_ordering(pot, pot, s12), HypothesisViolation);
    // tangent below the potential: reversed order
    CHECK_THROWS_AS(assert_ordering(tangent_at(pot, 1.0), pot, s12), HypothesisViolation);
    // a Coulomb potential crossing the screened one
    CHECK_THROWS_AS(assert_ordering(pot, ShiftedCoulomb{-0.01, 0.2}, s12), HypothesisViolation);
    CHECK_THROWS_AS(assert_ordering(pot, tangent_at(pot, 1.0), Channel(1, 1, 1)), std::invalid_argument);
}

TEST_CASE("screened vs tangent pairs") {
    for (int Z : {20, 40, 75}) {
        auto const pot = ScreenedCoulomb::from_charge(Z);
        for (Channel const& ch : {s12, p32}) {
            for (double t : {0.01, minimize_bound(pot, ch).t_star, 50.0}) {
                auto const rep = assert_ordering(pot, tangent_at(pot, t), ch);
                INFO("Z = " << Z << " t = " << t << " " << spectroscopic_label(ch));
                CHECK(rep.verdict == Verdict::pass);
                CHECK(rep.E_a < rep.E_b);
                CHECK(rep.nodes == std::array<int, 4>{0, 0, 0, 0});
                CHECK(rep.relative_identity_residual < 1e-6);
                CHECK(rep.derivative_residual < 1e-4);
                CHECK(rep.min_potential_gap >= 0.0);
                CHECK(rep.overlap > 0.0);
                // both sides share the sign of E_a - E_b
                CHECK(rep.lhs < 0.0);
                CHECK(rep.rhs < 0.0);
            }
        }
    }
}

TEST_CASE("perturbed eigenvalue breaks the pointwise identity") {
    auto const pot = ScreenedCoulomb::from_charge(40);
    auto const tangent = tangent_at(pot, minimize_bound(pot, s12).t_star);
    auto const grid = common_grid(pot, 0.96, tangent, 0.96, 1.0);
    SolverOptions opts;
    opts.grid = grid;
    auto const a = solve_eigenvalue(pot, s12, opts);
    auto b = solve_eigenvalue(tangent, s12, opts);
    double const clean = derivative_identity_check(a, b, pot, tangent);
    b.E += 0.01;
    double const dirty = derivative_identity_check(a, b, pot, tangent);
    CHECK(clean < 1e-4);
    CHECK(dirty > 1e3 * clean);
}

TEST_CASE("integral residual shrinks under refinement") {
    auto const pot = ScreenedCoulomb::from_charge(50);
    auto const tangent = tangent_at(pot, 0.2);
    ComparisonOptions coarse;
    coarse.solver.grid_scale = 0.5;
    ComparisonOptions fine;
    fine.solver.grid_scale = 1.0;
    auto const rc = assert_ordering(pot, tangent, s12, coarse);
    auto const rf = assert_ordering(pot, tangent, s12, fine);
    CHECK(std::abs(rf.identity_residual) < std::abs(rc.identity_residual));
}

TEST_CASE("noded channels run only on request and are labelled") {
    auto const pot = ScreenedCoulomb::from_charge(50);
    ComparisonOptions opts;
    opts.allow_noded = true;
    auto const rep = assert_ordering(pot, tangent_at(pot, 2.0), Channel(-1, 1, 2), opts);
    CHECK(rep.verdict == Verdict::hypothesis_violated);
    CHECK_FALSE(rep.note.empty());
    CHECK(verdict_name(rep.verdict) == "HYPOTHESIS_VIOLATED");
}
