#pragma once

#include "dirac/channel.hpp"
#include "dirac/potentials.hpp"
#include "dirac/radial_solver.hpp"

#include <array>
#include <stdexcept>
#include <string>

namespace dirac {

/// The pair does not satisfy V_a <= V_b with a strict gap somewhere.
class HypothesisViolation : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

enum class Verdict { pass, fail, hypothesis_violated };

std::string_view verdict_name(Verdict v) noexcept;

/// Both sides of
///   int (phi1 psi1 + phi2 psi2)(V_a - V_b) dr = (E_a - E_b) int (phi1 psi1 + phi2 psi2) dr
/// where (psi1, psi2) solve problem a and (phi1, phi2) problem b.
struct IdentityCheck {
    double lhs;
    double rhs;
    double overlap; // int (phi1 psi1 + phi2 psi2) dr
    double residual() const noexcept { return lhs - rhs; }
    double relative_residual() const noexcept;
};

struct ComparisonReport {
    Channel ch{-1, 1, 1};
    std::string potential_a;
    std::string potential_b;
    double E_a = 0.0;
    double E_b = 0.0;
    double lhs = 0.0;
    double rhs = 0.0;
    double overlap = 0.0;
    double identity_residual = 0.0;
    double relative_identity_residual = 0.0;
    double derivative_residual = 0.0;
    double min_potential_gap = 0.0; // min over the grid of V_b - V_a
    std::array<int, 4> nodes{};     // psi1, psi2, phi1, phi2
    Verdict verdict = Verdict::fail;
    std::string note;
};

struct ComparisonOptions {
    SolverOptions solver;
    /// Runs noded channels anyway; the verdict is then informational.
    bool allow_noded = false;
};

IdentityCheck identity_residual(RadialSolution const& a, RadialSolution const& b, PotentialModel const& pot_a,
                                PotentialModel const& pot_b);

/// max_i r_i |(phi1 psi2 - psi1 phi2)' - (phi1 psi1 + phi2 psi2)(V_a - V_b - (E_a - E_b))| / amp_i
/// over interior points, with amp_i = (|psi1| + |psi2|)(|phi1| + |phi2|) and
/// the derivative taken by five-point finite differences. Points whose
/// amplitude falls below 1e-10 of the peak are skipped.
double derivative_identity_check(RadialSolution const& a, RadialSolution const& b, PotentialModel const& pot_a,
                                 PotentialModel const& pot_b);

/// A grid fine enough for both states: the smaller inner radius, the larger
/// outer radius, and the denser spacing of the two default grids.
RadialGrid common_grid(PotentialModel const& pot_a, double E_a, PotentialModel const& pot_b, double E_b,
                       double grid_scale = 1.0);

/// Solves both problems on a common grid and checks E_a < E_b. Throws
/// HypothesisViolation if V_a <= V_b fails anywhere on the grid or holds with
/// equality everywhere.
ComparisonReport assert_ordering(PotentialModel const& pot_a, PotentialModel const& pot_b, Channel const& ch,
                                 ComparisonOptions const& opts = {});

} // namespace dirac
