#pragma once

#include "dirac/channel.hpp"
#include "dirac/potentials.hpp"
#include "dirac/radial_grid.hpp"

#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

namespace dirac {

/// No bound state with the requested index exists in the energy window.
class NoBoundState : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Root refinement or bracketing did not converge; the message carries the
/// last bracket.
class ConvergenceFailure : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

struct SolverOptions {
    /// Width of the final energy bracket, mc^2.
    double energy_tolerance = 1e-12;
    double ode_rtol = 1e-11;
    double ode_atol = 1e-13;
    /// Multiplies the point density of the default grid.
    double grid_scale = 1.0;
    int max_iterations = 200;
    /// Solve on this grid instead of one built from the converged energy.
    std::optional<RadialGrid> grid;
};

enum class Direction { outward, inward };

/// One shooting sweep. Samples outside the swept range are zero; inside it
/// the components are scaled to unit amplitude at the match point.
struct Sweep {
    Direction direction;
    std::size_t match_index;
    std::vector<double> psi1;
    std::vector<double> psi2;
    std::vector<double> phase;         // atan2(psi2, psi1), continuous along the sweep
    std::vector<double> log_amplitude; // ln sqrt(psi1^2 + psi2^2) before rescaling
    double ratio_at_match;             // psi2/psi1 at the match point
};

struct RadialSolution {
    Channel ch;
    double E;
    RadialGrid grid;
    std::vector<double> psi1;
    std::vector<double> psi2;
    int nodes1 = 0;
    int nodes2 = 0;
    double norm = 0.0;
    std::size_t match_index = 0;
    int iterations = 0;
};

/// Open interval of energies with exponentially decaying solutions,
/// (V_inf - 1, V_inf + 1) shrunk by 1e-9 at each end.
struct EnergyWindow {
    double lo;
    double hi;
};
EnergyWindow bound_state_window(PotentialModel const& pot) noexcept;

/// Outermost radius where E - V(r) = 1 (edge of the classically allowed
/// region for an attractive, increasing potential).
double outer_turning_point(PotentialModel const& pot, double E);

/// Default grid for a state of energy E: logarithmic from 1e-7/kappa to
/// 1/kappa, linear out to the turning point plus 40/kappa.
RadialGrid default_grid(PotentialModel const& pot, double E, double grid_scale = 1.0);

/// Integrates the coupled radial equations at trial energy E. The outward
/// sweep starts from the regular power-law solution at r_min, the inward sweep
/// from the decaying exponential at r_max.
Sweep integrate_radial(PotentialModel const& pot, Channel const& ch, double E, RadialGrid const& grid,
                       Direction direction, std::size_t match_index, SolverOptions const& opts = {});

/// Angle between the outward and inward solutions at the match point,
/// reduced to (-pi/2, pi/2]. Zero at an eigenvalue and independent of the
/// normalisation of either sweep.
double matching_mismatch(PotentialModel const& pot, Channel const& ch, double E, RadialGrid const& grid,
                         std::size_t match_index, SolverOptions const& opts = {});

/// Number of bound states of the channel strictly below E.
int count_states_below(PotentialModel const& pot, Channel const& ch, double E, SolverOptions const& opts = {});

/// The ch.n()-th eigenvalue of the channel in increasing order, with
/// normalised components (psi1 > 0 near the origin).
RadialSolution solve_eigenvalue(PotentialModel const& pot, Channel const& ch, SolverOptions const& opts = {});

/// Strict sign changes, ignoring samples below 1e-10 of the largest magnitude.
int count_nodes(std::span<double const> samples);

/// Rescales both components so that the integral of psi1^2 + psi2^2 is one.
RadialSolution normalize(RadialSolution sol);

/// CSV with columns r,psi1,psi2.
void write_wavefunction_csv(std::ostream& os, RadialSolution const& sol);

} // namespace dirac
