#include "dirac/radial_solver.hpp"

#include "dirac/kernels.hpp"

#include <boost/math/tools/toms748_solve.hpp>
#include <boost/numeric/odeint.hpp>

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <ostream>
#include <sstream>

namespace dirac {

namespace {

namespace odeint = boost::numeric::odeint;

using State = std::array<double, 2>; // {phase, log amplitude}
using Stepper = odeint::controlled_runge_kutta<odeint::runge_kutta_dopri5<State>>;

constexpr double pi = std::numbers::pi;
constexpr double window_margin = 1e-9;
constexpr double inner_radius_factor = 1e-7;
constexpr double decay_lengths = 40.0;
constexpr double base_log_step = 0.015;
constexpr double node_floor = 1e-10;

// Radial equations in Pruefer form with s = ln r:
//   psi1 = rho cos(theta), psi2 = rho sin(theta)
//   dtheta/ds = tau k sin(2 theta) + r [(1 + V - E) cos^2 - (1 - V + E) sin^2]
//   dln(rho)/ds = -tau k cos(2 theta) + r sin(2 theta)
struct PhaseEquations {
    PotentialModel const* pot;
    double tau_k;
    double E;

    void operator()(State const& x, State& dxds, double s) const {
        double const r = std::exp(s);
        double const V = evaluate_unchecked(*pot, r);
        double const c = std::cos(x[0]);
        double const sn = std::sin(x[0]);
        double const sin2 = 2.0 * sn * c;
        double const cos2 = c * c - sn * sn;
        dxds[0] = tau_k * sin2 + r * ((1.0 + V - E) * c * c - (1.0 - V + E) * sn * sn);
        dxds[1] = -tau_k * cos2 + r * sin2;
    }
};

class PhaseIntegrator {
  public:
    PhaseIntegrator(PotentialModel const& pot, Channel const& ch, double E, SolverOptions const& opts)
        : eq_{&pot, static_cast<double>(ch.tau() * ch.k()), E}, atol_(opts.ode_atol), rtol_(opts.ode_rtol),
          stepper_(make_stepper()) {}

    void start(State x, double s) {
        x_ = x;
        s_ = s;
        dt_ = 0.0;
        stepper_ = make_stepper(); // drops the cached FSAL derivative
    }

    /// Advances to s_end (either direction).
    void advance_to(double s_end) {
        double const dir = s_end >= s_ ? 1.0 : -1.0;
        if (dt_ == 0.0 || dt_ * dir < 0.0) {
            dt_ = dir * std::min(1e-3, std::abs(s_end - s_) + 1e-300);
        }
        int failures = 0;
        while ((s_end - s_) * dir > 0.0) {
            double const remaining = s_end - s_;
            bool const clamped = std::abs(dt_) > std::abs(remaining);
            double dt = clamped ? remaining : dt_;
            double const dt_used = dt;
            if (stepper_.try_step(eq_, x_, s_, dt) == odeint::success) {
                // keep the unclamped step size unless the controller asked for less
                dt_ = clamped ? dir * std::max(std::abs(dt_), std::abs(dt)) : dt;
                if (clamped && std::abs(s_end - s_) < 1e-14 * std::max(1.0, std::abs(s_end))) {
                    s_ = s_end;
                }
                failures = 0;
            } else {
                dt_ = dt;
                if (++failures > 200 || std::abs(dt) < 1e-14 * std::abs(dt_used) + 1e-300) {
                    throw ConvergenceFailure("radial integration step size underflow near r = " +
                                             std::to_string(std::exp(s_)));
                }
            }
        }
    }

    State const& state() const noexcept { return x_; }

  private:
    Stepper make_stepper() const {
        return odeint::make_controlled<odeint::runge_kutta_dopri5<State>>(atol_, rtol_);
    }

    PhaseEquations eq_;
    double atol_;
    double rtol_;
    Stepper stepper_;
    State x_{};
    double s_ = 0.0;
    double dt_ = 0.0;
};

void check_energy(PotentialModel const& pot, double E) {
    auto const w = bound_state_window(pot);
    if (!(E > w.lo && E < w.hi)) {
        std::ostringstream os;
        os.precision(15);
        os << "trial energy " << E << " outside the bound-state window (" << w.lo << ", " << w.hi << ")";
        throw std::domain_error(os.str());
    }
}

double decay_rate(PotentialModel const& pot, double E) {
    double const eps = E - asymptotic_value(pot);
    return std::sqrt((1.0 - eps) * (1.0 + eps));
}

/// Phase of the regular solution C r^gamma (a, b) at the origin.
double origin_phase(PotentialModel const& pot, Channel const& ch) {
    double const v = coulomb_strength(pot);
    double const k = ch.k();
    if (!(v > 0.0 && v < k)) {
        throw std::invalid_argument("power-law seed needs a Coulombic origin with 0 < v_eff < k, got v_eff = " +
                                    std::to_string(v));
    }
    double const gamma = std::sqrt((k - v) * (k + v));
    // b/a = (gamma + tau k)/v; for tau = -1 use the equivalent -v/(gamma + k)
    return ch.tau() < 0 ? std::atan2(-v, gamma + k) : std::atan2(gamma + k, v);
}

/// Phase of the decaying solution at large r.
double infinity_phase(PotentialModel const& pot, double E) {
    double const eps = E - asymptotic_value(pot);
    return std::atan(-std::sqrt((1.0 - eps) / (1.0 + eps)));
}

struct ShootingSetup {
    double r_min;
    double r_match;
    double r_max;
};

ShootingSetup setup_for(PotentialModel const& pot, double E) {
    double const kappa = decay_rate(pot, E);
    double const rt = outer_turning_point(pot, E);
    double const r_min = inner_radius_factor / kappa;
    double const r_max = rt + decay_lengths / kappa;
    double const r_match = std::clamp(rt, 1e3 * r_min, 0.5 * r_max);
    return {r_min, r_match, r_max};
}

/// theta_out(r_match) - theta_in(r_match), unreduced.
double total_phase(PotentialModel const& pot, Channel const& ch, double E, ShootingSetup const& setup,
                   SolverOptions const& opts) {
    PhaseIntegrator integ(pot, ch, E, opts);
    integ.start({origin_phase(pot, ch), 0.0}, std::log(setup.r_min));
    integ.advance_to(std::log(setup.r_match));
    double const out = integ.state()[0];
    integ.start({infinity_phase(pot, E), 0.0}, std::log(setup.r_max));
    integ.advance_to(std::log(setup.r_match));
    return out - integ.state()[0];
}

/// States below E given the reference phase count at the bottom of the window.
struct StateCounter {
    PotentialModel const& pot;
    Channel const& ch;
    SolverOptions const& opts;
    double reference;

    StateCounter(PotentialModel const& p, Channel const& c, SolverOptions const& o)
        : pot(p), ch(c), opts(o), reference(0.0) {
        double const E_lo = asymptotic_value(pot) - 1.0 + 1e-3;
        reference = std::floor(total_phase(pot, ch, E_lo, setup_for(pot, E_lo), opts) / pi);
    }

    int operator()(double E) const {
        double const phase = total_phase(pot, ch, E, setup_for(pot, E), opts);
        return static_cast<int>(reference - std::floor(phase / pi));
    }
};

std::size_t clamp_match(RadialGrid const& grid, std::size_t index) {
    return std::clamp<std::size_t>(index, 2, grid.size() - 3);
}

void fill_components(Sweep& sw, std::size_t first, std::size_t last, double log_ref) {
    for (std::size_t i = first; i <= last; ++i) {
        double const amp = std::exp(sw.log_amplitude[i] - log_ref);
        sw.psi1[i] = amp * std::cos(sw.phase[i]);
        sw.psi2[i] = amp * std::sin(sw.phase[i]);
    }
}

} // namespace

EnergyWindow bound_state_window(PotentialModel const& pot) noexcept {
    double const v_inf = asymptotic_value(pot);
    return {v_inf - 1.0 + window_margin, v_inf + 1.0 - window_margin};
}

double outer_turning_point(PotentialModel const& pot, double E) {
    check_energy(pot, E);
    double const target = E - 1.0;
    // V is increasing on (0, inf) for every supported model
    double lo = 1e-14;
    double hi = 1.0;
    while (evaluate_unchecked(pot, hi) < target) {
        hi *= 2.0;
        if (hi > 1e300) {
            throw std::domain_error("no turning point: potential stays below E - 1");
        }
    }
    if (evaluate_unchecked(pot, lo) >= target) {
        return lo;
    }
    for (int it = 0; it < 200 && hi - lo > 1e-13 * hi; ++it) {
        double const mid = std::sqrt(lo * hi);
        (evaluate_unchecked(pot, mid) < target ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

RadialGrid default_grid(PotentialModel const& pot, double E, double grid_scale) {
    if (!(grid_scale > 0.0)) {
        throw std::invalid_argument("grid_scale must be positive");
    }
    auto const setup = setup_for(pot, E);
    double const kappa = decay_rate(pot, E);
    double const r_join = std::max(1.0 / kappa, 10.0 * setup.r_min);
    return RadialGrid::log_linear(setup.r_min, r_join, std::max(setup.r_max, 2.0 * r_join),
                                  base_log_step / grid_scale);
}

Sweep integrate_radial(PotentialModel const& pot, Channel const& ch, double E, RadialGrid const& grid,
                       Direction direction, std::size_t match_index, SolverOptions const& opts) {
    check_energy(pot, E);
    if (match_index >= grid.size()) {
        throw std::out_of_range("match index outside the grid");
    }
    std::size_t const n = grid.size();
    Sweep sw{direction, match_index, std::vector<double>(n, 0.0), std::vector<double>(n, 0.0),
             std::vector<double>(n, 0.0), std::vector<double>(n, 0.0), 0.0};

    PhaseIntegrator integ(pot, ch, E, opts);
    auto const r = grid.points();
    if (direction == Direction::outward) {
        integ.start({origin_phase(pot, ch), 0.0}, std::log(r[0]));
        sw.phase[0] = integ.state()[0];
        for (std::size_t i = 1; i <= match_index; ++i) {
            integ.advance_to(std::log(r[i]));
            sw.phase[i] = integ.state()[0];
            sw.log_amplitude[i] = integ.state()[1];
        }
        fill_components(sw, 0, match_index, sw.log_amplitude[match_index]);
    } else {
        integ.start({infinity_phase(pot, E), 0.0}, std::log(r[n - 1]));
        sw.phase[n - 1] = integ.state()[0];
        for (std::size_t i = n - 1; i-- > match_index;) {
            integ.advance_to(std::log(r[i]));
            sw.phase[i] = integ.state()[0];
            sw.log_amplitude[i] = integ.state()[1];
        }
        fill_components(sw, match_index, n - 1, sw.log_amplitude[match_index]);
    }
    sw.ratio_at_match = std::tan(sw.phase[match_index]);
    return sw;
}

double matching_mismatch(PotentialModel const& pot, Channel const& ch, double E, RadialGrid const& grid,
                         std::size_t match_index, SolverOptions const& opts) {
    check_energy(pot, E);
    ShootingSetup const setup{grid.r_min(), grid[match_index], grid.r_max()};
    double const m = std::remainder(total_phase(pot, ch, E, setup, opts), pi);
    return m == -0.5 * pi ? 0.5 * pi : m;
}

int count_states_below(PotentialModel const& pot, Channel const& ch, double E, SolverOptions const& opts) {
    validate(pot);
    check_energy(pot, E);
    return StateCounter(pot, ch, opts)(E);
}

RadialSolution solve_eigenvalue(PotentialModel const& pot, Channel const& ch, SolverOptions const& opts) {
    validate(pot);
    origin_phase(pot, ch); // rejects non-Coulombic origins before any work
    int const target = ch.n();
    double const v_inf = asymptotic_value(pot);
    StateCounter const count(pot, ch, opts);

    // bracket [a, b] holding exactly the target state
    double a = v_inf - 1.0 + 1e-3;
    int count_a = 0;
    double b = 0.0;
    int count_b = -1;
    for (double gap = 1e-2; gap >= 0.99e-6; gap *= 0.1) {
        b = v_inf + 1.0 - gap;
        count_b = count(b);
        if (count_b >= target) {
            break;
        }
        a = b;
        count_a = count_b;
    }
    if (count_b < target) {
        std::ostringstream os;
        os << "no bound state n = " << target << " for " << describe(pot) << " in channel tau=" << ch.tau()
           << " 2j=" << ch.two_j() << " (only " << count_b << " below E = " << b << ")";
        throw NoBoundState(os.str());
    }
    int iterations = 0;
    while (!(count_a == target - 1 && count_b == target)) {
        if (++iterations > opts.max_iterations || b - a < opts.energy_tolerance) {
            std::ostringstream os;
            os.precision(15);
            os << "could not isolate state n = " << target << "; last bracket [" << a << ", " << b << "] with counts "
               << count_a << ", " << count_b;
            throw ConvergenceFailure(os.str());
        }
        double const mid = 0.5 * (a + b);
        int const c = count(mid);
        if (c >= target) {
            b = mid;
            count_b = c;
        } else {
            a = mid;
            count_a = c;
        }
    }

    // refine theta_out - theta_in = target phase on a frozen shooting setup
    auto refine = [&](ShootingSetup const& setup, double lo, double hi) {
        double const goal = (count.reference - (target - 1)) * pi;
        auto f = [&](double E) { return total_phase(pot, ch, E, setup, opts) - goal; };
        double const f_lo = f(lo);
        double const f_hi = f(hi);
        if (!(f_lo > 0.0 && f_hi < 0.0)) {
            std::ostringstream os;
            os.precision(15);
            os << "phase function does not change sign on [" << lo << ", " << hi << "] (" << f_lo << ", " << f_hi
               << ")";
            throw ConvergenceFailure(os.str());
        }
        auto tol = [&](double x, double y) { return std::abs(y - x) <= opts.energy_tolerance; };
        std::uintmax_t max_iter = static_cast<std::uintmax_t>(opts.max_iterations);
        auto const [x, y] = boost::math::tools::toms748_solve(f, lo, hi, f_lo, f_hi, tol, max_iter);
        iterations += static_cast<int>(max_iter);
        if (max_iter >= static_cast<std::uintmax_t>(opts.max_iterations)) {
            std::ostringstream os;
            os.precision(15);
            os << "eigenvalue refinement hit the iteration cap; last bracket [" << x << ", " << y << "]";
            throw ConvergenceFailure(os.str());
        }
        return 0.5 * (x + y);
    };
    double E = refine(setup_for(pot, b), a, b);

    RadialGrid grid = opts.grid ? *opts.grid : default_grid(pot, E, opts.grid_scale);
    std::size_t const match = clamp_match(grid, grid.nearest_index(outer_turning_point(pot, E)));
    // second pass on the final grid so the stored components and E agree
    {
        double const width = std::max(1e-9, 1e3 * opts.energy_tolerance);
        ShootingSetup const setup{grid.r_min(), grid[match], grid.r_max()};
        double const lo = std::max(a, E - width);
        double const hi = std::min(b, E + width);
        E = refine(setup, lo, hi);
    }

    auto const out = integrate_radial(pot, ch, E, grid, Direction::outward, match, opts);
    auto const in = integrate_radial(pot, ch, E, grid, Direction::inward, match, opts);
    double const sign = std::cos(out.phase[match] - in.phase[match]) >= 0.0 ? 1.0 : -1.0;

    RadialSolution sol{ch, E, std::move(grid), out.psi1, out.psi2, 0, 0, 0.0, match, iterations};
    for (std::size_t i = match + 1; i < sol.grid.size(); ++i) {
        sol.psi1[i] = sign * in.psi1[i];
        sol.psi2[i] = sign * in.psi2[i];
    }
    sol = normalize(std::move(sol));
    sol.nodes1 = count_nodes(sol.psi1);
    sol.nodes2 = count_nodes(sol.psi2);
    return sol;
}

int count_nodes(std::span<double const> samples) {
    double peak = 0.0;
    for (double x : samples) {
        peak = std::max(peak, std::abs(x));
    }
    if (peak == 0.0) {
        return 0;
    }
    double const floor = node_floor * peak;
    int nodes = 0;
    int last_sign = 0;
    for (double x : samples) {
        if (std::abs(x) <= floor) {
            continue;
        }
        int const s = x > 0.0 ? 1 : -1;
        if (last_sign != 0 && s != last_sign) {
            ++nodes;
        }
        last_sign = s;
    }
    return nodes;
}

RadialSolution normalize(RadialSolution sol) {
    auto const w = sol.grid.weights();
    double const norm = kernels::weighted_dot(w, sol.psi1, sol.psi1) + kernels::weighted_dot(w, sol.psi2, sol.psi2);
    if (!(norm > 0.0) || !std::isfinite(norm)) {
        throw std::invalid_argument("cannot normalise a solution with zero or non-finite norm");
    }
    // psi1 > 0 near the origin
    double phase_sign = 1.0;
    double peak = 0.0;
    for (double x : sol.psi1) {
        peak = std::max(peak, std::abs(x));
    }
    for (double x : sol.psi1) {
        if (std::abs(x) > node_floor * peak) {
            phase_sign = x > 0.0 ? 1.0 : -1.0;
            break;
        }
    }
    double const scale = phase_sign / std::sqrt(norm);
    for (auto& x : sol.psi1) {
        x *= scale;
    }
    for (auto& x : sol.psi2) {
        x *= scale;
    }
    sol.norm = kernels::weighted_dot(w, sol.psi1, sol.psi1) + kernels::weighted_dot(w, sol.psi2, sol.psi2);
    return sol;
}

void write_wavefunction_csv(std::ostream& os, RadialSolution const& sol) {
    auto const r = sol.grid.points();
    auto const old_precision = os.precision(12);
    os << "r,psi1,psi2\n";
    for (std::size_t i = 0; i < r.size(); ++i) {
        os << r[i] << ',' << sol.psi1[i] << ',' << sol.psi2[i] << '\n';
    }
    os.precision(old_precision);
}

} // namespace dirac
