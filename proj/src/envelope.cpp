#include "dirac/envelope.hpp"

#include "dirac/coulomb_exact.hpp"
#include "dirac/kernels.hpp"

#include <boost/math/tools/minima.hpp>
#include <boost/math/tools/toms748_solve.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace dirac {

namespace {

struct Candidate {
    double u;
    double F;
};

// Stationarity of F: u = B(t(u)), i.e. the coupling equals the slope of g at
// the contact point t = -1/D'(u).
double stationarity(ScreenedCoulomb const& pot, Channel const& ch, double u) {
    return u - g_derivative(pot, -1.0 / contact_radius(u, ch));
}

Candidate refine(ScreenedCoulomb const& pot, Channel const& ch, double lo, double hi, double tol) {
    auto F = [&](double u) { return envelope_functional(pot, ch, u); };
    std::uintmax_t iters = 500;
    auto const [u_brent, f_brent] =
        boost::math::tools::brent_find_minima(F, lo, hi, std::numeric_limits<double>::digits, iters);
    Candidate best{u_brent, f_brent};

    // Brent stops near sqrt(eps) in u; the stationarity root pins u further.
    double const g_lo = stationarity(pot, ch, lo);
    double const g_hi = stationarity(pot, ch, hi);
    if (g_lo == 0.0) {
        return {lo, F(lo)};
    }
    if (g_hi == 0.0) {
        return {hi, F(hi)};
    }
    if ((g_lo < 0.0) != (g_hi < 0.0)) {
        std::uintmax_t root_iters = 200;
        auto stop = [tol](double a, double b) { return std::abs(b - a) <= tol; };
        auto const [a, b] = boost::math::tools::toms748_solve([&](double u) { return stationarity(pot, ch, u); }, lo,
                                                              hi, g_lo, g_hi, stop, root_iters);
        double const u = 0.5 * (a + b);
        double const f = F(u);
        if (f <= best.F + 64.0 * std::numeric_limits<double>::epsilon() * std::abs(best.F)) {
            best = {u, f};
        }
    }
    return best;
}

} // namespace

void require_nodeless(Channel const& ch) {
    if (!ch.nodeless()) {
        throw std::invalid_argument(
            "envelope bounds and comparisons need a nodeless state (tau = -1, n = 1); got tau = " +
            std::to_string(ch.tau()) + ", n = " + std::to_string(ch.n()));
    }
}

double contact_radius(double u, Channel const& ch) {
    return -1.0 / coulomb_eigenvalue_derivative(u, ch);
}

double envelope_functional(ScreenedCoulomb const& pot, Channel const& ch, double u) {
    double const D = coulomb_eigenvalue(u, ch);
    double const dD = coulomb_eigenvalue_derivative(u, ch);
    return D - u * dD + evaluate(pot, -1.0 / dD);
}

double bound_at_t(ScreenedCoulomb const& pot, Channel const& ch, double t) {
    require_nodeless(ch);
    auto const tangent = tangent_at(pot, t);
    if (!(tangent.coupling > 0.0 && tangent.coupling <= coulomb_coupling_limit(ch))) {
        std::ostringstream os;
        os << "tangent coupling B(t) = " << tangent.coupling << " at t = " << t
           << " is outside the Coulomb domain (0, " << std::min(1, ch.k())
           << "); B(t) lies in (v(1 - (1 - 1/Z)), v] = (" << pot.v / pot.Z << ", " << pot.v
           << "] for all t > 0";
        throw std::domain_error(os.str());
    }
    return tangent.shift + coulomb_eigenvalue(tangent.coupling, ch);
}

EnvelopeBound minimize_bound(ScreenedCoulomb const& pot, Channel const& ch, EnvelopeOptions const& opts) {
    require_nodeless(ch);
    validate(pot);
    if (opts.scan_points < 3) {
        throw std::invalid_argument("envelope scan needs at least 3 points");
    }
    double const u_lo = opts.edge_margin;
    double const u_hi = std::min(1.0, static_cast<double>(ch.k())) - opts.edge_margin;

    auto const n = static_cast<std::size_t>(opts.scan_points);
    std::vector<double> u(n);
    std::vector<double> F(n);
    double const ratio = std::log(u_hi / u_lo);
    for (std::size_t i = 0; i < n; ++i) {
        u[i] = u_lo * std::exp(ratio * static_cast<double>(i) / static_cast<double>(n - 1));
    }
    u.back() = u_hi;
    kernels::envelope_functional({pot.v, pot.lambda, 1.0 / pot.Z},
                                 {static_cast<double>(ch.k()), ch.n() - 0.5 * (1 - ch.tau())}, u, F);

    std::vector<std::size_t> minima;
    for (std::size_t i = 0; i < n; ++i) {
        bool const left_ok = i == 0 || F[i] <= F[i - 1];
        bool const right_ok = i + 1 == n || F[i] <= F[i + 1];
        // plateaus count once
        if (left_ok && right_ok && (minima.empty() || minima.back() + 1 != i)) {
            minima.push_back(i);
        }
    }

    EnvelopeBound best{.ch = ch,
                       .u_star = 0.0,
                       .t_star = 0.0,
                       .E_upper = std::numeric_limits<double>::infinity(),
                       .local_minima = static_cast<int>(minima.size()),
                       .curve = {}};
    for (auto const i : minima) {
        double const lo = u[i == 0 ? 0 : i - 1];
        double const hi = u[std::min(i + 1, n - 1)];
        auto const c = refine(pot, ch, lo, hi, opts.coupling_tolerance);
        if (c.F < best.E_upper) {
            best.u_star = c.u;
            best.E_upper = c.F;
            best.at_domain_edge = (i == 0 || i + 1 == n);
        }
    }
    best.t_star = contact_radius(best.u_star, ch);
    best.parameterization_gap = std::abs(best.E_upper - bound_at_t(pot, ch, best.t_star));
    if (opts.keep_curve) {
        best.curve.reserve(n);
        for (std::size_t i = 0; i < n; ++i) {
            best.curve.emplace_back(u[i], F[i]);
        }
    }
    return best;
}

} // namespace dirac
