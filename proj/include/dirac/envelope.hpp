#pragma once

#include "dirac/channel.hpp"
#include "dirac/potentials.hpp"

#include <utility>
#include <vector>

namespace dirac {

/// Upper bound on the bottom level of an angular-momentum subspace from the
/// family of tangent shifted-Coulomb potentials.
struct EnvelopeBound {
    Channel ch;
    double u_star;
    double t_star;  // contact radius -1/D'(u_star)
    double E_upper; // mc^2 units
    /// The scan minimum sat on the edge of the coupling domain.
    bool at_domain_edge = false;
    /// Number of separate local minima found by the coarse scan.
    int local_minima = 1;
    /// |F(u_star) - bound_at_t(t_star)|; the two parameterisations must agree.
    double parameterization_gap = 0.0;
    /// (u, F(u)) samples of the coarse scan.
    std::vector<std::pair<double, double>> curve;
};

struct EnvelopeOptions {
    int scan_points = 128;
    double edge_margin = 1e-6;
    double coupling_tolerance = 1e-10;
    bool keep_curve = false;
};

/// Throws std::invalid_argument unless tau = -1 and n = 1.
void require_nodeless(Channel const& ch);

/// Contact radius of the tangent whose coupling is u: t = -1/D'(u).
double contact_radius(double u, Channel const& ch);

/// F(u) = D(u) - u D'(u) + V(-1/D'(u)).
double envelope_functional(ScreenedCoulomb const& pot, Channel const& ch, double u);

/// A(t) + D(B(t)) for the tangent at r = t.
double bound_at_t(ScreenedCoulomb const& pot, Channel const& ch, double t);

/// Minimises F over u in (edge_margin, min(1, k) - edge_margin).
EnvelopeBound minimize_bound(ScreenedCoulomb const& pot, Channel const& ch, EnvelopeOptions const& opts = {});

} // namespace dirac
