#pragma once

#include "dirac/channel.hpp"

#include <span>
#include <string>
#include <variant>
#include <vector>

namespace dirac {

// Radii are in units of hbar/(mc) and energies in units of mc^2.

/// -u/r
struct PureCoulomb {
    double u;
};

/// shift + coupling * h(r) with h(r) = -1/r.
struct ShiftedCoulomb {
    double shift;
    double coupling;
};

/// Screened-Coulomb potential for large atoms:
/// V(r) = -(v/r) [1 - r lambda (1 - 1/Z) / (1 + lambda r)]
/// with v = alpha Z and lambda = 0.98 alpha Z^(1/3).
struct ScreenedCoulomb {
    int Z;
    double v;
    double lambda;

    static ScreenedCoulomb from_charge(int Z, PhysicalConstants const& constants = {});

    double screening_factor() const noexcept { return 1.0 - 1.0 / Z; }
};

using PotentialModel = std::variant<PureCoulomb, ShiftedCoulomb, ScreenedCoulomb>;

/// Throws std::invalid_argument if the parameters break the model invariants.
void validate(PotentialModel const& pot);

/// V(r); r must be positive.
double evaluate(PotentialModel const& pot, double r);

/// Same as evaluate() without the argument check, for inner loops.
double evaluate_unchecked(PotentialModel const& pot, double r) noexcept;

/// V at every radius of r (batch kernels).
std::vector<double> sample(PotentialModel const& pot, std::span<double const> r);

/// -lim r V(r) as r -> 0.
double coulomb_strength(PotentialModel const& pot) noexcept;

/// lim V(r) as r -> infinity.
double asymptotic_value(PotentialModel const& pot) noexcept;

std::string describe(PotentialModel const& pot);

/// g with V(r) = g(h(r)), h(r) = -1/r. Defined for h < 0.
double g_transform(ScreenedCoulomb const& pot, double h);

/// g'(h) = v - v lambda^2 (1 - 1/Z) / (h - lambda)^2
double g_derivative(ScreenedCoulomb const& pot, double h);

/// Shifted-Coulomb potential touching a screened-Coulomb potential at r = t.
struct TangentPotential {
    double t;
    double shift;
    double coupling;
    ScreenedCoulomb parent;

    ShiftedCoulomb as_shifted() const noexcept { return {shift, coupling}; }
    operator PotentialModel() const noexcept { return as_shifted(); }
};

/// A(t) = g(h(t)) - h(t) g'(h(t)),  B(t) = g'(h(t)).
TangentPotential tangent_at(ScreenedCoulomb const& pot, double t);

/// Closed form of V_t(r) - V(r) for the tangent at t; never negative.
double ordering_gap(ScreenedCoulomb const& pot, double t, double r);

} // namespace dirac
