#include "dirac/potentials.hpp"

#include "dirac/kernels.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace dirac {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};

void require_positive_radius(double r, char const* name) {
    if (!(r > 0.0) || !std::isfinite(r)) {
        throw std::invalid_argument(std::string(name) + " must be a positive finite radius");
    }
}

// Bracket 1 - r lambda c/(1 + lambda r) rewritten as (1 + lambda r/Z)/(1 + lambda r)
// so that large r does not cancel.
double screened_value(ScreenedCoulomb const& pot, double r) noexcept {
    double const lr = pot.lambda * r;
    return -pot.v * (1.0 + lr / pot.Z) / (r * (1.0 + lr));
}

} // namespace

ScreenedCoulomb ScreenedCoulomb::from_charge(int Z, PhysicalConstants const& constants) {
    constants.validate();
    if (Z < 1) {
        throw std::invalid_argument("nuclear charge Z must be >= 1");
    }
    ScreenedCoulomb pot{Z, constants.alpha * Z, 0.98 * constants.alpha * std::cbrt(static_cast<double>(Z))};
    validate(pot);
    return pot;
}

void validate(PotentialModel const& pot) {
    std::visit(overloaded{
                   [](PureCoulomb const& p) {
                       if (!(p.u > 0.0) || !std::isfinite(p.u)) {
                           throw std::invalid_argument("pure Coulomb coupling u must be positive");
                       }
                   },
                   [](ShiftedCoulomb const& p) {
                       if (!(p.coupling > 0.0 && p.coupling < 1.0)) {
                           throw std::invalid_argument("shifted Coulomb coupling B must lie in (0, 1)");
                       }
                       if (!std::isfinite(p.shift)) {
                           throw std::invalid_argument("shifted Coulomb shift A must be finite");
                       }
                   },
                   [](ScreenedCoulomb const& p) {
                       if (p.Z < 1) {
                           throw std::invalid_argument("screened Coulomb needs Z >= 1");
                       }
                       if (!(p.v > 0.0 && p.v < 1.0)) {
                           throw std::invalid_argument("screened Coulomb coupling v = alpha Z must lie in (0, 1)");
                       }
                       if (!(p.lambda > 0.0) || !std::isfinite(p.lambda)) {
                           throw std::invalid_argument("screening scale lambda must be positive");
                       }
                   },
               },
               pot);
}

double evaluate_unchecked(PotentialModel const& pot, double r) noexcept {
    return std::visit(overloaded{
                          [r](PureCoulomb const& p) { return -p.u / r; },
                          [r](ShiftedCoulomb const& p) { return p.shift - p.coupling / r; },
                          [r](ScreenedCoulomb const& p) { return screened_value(p, r); },
                      },
                      pot);
}

double evaluate(PotentialModel const& pot, double r) {
    require_positive_radius(r, "r");
    return evaluate_unchecked(pot, r);
}

std::vector<double> sample(PotentialModel const& pot, std::span<double const> r) {
    for (double x : r) {
        require_positive_radius(x, "r");
    }
    std::vector<double> out(r.size());
    std::visit(overloaded{
                   [&](PureCoulomb const& p) { kernels::shifted_coulomb(0.0, p.u, r, out); },
                   [&](ShiftedCoulomb const& p) { kernels::shifted_coulomb(p.shift, p.coupling, r, out); },
                   [&](ScreenedCoulomb const& p) {
                       kernels::screened_potential({p.v, p.lambda, 1.0 / p.Z}, r, out);
                   },
               },
               pot);
    return out;
}

double coulomb_strength(PotentialModel const& pot) noexcept {
    return std::visit(overloaded{
                          [](PureCoulomb const& p) { return p.u; },
                          [](ShiftedCoulomb const& p) { return p.coupling; },
                          [](ScreenedCoulomb const& p) { return p.v; },
                      },
                      pot);
}

double asymptotic_value(PotentialModel const& pot) noexcept {
    return std::visit(overloaded{
                          [](PureCoulomb const&) { return 0.0; },
                          [](ShiftedCoulomb const& p) { return p.shift; },
                          [](ScreenedCoulomb const&) { return 0.0; },
                      },
                      pot);
}

std::string describe(PotentialModel const& pot) {
    std::ostringstream os;
    os.precision(10);
    std::visit(overloaded{
                   [&os](PureCoulomb const& p) { os << "coulomb(u=" << p.u << ")"; },
                   [&os](ShiftedCoulomb const& p) { os << "shifted(A=" << p.shift << ", B=" << p.coupling << ")"; },
                   [&os](ScreenedCoulomb const& p) {
                       os << "screened(Z=" << p.Z << ", v=" << p.v << ", lambda=" << p.lambda << ")";
                   },
               },
               pot);
    return os.str();
}

double g_transform(ScreenedCoulomb const& pot, double h) {
    if (!(h < 0.0)) {
        throw std::invalid_argument("g(h) is only used for h = -1/r < 0");
    }
    // v h + v lambda c [1 + lambda/(h - lambda)] = v h (h - lambda/Z)/(h - lambda)
    return pot.v * h * (h - pot.lambda / pot.Z) / (h - pot.lambda);
}

double g_derivative(ScreenedCoulomb const& pot, double h) {
    if (!(h < 0.0)) {
        throw std::invalid_argument("g'(h) is only used for h = -1/r < 0");
    }
    double const d = h - pot.lambda;
    return pot.v - pot.v * pot.lambda * pot.lambda * pot.screening_factor() / (d * d);
}

TangentPotential tangent_at(ScreenedCoulomb const& pot, double t) {
    require_positive_radius(t, "contact radius t");
    double const h = -1.0 / t;
    double const d = h - pot.lambda;
    // g - h g' collapses to v lambda c h^2/(h - lambda)^2, free of the v h cancellation.
    double const shift = pot.v * pot.lambda * pot.screening_factor() * h * h / (d * d);
    double const coupling = g_derivative(pot, h);
    return {t, shift, coupling, pot};
}

double ordering_gap(ScreenedCoulomb const& pot, double t, double r) {
    require_positive_radius(r, "r");
    require_positive_radius(t, "contact radius t");
    double const lam = pot.lambda;
    double const dr = r - t;
    double const lt = 1.0 + lam * t;
    return pot.v * pot.screening_factor() * lam * lam * dr * dr / (r * (1.0 + lam * r) * lt * lt);
}

} // namespace dirac
