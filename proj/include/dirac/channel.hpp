#pragma once

#include <string>
#include <string_view>

namespace dirac {

/// Quantum numbers labelling one radial Dirac problem.
///
/// `tau` is the sign quantum number (+1 or -1), `j` the total angular
/// momentum and `n` counts the discrete levels inside a given {tau, j} pair
/// starting from 1. j is kept as the integer 2j so that all quantum-number
/// arithmetic stays exact.
class Channel {
  public:
    Channel(int tau, int two_j, int n);

    /// Parses a spectroscopic label such as "1s1/2", "2p3/2" or "2p_1/2".
    /// The sign quantum number follows from l = j + tau/2.
    static Channel from_label(std::string_view label);

    int tau() const noexcept { return tau_; }
    int two_j() const noexcept { return two_j_; }
    double j() const noexcept { return 0.5 * two_j_; }
    int k() const noexcept { return (two_j_ + 1) / 2; }
    int n() const noexcept { return n_; }

    /// Orbital angular momentum of the upper two spinor components.
    int ell() const noexcept { return (two_j_ + tau_) / 2; }

    /// Bottom of an angular-momentum subspace: both radial components nodeless.
    bool nodeless() const noexcept { return tau_ == -1 && n_ == 1; }

    friend bool operator==(Channel const&, Channel const&) = default;

  private:
    int tau_;
    int two_j_;
    int n_;
};

/// nu = n + k - (1 - tau)/2.
int principal_quantum_number(Channel const& ch) noexcept;

/// (-1)^(j + tau/2); returns +1 or -1.
int parity(Channel const& ch) noexcept;

/// "nu l_j" with j written as a fraction, e.g. "2p_3/2".
/// Throws std::out_of_range when l has no letter in the table s p d f g h.
std::string spectroscopic_label(Channel const& ch);

struct PhysicalConstants {
    double alpha = 1.0 / 137.036;
    double electron_rest_energy_keV = 510.999;

    void validate() const;
};

/// Internal energies are in units of mc^2. These convert an eigenvalue to
/// and from the binding energy E - mc^2 expressed in keV.
double to_binding_keV(double energy_mc2, PhysicalConstants const& constants);
double from_binding_keV(double binding_keV, PhysicalConstants const& constants);

enum class EnergyUnits { mc2, kev_binding };

double convert_energy(double energy_mc2, EnergyUnits units, PhysicalConstants const& constants);

} // namespace dirac
