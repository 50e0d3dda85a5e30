#pragma once

#include "dirac/channel.hpp"

namespace dirac {

/// Exact Dirac-Coulomb level and its slope for the potential -u/r.
struct CoulombSpectrumPoint {
    double u;
    Channel ch;
    double D;
    double dD_du;
};

/// Distance kept from the sqrt(k^2 - u^2) branch point and from u = 1.
inline constexpr double coulomb_domain_margin = 1e-12;

/// Largest admissible coupling for the channel, min(1, k) - margin.
double coulomb_coupling_limit(Channel const& ch) noexcept;

/// D(u) = {1 + u^2 [n - (1 - tau)/2 + sqrt(k^2 - u^2)]^-2}^-1/2, evaluated as
/// N / sqrt(N^2 + u^2). Requires 0 < u < min(1, k); throws std::domain_error.
double coulomb_eigenvalue(double u, Channel const& ch);

/// dD/du = -u (u^2/s + N) / (N^2 + u^2)^(3/2) with s = sqrt(k^2 - u^2).
double coulomb_eigenvalue_derivative(double u, Channel const& ch);

CoulombSpectrumPoint coulomb_point(double u, Channel const& ch);

} // namespace dirac
