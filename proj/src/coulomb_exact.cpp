#include "dirac/coulomb_exact.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace dirac {

namespace {

struct Bracket {
    double s; // sqrt(k^2 - u^2)
    double N; // n - (1 - tau)/2 + s
};

Bracket checked_bracket(double u, Channel const& ch) {
    double const limit = coulomb_coupling_limit(ch);
    if (!(u > 0.0)) {
        std::ostringstream os;
        os << "Coulomb coupling u = " << u << " violates u > 0";
        throw std::domain_error(os.str());
    }
    if (!(u <= limit)) {
        std::ostringstream os;
        os.precision(17);
        os << "Coulomb coupling u = " << u << " violates u < min(1, k) = " << std::min(1, ch.k())
           << " (margin " << coulomb_domain_margin << ")";
        throw std::domain_error(os.str());
    }
    double const k = ch.k();
    double const s = std::sqrt((k - u) * (k + u));
    return {s, ch.n() - 0.5 * (1 - ch.tau()) + s};
}

} // namespace

double coulomb_coupling_limit(Channel const& ch) noexcept {
    return std::min(1.0, static_cast<double>(ch.k())) - coulomb_domain_margin;
}

double coulomb_eigenvalue(double u, Channel const& ch) {
    auto const [s, N] = checked_bracket(u, ch);
    return N / std::sqrt(N * N + u * u);
}

double coulomb_eigenvalue_derivative(double u, Channel const& ch) {
    auto const [s, N] = checked_bracket(u, ch);
    double const q = N * N + u * u;
    return -u * (u * u / s + N) / (q * std::sqrt(q));
}

CoulombSpectrumPoint coulomb_point(double u, Channel const& ch) {
    return {u, ch, coulomb_eigenvalue(u, ch), coulomb_eigenvalue_derivative(u, ch)};
}

} // namespace dirac
