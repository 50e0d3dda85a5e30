#include "dirac/kernels.hpp"

#include <cmath>

namespace dirac::kernels::scalar {

void screened_potential(ScreenedParams p, double const* r, double* out, std::size_t n) noexcept {
    for (std::size_t i = 0; i < n; ++i) {
        double const lr = p.lambda * r[i];
        out[i] = -p.v * (1.0 + lr * p.inv_z) / (r[i] * (1.0 + lr));
    }
}

void shifted_coulomb(double shift, double coupling, double const* r, double* out, std::size_t n) noexcept {
    for (std::size_t i = 0; i < n; ++i) {
        out[i] = shift - coupling / r[i];
    }
}

void envelope_functional(ScreenedParams p, CoulombParams c, double const* u, double* out, std::size_t n) noexcept {
    for (std::size_t i = 0; i < n; ++i) {
        double const ui = u[i];
        double const s = std::sqrt((c.k - ui) * (c.k + ui));
        double const N = c.n_offset + s;
        double const q = N * N + ui * ui;
        double const root_q = std::sqrt(q);
        double const D = N / root_q;
        double const dD = -ui * (ui * ui / s + N) / (q * root_q);
        double const t = -1.0 / dD;
        double const lt = p.lambda * t;
        double const V = -p.v * (1.0 + lt * p.inv_z) / (t * (1.0 + lt));
        out[i] = D - ui * dD + V;
    }
}

double weighted_dot(double const* w, double const* a, double const* b, std::size_t n) noexcept {
    double sum = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        sum += w[i] * a[i] * b[i];
    }
    return sum;
}

double weighted_dot3(double const* w, double const* a, double const* b, double const* c, std::size_t n) noexcept {
    double sum = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        sum += w[i] * a[i] * b[i] * c[i];
    }
    return sum;
}

} // namespace dirac::kernels::scalar
