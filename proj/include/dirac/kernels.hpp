#pragma once

// Batch arithmetic over radial grids and coupling scans.
//
// Every kernel has a scalar reference in kernels::scalar and, on x86-64, an
// AVX2 variant in kernels::avx2. The unqualified entry points dispatch to the
// best variant the running CPU supports; set DIRAC_SIMD=scalar in the
// environment to pin the reference path.

#include <cstddef>
#include <span>
#include <string_view>

namespace dirac::kernels {

/// Screened-Coulomb parameters in the form the kernels use:
/// V(r) = -v (1 + lambda r / Z) / (r (1 + lambda r)).
struct ScreenedParams {
    double v;
    double lambda;
    double inv_z;
};

/// Channel data needed by the Coulomb level: N(u) = n_offset + sqrt(k^2 - u^2).
struct CoulombParams {
    double k;
    double n_offset;
};

enum class Isa { scalar, avx2 };

std::string_view isa_name(Isa isa) noexcept;

bool cpu_supports_avx2() noexcept;

/// Variant used by the dispatching entry points.
Isa active_isa() noexcept;

/// Overrides the dispatch choice; falls back to scalar if the CPU lacks the ISA.
void select_isa(Isa isa) noexcept;

// All spans of one call must have equal length.

void screened_potential(ScreenedParams p, std::span<double const> r, std::span<double> out);
void shifted_coulomb(double shift, double coupling, std::span<double const> r, std::span<double> out);

/// F(u) = D(u) - u D'(u) + V(-1/D'(u)) for each coupling u.
void envelope_functional(ScreenedParams p, CoulombParams c, std::span<double const> u, std::span<double> out);

/// sum_i w_i a_i b_i
double weighted_dot(std::span<double const> w, std::span<double const> a, std::span<double const> b);

/// sum_i w_i a_i b_i c_i
double weighted_dot3(std::span<double const> w, std::span<double const> a, std::span<double const> b,
                     std::span<double const> c);

namespace scalar {
void screened_potential(ScreenedParams p, double const* r, double* out, std::size_t n) noexcept;
void shifted_coulomb(double shift, double coupling, double const* r, double* out, std::size_t n) noexcept;
void envelope_functional(ScreenedParams p, CoulombParams c, double const* u, double* out, std::size_t n) noexcept;
double weighted_dot(double const* w, double const* a, double const* b, std::size_t n) noexcept;
double weighted_dot3(double const* w, double const* a, double const* b, double const* c, std::size_t n) noexcept;
} // namespace scalar

#if defined(DIRAC_HAVE_AVX2)
namespace avx2 {
void screened_potential(ScreenedParams p, double const* r, double* out, std::size_t n) noexcept;
void shifted_coulomb(double shift, double coupling, double const* r, double* out, std::size_t n) noexcept;
void envelope_functional(ScreenedParams p, CoulombParams c, double const* u, double* out, std::size_t n) noexcept;
double weighted_dot(double const* w, double const* a, double const* b, std::size_t n) noexcept;
double weighted_dot3(double const* w, double const* a, double const* b, double const* c, std::size_t n) noexcept;
} // namespace avx2
#endif

} // namespace dirac::kernels
