#include "dirac/kernels.hpp"

#include <atomic>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace dirac::kernels {

namespace {

Isa detect_default() noexcept {
    if (char const* env = std::getenv("DIRAC_SIMD")) {
        if (std::string_view(env) == "scalar") {
            return Isa::scalar;
        }
    }
    return cpu_supports_avx2() ? Isa::avx2 : Isa::scalar;
}

std::atomic<Isa>& current() noexcept {
    static std::atomic<Isa> isa{detect_default()};
    return isa;
}

void require_same_size(std::size_t a, std::size_t b) {
    if (a != b) {
        throw std::invalid_argument("kernel inputs differ in length: " + std::to_string(a) + " vs " +
                                    std::to_string(b));
    }
}

} // namespace

std::string_view isa_name(Isa isa) noexcept {
    return isa == Isa::avx2 ? "avx2" : "scalar";
}

bool cpu_supports_avx2() noexcept {
#if defined(DIRAC_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
    return false;
#endif
}

Isa active_isa() noexcept {
    return current().load(std::memory_order_relaxed);
}

void select_isa(Isa isa) noexcept {
    if (isa == Isa::avx2 && !cpu_supports_avx2()) {
        isa = Isa::scalar;
    }
    current().store(isa, std::memory_order_relaxed);
}

void screened_potential(ScreenedParams p, std::span<double const> r, std::span<double> out) {
    require_same_size(r.size(), out.size());
#if defined(DIRAC_HAVE_AVX2)
    if (active_isa() == Isa::avx2) {
        return avx2::screened_potential(p, r.data(), out.data(), r.size());
    }
#endif
    scalar::screened_potential(p, r.data(), out.data(), r.size());
}

void shifted_coulomb(double shift, double coupling, std::span<double const> r, std::span<double> out) {
    require_same_size(r.size(), out.size());
#if defined(DIRAC_HAVE_AVX2)
    if (active_isa() == Isa::avx2) {
        return avx2::shifted_coulomb(shift, coupling, r.data(), out.data(), r.size());
    }
#endif
    scalar::shifted_coulomb(shift, coupling, r.data(), out.data(), r.size());
}

void envelope_functional(ScreenedParams p, CoulombParams c, std::span<double const> u, std::span<double> out) {
    require_same_size(u.size(), out.size());
#if defined(DIRAC_HAVE_AVX2)
    if (active_isa() == Isa::avx2) {
        return avx2::envelope_functional(p, c, u.data(), out.data(), u.size());
    }
#endif
    scalar::envelope_functional(p, c, u.data(), out.data(), u.size());
}

double weighted_dot(std::span<double const> w, std::span<double const> a, std::span<double const> b) {
    require_same_size(w.size(), a.size());
    require_same_size(w.size(), b.size());
#if defined(DIRAC_HAVE_AVX2)
    if (active_isa() == Isa::avx2) {
        return avx2::weighted_dot(w.data(), a.data(), b.data(), w.size());
    }
#endif
    return scalar::weighted_dot(w.data(), a.data(), b.data(), w.size());
}

double weighted_dot3(std::span<double const> w, std::span<double const> a, std::span<double const> b,
                     std::span<double const> c) {
    require_same_size(w.size(), a.size());
    require_same_size(w.size(), b.size());
    require_same_size(w.size(), c.size());
#if defined(DIRAC_HAVE_AVX2)
    if (active_isa() == Isa::avx2) {
        return avx2::weighted_dot3(w.data(), a.data(), b.data(), c.data(), w.size());
    }
#endif
    return scalar::weighted_dot3(w.data(), a.data(), b.data(), c.data(), w.size());
}

} // namespace dirac::kernels
