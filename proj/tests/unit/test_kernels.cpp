#include "dirac/coulomb_exact.hpp"
#include "dirac/envelope.hpp"
#include "dirac/kernels.hpp"
#include "dirac/potentials.hpp"

#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <random>
#include <stdexcept>
#include <string_view>
#include <vector>

using namespace dirac;
namespace k = dirac::kernels;

namespace {

// Lengths straddle the 4-wide vector body and its scalar tail.
constexpr std::size_t lengths[] = {0, 1, 3, 4, 5, 7, 8, 63, 64, 65, 1000, 4099};

std::vector<double> log_uniform(std::size_t n, double lo, double hi, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> d(std::log(lo), std::log(hi));
    std::vector<double> out(n);
    for (auto& x : out) {
        x = std::exp(d(rng));
    }
    return out;
}

std::vector<double> signed_uniform(std::size_t n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> d(-1.0, 1.0);
    std::vector<double> out(n);
    for (auto& x : out) {
        x = d(rng);
    }
    return out;
}

k::ScreenedParams params(int Z) {
    auto const s = ScreenedCoulomb::from_charge(Z);
    return {s.v, s.lambda, 1.0 / Z};
}

double abs_dot(std::vector<double> const& w, std::vector<double> const& a, std::vector<double> const& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < w.size(); ++i) {
        s += std::abs(w[i] * a[i] * b[i]);
    }
    return s;
}

} // namespace

TEST_CASE("dispatch") {
    k::Isa const start = k::active_isa();
    if (char const* env = std::getenv("DIRAC_SIMD"); env && std::string_view(env) == "scalar") {
        CHECK(start == k::Isa::scalar);
    } else {
        CHECK(start == (k::cpu_supports_avx2() ? k::Isa::avx2 : k::Isa::scalar));
    }
    k::select_isa(k::Isa::scalar);
    CHECK(k::active_isa() == k::Isa::scalar);
    k::select_isa(k::Isa::avx2);
    CHECK(k::active_isa() == (k::cpu_supports_avx2() ? k::Isa::avx2 : k::Isa::scalar));
    k::select_isa(start);
    CHECK(k::isa_name(k::Isa::scalar) == "scalar");
    CHECK(k::isa_name(k::Isa::avx2) == "avx2");
}

TEST_CASE("scalar reference matches the model evaluators") {
    auto const s = ScreenedCoulomb::from_charge(47);
    auto const r = log_uniform(513, 1e-7, 1e4, 1);
    std::vector<double> out(r.size());
    k::scalar::screened_potential(params(47), r.data(), out.data(), r.size());
    for (std::size_t i = 0; i < r.size(); ++i) {
        CHECK(out[i] == doctest::Approx(evaluate(s, r[i])).epsilon(1e-15));
    }
    k::scalar::shifted_coulomb(0.02, 0.31, r.data(), out.data(), r.size());
    for (std::size_t i = 0; i < r.size(); ++i) {
        CHECK(out[i] == doctest::Approx(evaluate(ShiftedCoulomb{0.02, 0.31}, r[i])).epsilon(1e-15));
    }
    Channel const ch(-1, 3, 1);
    std::vector<double> u;
    for (int i = 1; i < 100; ++i) {
        u.push_back(0.01 * i);
    }
    out.resize(u.size());
    k::scalar::envelope_functional(params(47), {2.0, 0.0}, u.data(), out.data(), u.size());
    for (std::size_t i = 0; i < u.size(); ++i) {
        CHECK(out[i] == doctest::Approx(envelope_functional(s, ch, u[i])).epsilon(1e-13));
    }
}

#if defined(DIRAC_HAVE_AVX2)
TEST_CASE("AVX2 pointwise kernels are bit-identical to scalar") {
    if (!k::cpu_supports_avx2()) {
        MESSAGE("AVX2 not available on this CPU; equivalence not exercised");
        return;
    }
    for (int Z : {1, 20, 80}) {
        for (std::size_t n : lengths) {
            auto const r = log_uniform(n, 1e-8, 1e5, n + Z);
            std::vector<double> a(n), b(n);
            k::scalar::screened_potential(params(Z), r.data(), a.data(), n);
            k::avx2::screened_potential(params(Z), r.data(), b.data(), n);
            CHECK(a == b);
            k::scalar::shifted_coulomb(0.003 * Z, 0.005 * Z, r.data(), a.data(), n);
            k::avx2::shifted_coulomb(0.003 * Z, 0.005 * Z, r.data(), b.data(), n);
            CHECK(a == b);
        }
    }
    for (int kk : {1, 2, 3}) {
        for (std::size_t n : lengths) {
            auto u = log_uniform(n, 1e-6, 1.0 - 1e-6, 100 + n);
            std::vector<double> a(n), b(n);
            k::scalar::envelope_functional(params(60), {double(kk), 0.0}, u.data(), a.data(), n);
            k::avx2::envelope_functional(params(60), {double(kk), 0.0}, u.data(), b.data(), n);
            CHECK(a == b);
        }
    }
}

TEST_CASE("AVX2 reductions agree with scalar to rounding") {
    if (!k::cpu_supports_avx2()) {
        MESSAGE("AVX2 not available on this CPU; equivalence not exercised");
        return;
    }
    for (std::size_t n : lengths) {
        auto const w = log_uniform(n, 1e-6, 1.0, 3 * n + 1);
        auto const a = signed_uniform(n, 3 * n + 2);
        auto const b = signed_uniform(n, 3 * n + 3);
        auto const c = signed_uniform(n, 3 * n + 4);
        double const bound = 4.0 * n * 1.2e-16 * abs_dot(w, a, b) + 1e-300;
        CHECK(std::abs(k::scalar::weighted_dot(w.data(), a.data(), b.data(), n) -
                       k::avx2::weighted_dot(w.data(), a.data(), b.data(), n)) <= bound);
        std::vector<double> ac(n);
        for (std::size_t i = 0; i < n; ++i) {
            ac[i] = a[i] * c[i];
        }
        double const bound3 = 4.0 * n * 1.2e-16 * abs_dot(w, ac, b) + 1e-300;
        CHECK(std::abs(k::scalar::weighted_dot3(w.data(), a.data(), b.data(), c.data(), n) -
                       k::avx2::weighted_dot3(w.data(), a.data(), b.data(), c.data(), n)) <= bound3);
    }
}
#endif

TEST_CASE("span entry points check lengths") {
    std::vector<double> r(5, 1.0), out(4);
    CHECK_THROWS_AS(k::screened_potential(params(20), r, out), std::invalid_argument);
    CHECK_THROWS_AS(k::weighted_dot(r, r, out), std::invalid_argument);
    CHECK(k::weighted_dot(r, r, r) == 5.0);
}

TEST_CASE("end results do not depend on the selected path") {
    k::Isa const start = k::active_isa();
    auto const s = ScreenedCoulomb::from_charge(70);
    Channel const ch(-1, 1, 1);
    k::select_isa(k::Isa::scalar);
    auto const scalar_bound = minimize_bound(s, ch);
    k::select_isa(k::Isa::avx2);
    auto const simd_bound = minimize_bound(s, ch);
    k::select_isa(start);
    CHECK(scalar_bound.E_upper == doctest::Approx(simd_bound.E_upper).epsilon(1e-14));
    CHECK(scalar_bound.u_star == doctest::Approx(simd_bound.u_star).epsilon(1e-9));
}
