// Compiled with -mavx2 -mfma; only reached when the CPU reports AVX2.

#include "dirac/kernels.hpp"

#include <immintrin.h>

namespace dirac::kernels::avx2 {

namespace {

constexpr std::size_t lanes = 4;

// Pointwise kernels use separate mul/add/div/sqrt so every lane rounds exactly
// like the scalar reference. Only the reductions use FMA.

inline __m256d screened(__m256d r, __m256d v, __m256d lambda, __m256d inv_z) noexcept {
    __m256d const one = _mm256_set1_pd(1.0);
    __m256d const lr = _mm256_mul_pd(lambda, r);
    __m256d const num = _mm256_mul_pd(v, _mm256_add_pd(one, _mm256_mul_pd(lr, inv_z)));
    __m256d const den = _mm256_mul_pd(r, _mm256_add_pd(one, lr));
    // -(num/den)
    return _mm256_sub_pd(_mm256_setzero_pd(), _mm256_div_pd(num, den));
}

inline double hsum(__m256d x) noexcept {
    __m128d const lo = _mm256_castpd256_pd128(x);
    __m128d const hi = _mm256_extractf128_pd(x, 1);
    __m128d const pair = _mm_add_pd(lo, hi);
    return _mm_cvtsd_f64(_mm_add_sd(pair, _mm_unpackhi_pd(pair, pair)));
}

} // namespace

void screened_potential(ScreenedParams p, double const* r, double* out, std::size_t n) noexcept {
    __m256d const v = _mm256_set1_pd(p.v);
    __m256d const lambda = _mm256_set1_pd(p.lambda);
    __m256d const inv_z = _mm256_set1_pd(p.inv_z);
    std::size_t i = 0;
    for (; i + lanes <= n; i += lanes) {
        _mm256_storeu_pd(out + i, screened(_mm256_loadu_pd(r + i), v, lambda, inv_z));
    }
    scalar::screened_potential(p, r + i, out + i, n - i);
}

void shifted_coulomb(double shift, double coupling, double const* r, double* out, std::size_t n) noexcept {
    __m256d const a = _mm256_set1_pd(shift);
    __m256d const b = _mm256_set1_pd(coupling);
    std::size_t i = 0;
    for (; i + lanes <= n; i += lanes) {
        _mm256_storeu_pd(out + i, _mm256_sub_pd(a, _mm256_div_pd(b, _mm256_loadu_pd(r + i))));
    }
    scalar::shifted_coulomb(shift, coupling, r + i, out + i, n - i);
}

void envelope_functional(ScreenedParams p, CoulombParams c, double const* u, double* out, std::size_t n) noexcept {
    __m256d const k = _mm256_set1_pd(c.k);
    __m256d const n_offset = _mm256_set1_pd(c.n_offset);
    __m256d const v = _mm256_set1_pd(p.v);
    __m256d const lambda = _mm256_set1_pd(p.lambda);
    __m256d const inv_z = _mm256_set1_pd(p.inv_z);
    __m256d const zero = _mm256_setzero_pd();
    __m256d const one = _mm256_set1_pd(1.0);
    std::size_t i = 0;
    for (; i + lanes <= n; i += lanes) {
        __m256d const ui = _mm256_loadu_pd(u + i);
        __m256d const s = _mm256_sqrt_pd(_mm256_mul_pd(_mm256_sub_pd(k, ui), _mm256_add_pd(k, ui)));
        __m256d const N = _mm256_add_pd(n_offset, s);
        __m256d const u2 = _mm256_mul_pd(ui, ui);
        __m256d const q = _mm256_add_pd(_mm256_mul_pd(N, N), u2);
        __m256d const root_q = _mm256_sqrt_pd(q);
        __m256d const D = _mm256_div_pd(N, root_q);
        // dD = -u (u^2/s + N) / (q sqrt(q))
        __m256d const num = _mm256_mul_pd(_mm256_sub_pd(zero, ui), _mm256_add_pd(_mm256_div_pd(u2, s), N));
        __m256d const dD = _mm256_div_pd(num, _mm256_mul_pd(q, root_q));
        __m256d const t = _mm256_sub_pd(zero, _mm256_div_pd(one, dD));
        __m256d const V = screened(t, v, lambda, inv_z);
        __m256d const F = _mm256_add_pd(_mm256_sub_pd(D, _mm256_mul_pd(ui, dD)), V);
        _mm256_storeu_pd(out + i, F);
    }
    scalar::envelope_functional(p, c, u + i, out + i, n - i);
}

double weighted_dot(double const* w, double const* a, double const* b, std::size_t n) noexcept {
    __m256d acc0 = _mm256_setzero_pd();
    __m256d acc1 = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 2 * lanes <= n; i += 2 * lanes) {
        __m256d const p0 = _mm256_mul_pd(_mm256_loadu_pd(w + i), _mm256_loadu_pd(a + i));
        __m256d const p1 = _mm256_mul_pd(_mm256_loadu_pd(w + i + lanes), _mm256_loadu_pd(a + i + lanes));
        acc0 = _mm256_fmadd_pd(p0, _mm256_loadu_pd(b + i), acc0);
        acc1 = _mm256_fmadd_pd(p1, _mm256_loadu_pd(b + i + lanes), acc1);
    }
    double sum = hsum(_mm256_add_pd(acc0, acc1));
    return sum + scalar::weighted_dot(w + i, a + i, b + i, n - i);
}

double weighted_dot3(double const* w, double const* a, double const* b, double const* c, std::size_t n) noexcept {
    __m256d acc0 = _mm256_setzero_pd();
    __m256d acc1 = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 2 * lanes <= n; i += 2 * lanes) {
        __m256d const p0 = _mm256_mul_pd(_mm256_mul_pd(_mm256_loadu_pd(w + i), _mm256_loadu_pd(a + i)),
                                         _mm256_loadu_pd(b + i));
        __m256d const p1 = _mm256_mul_pd(
            _mm256_mul_pd(_mm256_loadu_pd(w + i + lanes), _mm256_loadu_pd(a + i + lanes)),
            _mm256_loadu_pd(b + i + lanes));
        acc0 = _mm256_fmadd_pd(p0, _mm256_loadu_pd(c + i), acc0);
        acc1 = _mm256_fmadd_pd(p1, _mm256_loadu_pd(c + i + lanes), acc1);
    }
    double sum = hsum(_mm256_add_pd(acc0, acc1));
    return sum + scalar::weighted_dot3(w + i, a + i, b + i, c + i, n - i);
}

} // namespace dirac::kernels::avx2
