// Compiled with -mavx2 -mfma. Nothing here may run before the dispatcher has
// confirmed CPU support.

#include "tasirs/kernels.hpp"

#include <immintrin.h>

namespace tasirs::kernels {
namespace {

// A 256-bit register holds two interleaved complex doubles [re0 im0 re1 im1].

inline __m256d load2(const cplx* p) { return _mm256_loadu_pd(reinterpret_cast<const double*>(p)); }
inline void store2(cplx* p, __m256d v) { _mm256_storeu_pd(reinterpret_cast<double*>(p), v); }

inline __m256d swap_re_im(__m256d v) { return _mm256_permute_pd(v, 0b0101); }

// a * b, lane-wise complex.
inline __m256d cmul(__m256d a, __m256d b) {
    const __m256d b_re = _mm256_movedup_pd(b);
    const __m256d b_im = _mm256_permute_pd(b, 0b1111);
    return _mm256_fmaddsub_pd(a, b_re, _mm256_mul_pd(swap_re_im(a), b_im));
}

// conj(a) * b, lane-wise complex.
inline __m256d cmulc(__m256d a, __m256d b) {
    const __m256d a_re = _mm256_movedup_pd(a);
    const __m256d a_im = _mm256_permute_pd(a, 0b1111);
    return _mm256_fmsubadd_pd(b, a_re, _mm256_mul_pd(swap_re_im(b), a_im));
}

// [re0 im0 re1 im1] -> re0+re1, im0+im1
inline cplx fold(__m256d v) {
    const __m128d lo = _mm256_castpd256_pd128(v);
    const __m128d hi = _mm256_extractf128_pd(v, 1);
    const __m128d s = _mm_add_pd(lo, hi);
    return {_mm_cvtsd_f64(s), _mm_cvtsd_f64(_mm_unpackhi_pd(s, s))};
}

double sum_abs2_avx2(const cplx* x, std::size_t n) {
    __m256d acc0 = _mm256_setzero_pd();
    __m256d acc1 = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d v0 = load2(x + i);
        const __m256d v1 = load2(x + i + 2);
        acc0 = _mm256_fmadd_pd(v0, v0, acc0);
        acc1 = _mm256_fmadd_pd(v1, v1, acc1);
    }
    for (; i + 2 <= n; i += 2) {
        const __m256d v = load2(x + i);
        acc0 = _mm256_fmadd_pd(v, v, acc0);
    }
    const cplx f = fold(_mm256_add_pd(acc0, acc1));
    double acc = f.real() + f.imag();
    if (i < n) acc += x[i].real() * x[i].real() + x[i].imag() * x[i].imag();
    return acc;
}

cplx dot_avx2(const cplx* a, const cplx* b, std::size_t n) {
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) acc = _mm256_add_pd(acc, cmul(load2(a + i), load2(b + i)));
    cplx r = fold(acc);
    if (i < n) {
        r += cplx{a[i].real() * b[i].real() - a[i].imag() * b[i].imag(),
                  a[i].real() * b[i].imag() + a[i].imag() * b[i].real()};
    }
    return r;
}

cplx dotc_avx2(const cplx* a, const cplx* b, std::size_t n) {
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) acc = _mm256_add_pd(acc, cmulc(load2(a + i), load2(b + i)));
    cplx r = fold(acc);
    if (i < n) {
        r += cplx{a[i].real() * b[i].real() + a[i].imag() * b[i].imag(),
                  a[i].real() * b[i].imag() - a[i].imag() * b[i].real()};
    }
    return r;
}

void axpy_avx2(cplx alpha, const cplx* x, cplx* y, std::size_t n) {
    const __m256d ar = _mm256_set1_pd(alpha.real());
    const __m256d ai = _mm256_set1_pd(alpha.imag());
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        const __m256d xv = load2(x + i);
        const __m256d prod = _mm256_fmaddsub_pd(xv, ar, _mm256_mul_pd(swap_re_im(xv), ai));
        store2(y + i, _mm256_add_pd(load2(y + i), prod));
    }
    if (i < n) {
        const double xr = x[i].real(), xi = x[i].imag();
        y[i] = {y[i].real() + (alpha.real() * xr - alpha.imag() * xi),
                y[i].imag() + (alpha.real() * xi + alpha.imag() * xr)};
    }
}

void hadamard_avx2(const cplx* a, const cplx* b, cplx* out, std::size_t n) {
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) store2(out + i, cmul(load2(a + i), load2(b + i)));
    if (i < n) {
        const double ar = a[i].real(), ai = a[i].imag(), br = b[i].real(), bi = b[i].imag();
        out[i] = {ar * br - ai * bi, ar * bi + ai * br};
    }
}

}  // namespace

const KernelTable& avx2_table_unchecked() noexcept {
    static const KernelTable table{"avx2", sum_abs2_avx2, dot_avx2, dotc_avx2, axpy_avx2, hadamard_avx2};
    return table;
}

}  // namespace tasirs::kernels
