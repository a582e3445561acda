// AVX2+FMA kernel variants. This translation unit is compiled with
// -mavx2 -mfma on x86-64; the dispatcher verifies CPU support before any
// function here is called. Complex doubles are processed two at a time as
// [re0 im0 re1 im1] lanes of a __m256d.

#include "holo/kernels.hpp"

#if defined(__x86_64__) || defined(_M_X64)
#define HOLO_KERNELS_AVX2_COMPILED 1
#include <immintrin.h>
#include <cstring>
#else
#define HOLO_KERNELS_AVX2_COMPILED 0
#endif

namespace holo::kernels::avx2 {

#if HOLO_KERNELS_AVX2_COMPILED

namespace {

inline double hsum(__m256d v) {
    __m128d lo = _mm256_castpd256_pd128(v);
    __m128d hi = _mm256_extractf128_pd(v, 1);
    lo = _mm_add_pd(lo, hi);
    return _mm_cvtsd_f64(_mm_add_sd(lo, _mm_unpackhi_pd(lo, lo)));
}

// lane signs for the imaginary-part accumulation patterns
inline __m256d sign_mi() { return _mm256_setr_pd(1.0, -1.0, 1.0, -1.0); }
inline __m256d sign_pi() { return _mm256_setr_pd(-1.0, 1.0, -1.0, 1.0); }

// acc += alpha * v for complex alpha broadcast as (ar, ai); v holds 2 complex
inline __m256d cplx_fmadd(__m256d ar, __m256d ai, __m256d v, __m256d acc) {
    __m256d vs = _mm256_mul_pd(_mm256_permute_pd(v, 0x5), sign_pi());
    acc = _mm256_fmadd_pd(ar, v, acc);
    return _mm256_fmadd_pd(ai, vs, acc);
}

} // namespace

cplx cdotc(std::size_t n, const cplx* x, const cplx* y) {
    const double* xd = reinterpret_cast<const double*>(x);
    const double* yd = reinterpret_cast<const double*>(y);
    __m256d acc_re = _mm256_setzero_pd();
    __m256d acc_im = _mm256_setzero_pd();
    const __m256d smi = sign_mi();
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        __m256d xv = _mm256_loadu_pd(xd + 2 * i);
        __m256d yv = _mm256_loadu_pd(yd + 2 * i);
        acc_re = _mm256_fmadd_pd(xv, yv, acc_re);
        __m256d ys = _mm256_permute_pd(yv, 0x5);
        acc_im = _mm256_fmadd_pd(_mm256_mul_pd(xv, smi), ys, acc_im);
    }
    double re = hsum(acc_re), im = hsum(acc_im);
    for (; i < n; ++i) {
        const double xr = x[i].real(), xi = x[i].imag();
        const double yr = y[i].real(), yi = y[i].imag();
        re += xr * yr + xi * yi;
        im += xr * yi - xi * yr;
    }
    return {re, im};
}

double nrm2sq(std::size_t n, const cplx* x) {
    const double* xd = reinterpret_cast<const double*>(x);
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        __m256d xv = _mm256_loadu_pd(xd + 2 * i);
        acc = _mm256_fmadd_pd(xv, xv, acc);
    }
    double s = hsum(acc);
    for (; i < n; ++i)
        s += x[i].real() * x[i].real() + x[i].imag() * x[i].imag();
    return s;
}

void axpy(std::size_t n, cplx alpha, const cplx* x, cplx* y) {
    const double* xd = reinterpret_cast<const double*>(x);
    double* yd = reinterpret_cast<double*>(y);
    const __m256d ar = _mm256_set1_pd(alpha.real());
    const __m256d ai = _mm256_set1_pd(alpha.imag());
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        __m256d xv = _mm256_loadu_pd(xd + 2 * i);
        __m256d yv = _mm256_loadu_pd(yd + 2 * i);
        _mm256_storeu_pd(yd + 2 * i, cplx_fmadd(ar, ai, xv, yv));
    }
    for (; i < n; ++i) y[i] += alpha * x[i];
}

void scal(std::size_t n, cplx alpha, cplx* x) {
    double* xd = reinterpret_cast<double*>(x);
    const __m256d ar = _mm256_set1_pd(alpha.real());
    const __m256d ai = _mm256_set1_pd(alpha.imag());
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        __m256d xv = _mm256_loadu_pd(xd + 2 * i);
        _mm256_storeu_pd(xd + 2 * i, cplx_fmadd(ar, ai, xv, _mm256_setzero_pd()));
    }
    for (; i < n; ++i) x[i] *= alpha;
}

void rot2(std::size_t n, cplx* x, cplx* y, cplx j11, cplx j21, cplx j12, cplx j22) {
    double* xd = reinterpret_cast<double*>(x);
    double* yd = reinterpret_cast<double*>(y);
    const __m256d a11r = _mm256_set1_pd(j11.real()), a11i = _mm256_set1_pd(j11.imag());
    const __m256d a21r = _mm256_set1_pd(j21.real()), a21i = _mm256_set1_pd(j21.imag());
    const __m256d a12r = _mm256_set1_pd(j12.real()), a12i = _mm256_set1_pd(j12.imag());
    const __m256d a22r = _mm256_set1_pd(j22.real()), a22i = _mm256_set1_pd(j22.imag());
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        __m256d xv = _mm256_loadu_pd(xd + 2 * i);
        __m256d yv = _mm256_loadu_pd(yd + 2 * i);
        __m256d nx = cplx_fmadd(a21r, a21i, yv, cplx_fmadd(a11r, a11i, xv, _mm256_setzero_pd()));
        __m256d ny = cplx_fmadd(a22r, a22i, yv, cplx_fmadd(a12r, a12i, xv, _mm256_setzero_pd()));
        _mm256_storeu_pd(xd + 2 * i, nx);
        _mm256_storeu_pd(yd + 2 * i, ny);
    }
    for (; i < n; ++i) {
        const cplx xi = x[i], yi = y[i];
        x[i] = j11 * xi + j21 * yi;
        y[i] = j12 * xi + j22 * yi;
    }
}

void gemm(std::size_t m, std::size_t k, std::size_t n,
          const cplx* a, const cplx* b, cplx* c) {
    std::memset(static_cast<void*>(c), 0, m * n * sizeof(cplx));
    for (std::size_t i = 0; i < m; ++i) {
        cplx* ci = c + i * n;
        const cplx* ai = a + i * k;
        for (std::size_t p = 0; p < k; ++p) {
            const cplx aip = ai[p];
            if (aip == cplx{}) continue;
            axpy(n, aip, b + p * n, ci);
        }
    }
}

bool compiled() { return true; }

const Table* get_table() {
    static const Table t{cdotc, nrm2sq, axpy, scal, rot2, gemm};
    return &t;
}

#else // !HOLO_KERNELS_AVX2_COMPILED

bool compiled() { return false; }
const Table* get_table() { return nullptr; }

#endif

} // namespace holo::kernels::avx2
