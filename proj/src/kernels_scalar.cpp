#include "holo/kernels.hpp"

#include <cstring>

namespace holo::kernels::scalar {

cplx cdotc(std::size_t n, const cplx* x, const cplx* y) {
    double re = 0.0, im = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double xr = x[i].real(), xi = x[i].imag();
        const double yr = y[i].real(), yi = y[i].imag();
        re += xr * yr + xi * yi;
        im += xr * yi - xi * yr;
    }
    return {re, im};
}

double nrm2sq(std::size_t n, const cplx* x) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        s += x[i].real() * x[i].real() + x[i].imag() * x[i].imag();
    return s;
}

void axpy(std::size_t n, cplx alpha, const cplx* x, cplx* y) {
    const double ar = alpha.real(), ai = alpha.imag();
    for (std::size_t i = 0; i < n; ++i) {
        const double xr = x[i].real(), xi = x[i].imag();
        y[i] += cplx(ar * xr - ai * xi, ar * xi + ai * xr);
    }
}

void scal(std::size_t n, cplx alpha, cplx* x) {
    const double ar = alpha.real(), ai = alpha.imag();
    for (std::size_t i = 0; i < n; ++i) {
        const double xr = x[i].real(), xi = x[i].imag();
        x[i] = cplx(ar * xr - ai * xi, ar * xi + ai * xr);
    }
}

void rot2(std::size_t n, cplx* x, cplx* y, cplx j11, cplx j21, cplx j12, cplx j22) {
    for (std::size_t i = 0; i < n; ++i) {
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
            const cplx* bp = b + p * n;
            const double ar = aip.real(), aim = aip.imag();
            for (std::size_t j = 0; j < n; ++j) {
                const double br = bp[j].real(), bi = bp[j].imag();
                ci[j] += cplx(ar * br - aim * bi, ar * bi + aim * br);
            }
        }
    }
}

const Table& get_table() {
    static const Table t{cdotc, nrm2sq, axpy, scal, rot2, gemm};
    return t;
}

} // namespace holo::kernels::scalar
