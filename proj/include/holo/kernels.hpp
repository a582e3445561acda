#pragma once

#include <complex>
#include <cstddef>
#include <string_view>

namespace holo::kernels {

using cplx = std::complex<double>;

/// Kernel backends. Scalar is the portable reference; Avx2 is used on x86-64
/// CPUs with AVX2+FMA. Selection happens once at startup (overridable through
/// the HOLO_KERNELS environment variable: "scalar", "avx2" or "auto").
enum class Backend { Scalar, Avx2 };

Backend active_backend();
bool backend_supported(Backend b);
void set_backend(Backend b);
std::string_view backend_name(Backend b);

/// sum_i conj(x[i]) * y[i]
cplx cdotc(std::size_t n, const cplx* x, const cplx* y);

/// sum_i |x[i]|^2
double nrm2sq(std::size_t n, const cplx* x);

/// y += alpha * x
void axpy(std::size_t n, cplx alpha, const cplx* x, cplx* y);

/// x *= alpha
void scal(std::size_t n, cplx alpha, cplx* x);

/// Column-pair update [x y] <- [x y] * J with J = [[j11, j12], [j21, j22]]:
/// x' = j11*x + j21*y, y' = j12*x + j22*y, applied elementwise in one pass.
void rot2(std::size_t n, cplx* x, cplx* y, cplx j11, cplx j21, cplx j12, cplx j22);

/// Row-major C(m x n) = A(m x k) * B(k x n). C must not alias A or B.
void gemm(std::size_t m, std::size_t k, std::size_t n,
          const cplx* a, const cplx* b, cplx* c);

/// Signature table of one backend; used by the dispatcher and by the
/// scalar/AVX2 equivalence tests, which call both tables directly.
struct Table {
    cplx (*cdotc)(std::size_t, const cplx*, const cplx*);
    double (*nrm2sq)(std::size_t, const cplx*);
    void (*axpy)(std::size_t, cplx, const cplx*, cplx*);
    void (*scal)(std::size_t, cplx, cplx*);
    void (*rot2)(std::size_t, cplx*, cplx*, cplx, cplx, cplx, cplx);
    void (*gemm)(std::size_t, std::size_t, std::size_t, const cplx*, const cplx*, cplx*);
};

const Table& table(Backend b); ///< throws input_error if unsupported

} // namespace holo::kernels
