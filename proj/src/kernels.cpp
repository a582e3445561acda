// Backend dispatch. Compiled without AVX2 flags so the CPU feature check never
// executes vector instructions itself.

#include "holo/kernels.hpp"
#include "holo/errors.hpp"

#include <cstdlib>
#include <string>

namespace holo::kernels {

namespace scalar {
const Table& get_table();
}
namespace avx2 {
bool compiled();
const Table* get_table();
}

namespace {

bool cpu_has_avx2_fma() {
#if defined(__x86_64__) || defined(_M_X64)
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
    return false;
#endif
}

Backend pick_initial() {
    const char* env = std::getenv("HOLO_KERNELS");
    if (env != nullptr) {
        const std::string s(env);
        if (s == "scalar") return Backend::Scalar;
        if (s == "avx2" && backend_supported(Backend::Avx2)) return Backend::Avx2;
        // "auto" or anything unrecognized falls through to detection
    }
    return backend_supported(Backend::Avx2) ? Backend::Avx2 : Backend::Scalar;
}

Backend& current() {
    static Backend b = pick_initial();
    return b;
}

} // namespace

bool backend_supported(Backend b) {
    switch (b) {
    case Backend::Scalar: return true;
    case Backend::Avx2: return avx2::compiled() && cpu_has_avx2_fma();
    }
    return false;
}

Backend active_backend() { return current(); }

void set_backend(Backend b) {
    if (!backend_supported(b))
        throw input_error("kernel backend not supported on this CPU");
    current() = b;
}

std::string_view backend_name(Backend b) {
    return b == Backend::Scalar ? "scalar" : "avx2";
}

const Table& table(Backend b) {
    if (b == Backend::Avx2) {
        if (!backend_supported(Backend::Avx2))
            throw input_error("avx2 kernels unavailable");
        return *avx2::get_table();
    }
    return scalar::get_table();
}

cplx cdotc(std::size_t n, const cplx* x, const cplx* y) {
    return table(current()).cdotc(n, x, y);
}
double nrm2sq(std::size_t n, const cplx* x) { return table(current()).nrm2sq(n, x); }
void axpy(std::size_t n, cplx alpha, const cplx* x, cplx* y) {
    table(current()).axpy(n, alpha, x, y);
}
void scal(std::size_t n, cplx alpha, cplx* x) { table(current()).scal(n, alpha, x); }
void rot2(std::size_t n, cplx* x, cplx* y, cplx j11, cplx j21, cplx j12, cplx j22) {
    table(current()).rot2(n, x, y, j11, j21, j12, j22);
}
void gemm(std::size_t m, std::size_t k, std::size_t n,
          const cplx* a, const cplx* b, cplx* c) {
    table(current()).gemm(m, k, n, a, b, c);
}

} // namespace holo::kernels
