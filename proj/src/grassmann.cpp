#include "holo/grassmann.hpp"

#include "holo/errors.hpp"
#include "holo/kernels.hpp"

#include <cmath>
#include <utility>

namespace holo {

namespace detail {

std::uint64_t NormalSampler::next_u64() {
    // splitmix64
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

double NormalSampler::next() {
    if (has_cached_) {
        has_cached_ = false;
        return cached_;
    }
    // u1 in (0,1], u2 in [0,1)
    const double u1 = (static_cast<double>(next_u64() >> 11) + 1.0) * 0x1.0p-53;
    const double u2 = static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double a = 6.283185307179586476925286766559 * u2;
    cached_ = r * std::sin(a);
    has_cached_ = true;
    return r * std::cos(a);
}

} // namespace detail

Frame::Frame(ComplexMatrix columns, const Tol& tol) : f_(std::move(columns)) {
    if (f_.rows() == 0 || f_.cols() == 0 || f_.cols() > f_.rows())
        throw input_error("Frame: need 1 <= K <= N");
    if (!f_.is_finite()) throw input_error("Frame: non-finite entries");
    const ComplexMatrix g = adjoint_times(f_, f_);
    const double defect = frobenius_distance(g, ComplexMatrix::identity(f_.cols()));
    if (defect > tol.frame_ortho)
        throw input_error("Frame: columns too far from orthonormal");
    if (defect > 1e-13) // Loewdin repair: F (F†F)^{-1/2} keeps the span
        f_ = f_ * inv_sqrt_hermitian(g);
}

double Frame::orthonormality_defect() const {
    return frobenius_distance(adjoint_times(f_, f_), ComplexMatrix::identity(f_.cols()));
}

SubspaceSequence::SubspaceSequence(std::vector<Frame> frames) : frames_(std::move(frames)) {
    if (frames_.empty()) throw input_error("SubspaceSequence: at least one frame required");
    for (const Frame& f : frames_)
        if (f.ambient_dim() != frames_.front().ambient_dim() ||
            f.rank() != frames_.front().rank())
            throw input_error("SubspaceSequence: frames must share N and K");
}

ComplexMatrix overlap_matrix(const Frame& fa, const Frame& fb) {
    if (fa.ambient_dim() != fb.ambient_dim() || fa.rank() != fb.rank())
        throw input_error("overlap_matrix: frames must share N and K");
    return adjoint_times(fa.matrix(), fb.matrix());
}

ComplexMatrix projector(const Frame& f) {
    return times_adjoint(f.matrix(), f.matrix());
}

Frame gauge_transform(const Frame& f, const ComplexMatrix& w, const Tol& tol) {
    if (w.rows() != f.rank() || w.cols() != f.rank())
        throw input_error("gauge_transform: W must be K x K");
    if (!is_unitary(w, tol.unitary_check))
        throw input_error("gauge_transform: W not unitary");
    return Frame(f.matrix() * w, tol);
}

OverlapClass classify_overlap(const Frame& fa, const Frame& fb, const Tol& tol) {
    Svd s = svd_jacobi(overlap_matrix(fa, fb));
    OverlapClass oc;
    oc.singular_values = s.sigma;
    oc.rank = 0;
    const double smax = s.sigma.empty() ? 0.0 : s.sigma[0];
    if (smax > tol.abs_floor) {
        const double cut = tol.rank_rel * smax;
        while (oc.rank < s.sigma.size() && s.sigma[oc.rank] > cut) ++oc.rank;
    }
    oc.tag = oc.rank == 0 ? OverlapTag::Orthogonal
           : oc.rank == fa.rank() ? OverlapTag::Full
                                  : OverlapTag::Partial;
    return oc;
}

Frame random_frame(std::size_t n, std::size_t k, std::uint64_t seed) {
    if (k == 0 || k > n) throw input_error("random_frame: need 1 <= K <= N");
    detail::NormalSampler rng(seed);
    ComplexMatrix g(n, k);
    for (std::size_t j = 0; j < k; ++j)
        for (std::size_t i = 0; i < n; ++i)
            g(i, j) = cplx(rng.next(), rng.next());

    // modified Gram-Schmidt, column major scratch
    std::vector<std::vector<cplx>> cols(k);
    for (std::size_t j = 0; j < k; ++j) cols[j] = g.column(j);
    for (std::size_t j = 0; j < k; ++j) {
        for (std::size_t p = 0; p < j; ++p) {
            const cplx proj = kernels::cdotc(n, cols[p].data(), cols[j].data());
            kernels::axpy(n, -proj, cols[p].data(), cols[j].data());
        }
        const double nrm = std::sqrt(kernels::nrm2sq(n, cols[j].data()));
        if (nrm < 1e-12)
            throw numerical_error("random_frame: degenerate Gaussian draw");
        kernels::scal(n, cplx(1.0 / nrm, 0.0), cols[j].data());
        // phase convention: first entry of modulus > 1e-12 made real positive
        for (std::size_t i = 0; i < n; ++i) {
            const double mod = std::abs(cols[j][i]);
            if (mod > 1e-12) {
                kernels::scal(n, std::conj(cols[j][i]) / mod, cols[j].data());
                break;
            }
        }
    }
    ComplexMatrix f(n, k);
    for (std::size_t j = 0; j < k; ++j) f.set_column(j, cols[j]);
    return Frame(std::move(f));
}

ComplexMatrix random_unitary(std::size_t k, std::uint64_t seed) {
    return random_frame(k, k, seed).matrix();
}

SubspaceSequence random_sequence(std::size_t n, std::size_t k, std::size_t m,
                                 std::uint64_t seed) {
    if (m == 0) throw input_error("random_sequence: m >= 1 required");
    std::vector<Frame> frames;
    frames.reserve(m);
    for (std::size_t a = 0; a < m; ++a)
        frames.push_back(random_frame(n, k, seed + 0x51ed2701ULL * (a + 1)));
    return SubspaceSequence(std::move(frames));
}

} // namespace holo
