#pragma once

#include "holo/complex_matrix.hpp"
#include "holo/matops.hpp"
#include "holo/tolerance.hpp"

#include <cstdint>
#include <vector>

namespace holo {

/// Column-orthonormal N x K matrix: an ordered orthonormal basis of a
/// K-dimensional subspace (a point of the Stiefel manifold sitting over the
/// corresponding Grassmannian point). Validated at construction; inputs with
/// orthonormality defect up to tol.frame_ortho are re-orthonormalized
/// (Loewdin), anything worse is rejected.
class Frame {
public:
    Frame(ComplexMatrix columns, const Tol& tol = {});

    std::size_t ambient_dim() const { return f_.rows(); }
    std::size_t rank() const { return f_.cols(); }
    const ComplexMatrix& matrix() const { return f_; }
    std::vector<cplx> column(std::size_t k) const { return f_.column(k); }

    double orthonormality_defect() const;

private:
    ComplexMatrix f_;
};

/// Ordered list of frames sharing ambient dimension and rank: the discrete
/// path through the Grassmannian. Closure is not a property of the data;
/// holonomy operations take it as an argument.
class SubspaceSequence {
public:
    explicit SubspaceSequence(std::vector<Frame> frames);

    std::size_t size() const { return frames_.size(); }
    std::size_t ambient_dim() const { return frames_.front().ambient_dim(); }
    std::size_t rank() const { return frames_.front().rank(); }
    const Frame& operator[](std::size_t a) const { return frames_[a]; }
    const std::vector<Frame>& frames() const { return frames_; }

private:
    std::vector<Frame> frames_;
};

enum class OverlapTag { Full, Partial, Orthogonal };

/// Rank classification of an overlap matrix together with its spectrum.
struct OverlapClass {
    OverlapTag tag;
    std::size_t rank;
    std::vector<double> singular_values; ///< nonincreasing
};

/// (Fa|Fb)_{kl} = <a_k|b_l>, conjugate-linear in the first argument.
ComplexMatrix overlap_matrix(const Frame& fa, const Frame& fb);

/// P = F F†: the rank-K projector onto the subspace spanned by the frame.
ComplexMatrix projector(const Frame& f);

/// Mixes the frame columns by a K x K unitary; the projector is unchanged.
Frame gauge_transform(const Frame& f, const ComplexMatrix& w, const Tol& tol = {});

/// Classifies two subspaces as Full / Partial(r) / Orthogonal from the
/// singular values of their overlap matrix.
OverlapClass classify_overlap(const Frame& fa, const Frame& fb, const Tol& tol = {});

/// Haar-distributed frame from a seeded complex Gaussian matrix, orthonormalized
/// by modified Gram-Schmidt with a deterministic phase convention (first entry
/// of modulus above 1e-12 of each column made real positive). Same seed, same
/// bits.
Frame random_frame(std::size_t n, std::size_t k, std::uint64_t seed);

/// random_frame(k, k, seed) as a plain matrix.
ComplexMatrix random_unitary(std::size_t k, std::uint64_t seed);

/// Seeded sequence of m Haar frames (independent subspaces).
SubspaceSequence random_sequence(std::size_t n, std::size_t k, std::size_t m, std::uint64_t seed);

namespace detail {
/// Deterministic standard-normal sampler (Box-Muller over explicit uniform
/// doubles) so seeded outputs are identical across standard libraries.
class NormalSampler {
public:
    explicit NormalSampler(std::uint64_t seed) : state_(seed ? seed : 0x9e3779b97f4a7c15ULL) {}
    double next();

private:
    double cached_ = 0.0;
    bool has_cached_ = false;
    std::uint64_t state_;
    std::uint64_t next_u64();
};
} // namespace detail

} // namespace holo
