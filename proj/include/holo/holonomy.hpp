#pragma once

#include "holo/grassmann.hpp"

#include <optional>
#include <vector>

namespace holo {

/// Whether the product that defines a holonomy returns to the first subspace.
/// Closed matches the extended sequence p_1,...,p_m,p_1: the direct product
/// gains the closing overlap (F_1|F_m) and the iterative product the closing
/// relative phase U_{1,m}. Open omits the closing leg; its dense-sequence
/// limit is the bare path-ordered exponential, without the endpoint
/// relative-phase prefactor the closed product acquires.
enum class Closure { Closed, Open };

enum class HolonomyKind { FullUnitary, PartialIsometry, Undefined };

/// K x K holonomy with its classification and per-link diagnostics. `matrix`
/// is absent exactly when kind == Undefined; `vanishing_link` then names the
/// orthogonal link (index into `links`), or is absent when the product itself
/// lost all rank.
struct HolonomyResult {
    HolonomyKind kind = HolonomyKind::Undefined;
    std::optional<ComplexMatrix> matrix;
    std::size_t rank = 0;
    std::vector<OverlapClass> links;       ///< product order: (2,1),...,(m,m-1)[,(1,m)]
    std::vector<double> positive_spectrum; ///< singular values of the final product
    std::optional<std::size_t> vanishing_link;
};

/// Relative phase between two frames: the partial-isometry factor of the left
/// polar decomposition of (Fa|Fb). Unitary iff the subspaces fully overlap,
/// zero iff they are orthogonal.
ComplexMatrix relative_phase(const Frame& fa, const Frame& fb, const Tol& tol = {});

/// Projector product P_m ... P_1 (Open) or P_1 P_m ... P_1 (Closed).
ComplexMatrix gamma_operator(const SubspaceSequence& seq, Closure closure = Closure::Closed);

/// Overlap-matrix product (F_1|F_m)(F_m|F_{m-1})...(F_2|F_1); Closure::Open
/// drops the closing factor. Requires m >= 2.
ComplexMatrix d_matrix(const SubspaceSequence& seq, Closure closure = Closure::Closed);

/// Direct holonomy: partial-isometry factor of d_matrix. Undefined when a
/// link is orthogonal or the product has rank zero.
HolonomyResult direct_holonomy(const SubspaceSequence& seq, const Tol& tol = {},
                               Closure closure = Closure::Closed);

/// Iterative holonomy: partial-isometry factor of the ordered product of
/// per-link relative phases U_{1,m} U_{m,m-1} ... U_{2,1}. When a link is
/// only partially overlapping, the chained-interferometer maximization that
/// motivates this product has a degenerate maximizer set; the product of the
/// unique partial-isometry relative phases computed here is one canonical
/// resolution, not an operational prediction.
HolonomyResult iterative_holonomy(const SubspaceSequence& seq, const Tol& tol = {},
                                  Closure closure = Closure::Closed);

/// K = 1 direct holonomy: the phase factor of the chained amplitude
/// <psi_1|psi_m><psi_m|psi_{m-1}>...<psi_2|psi_1>. Throws undefined_error
/// when the chain vanishes.
cplx pancharatnam_direct(const SubspaceSequence& seq, const Tol& tol = {},
                         Closure closure = Closure::Closed);

/// K = 1 iterative holonomy: the chain of interference maximizers. Returns
/// the final phase factor and the accumulated phases (kappa_2,...,kappa_m
/// and, for closed sequences, the final kappa_1), each in (-pi, pi].
struct PancharatnamChain {
    cplx phase;
    std::vector<double> accumulated;
};
PancharatnamChain pancharatnam_iterative(const SubspaceSequence& seq, const Tol& tol = {},
                                         Closure closure = Closure::Closed);

} // namespace holo
