#pragma once

#include "holo/holonomy.hpp"

#include <vector>

namespace holo {

/// Projectors P_a = F_a F_a† of a subspace sequence. Density operators
/// proportional to these projectors share all polar factors with them, so the
/// 1/K normalization is never materialized.
std::vector<ComplexMatrix> projector_sequence(const SubspaceSequence& seq);

/// Uhlmann holonomy of the admissible sequence of projector-proportional
/// density operators: the ordered product of the partial-isometry factors of
/// P_1 P_m, P_m P_{m-1}, ..., P_2 P_1 (N x N). Throws undefined_error when an
/// adjacent pair (closing included) fails to overlap fully, the sufficient
/// admissibility condition used here.
ComplexMatrix uhlmann_holonomy(const SubspaceSequence& seq, const Tol& tol = {});

/// max_{k,l} | [U_I]_{kl} - <1_k| U_uhl |1_l> |: the matrix elements of the
/// Uhlmann holonomy in the first frame reproduce the iterative holonomy.
double compare_iterative(const SubspaceSequence& seq, const Tol& tol = {});

} // namespace holo
