#pragma once

#include "holo/holonomy.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace holo {

/// Output of one interferometer run: intensity per input basis vector of the
/// first subspace, their sum, and what was applied in the reference arm.
struct InterferenceRecord {
    std::vector<double> intensities;
    double total = 0.0;
    std::optional<ComplexMatrix> applied_unitary;
    std::optional<double> applied_phase;
};

/// 0-arm output intensity (1/4) ||(Gamma[c] + e^{i kappa}) psi_1||^2 of the
/// single-interferometer protocol for a K = 1 sequence.
double abelian_direct_intensity(const SubspaceSequence& seq, double kappa);

/// One step of the chained two-beam protocol: intensity
/// (1/4) || e^{i kappa} next + prev ||^2 where prev already carries its
/// accumulated phase. `maximizer` is the analytic argmax arg<next|prev>,
/// absent (and the fringe flat) when the states are orthogonal.
struct AbelianStep {
    double intensity;
    std::optional<double> maximizer;
};
AbelianStep abelian_iterative_step(const std::vector<cplx>& prev_phased,
                                   const std::vector<cplx>& next, double kappa,
                                   const Tol& tol = {});

/// I_k = (1/4)(1 + <1_k|Gamma†Gamma|1_k>) + (1/2) Re[V†D]_{kk} for a K x K
/// arm unitary V expressed in the F_1 basis.
double direct_intensity(const SubspaceSequence& seq, const ComplexMatrix& v, std::size_t k);

/// Sum over k: (1/4)(K + Tr Gamma†Gamma) + (1/2) Re Tr(V†D).
double direct_total_intensity(const SubspaceSequence& seq, const ComplexMatrix& v);

/// Two-beam step total intensity (1/2)(K + Re Tr[acc† (Fa|Fb) V]) where acc
/// is the unitary accumulated on the a-side and V rides on the b = a+1 side.
double iterative_step_total_intensity(const ComplexMatrix& accumulated, const Frame& fa,
                                      const Frame& fb, const ComplexMatrix& v);

/// The V maximizing the step intensity: U_{b,a} * accumulated.
ComplexMatrix iterative_step_maximizer(const ComplexMatrix& accumulated, const Frame& fa,
                                       const Frame& fb, const Tol& tol = {});

/// Monte-Carlo check of the trace-inequality maximality claims: no random
/// unitary beats U_D, the bound saturates at U_D, and each iterative step is
/// maximized by U_{a+1,a} times the accumulated unitary.
struct MaximalityReport {
    std::size_t trials = 0;
    std::size_t violations = 0;        ///< random V with I_tot(V) > I_tot(U_D)
    double max_excess = 0.0;           ///< worst I_tot(V) - I_tot(U_D) seen
    double saturation_gap = 0.0;       ///< |I_tot(U_D) - closed-form maximum|
    std::vector<double> step_gaps;     ///< per step: ||U_{b,a} acc - polar argmax||_F
};
MaximalityReport verify_maximality(const SubspaceSequence& seq, std::size_t trials,
                                   std::uint64_t seed, const Tol& tol = {});

/// Explicit 2N-dimensional composite-space simulation of the direct protocol:
/// prepares |1_k> (|0>+|1>)/sqrt(2), applies every projector
/// Pi_a = P_a x |0><0| + 1 x |1><1|, the arm unitary (lifted to act on the
/// first subspace), a Hadamard beam-splitter, and reads the 0-arm intensities.
/// Must reproduce direct_intensity to high accuracy; ambient dimension is
/// capped at 64.
InterferenceRecord simulate_full_direct(const SubspaceSequence& seq, const ComplexMatrix& v);

/// Abelian variant: U(1) phase e^{i kappa} in the 1-arm instead of V.
InterferenceRecord simulate_full_direct_abelian(const SubspaceSequence& seq, double kappa);

/// Composite-space simulation of one iterative step.
InterferenceRecord simulate_full_iterative_step(const Frame& fa, const Frame& fb,
                                                const ComplexMatrix& accumulated,
                                                const ComplexMatrix& v);

} // namespace holo
