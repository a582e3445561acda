#include "holo/interferometer.hpp"

#include "holo/errors.hpp"
#include "holo/kernels.hpp"

#include <cmath>

namespace holo {

namespace {

constexpr std::size_t kFullSimDimCap = 64;

std::vector<cplx> frame_column(const Frame& f, std::size_t k) { return f.column(k); }

double norm_sq(const std::vector<cplx>& v) { return kernels::nrm2sq(v.size(), v.data()); }

// N-dimensional lift of a K x K arm matrix: F v F† + (1 - F F†). Acts as v on
// the subspace and trivially on its complement.
ComplexMatrix lift_to_subspace(const Frame& f, const ComplexMatrix& v) {
    if (v.rows() != f.rank() || v.cols() != f.rank())
        throw input_error("arm unitary must be K x K");
    const ComplexMatrix p = projector(f);
    ComplexMatrix full = ComplexMatrix::identity(f.ambient_dim()) - p;
    full += times_adjoint(f.matrix() * v, f.matrix());
    return full;
}

// Composite 2N x 2N operator [[b00, b01], [b10, b11]] with arm-major indexing
// (index = arm * N + internal); nullptr blocks mean zero.
ComplexMatrix compose_blocks(const ComplexMatrix* b00, const ComplexMatrix* b01,
                             const ComplexMatrix* b10, const ComplexMatrix* b11,
                             std::size_t n) {
    ComplexMatrix out(2 * n, 2 * n);
    auto put = [&](const ComplexMatrix* b, std::size_t ro, std::size_t co) {
        if (b == nullptr) return;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) out(ro + i, co + j) = (*b)(i, j);
    };
    put(b00, 0, 0);
    put(b01, 0, n);
    put(b10, n, 0);
    put(b11, n, n);
    return out;
}

std::vector<cplx> apply(const ComplexMatrix& op, const std::vector<cplx>& x) {
    std::vector<cplx> y(op.rows());
    kernels::gemm(op.rows(), op.cols(), 1, op.data(), x.data(), y.data());
    return y;
}

// Hadamard-convention 50-50 beam-splitter on the arm degree of freedom:
// |0> -> (|0>+|1>)/sqrt(2), |1> -> (|0>-|1>)/sqrt(2).
ComplexMatrix beam_splitter(std::size_t n) {
    const double s = 1.0 / std::sqrt(2.0);
    ComplexMatrix id = ComplexMatrix::identity(n);
    ComplexMatrix plus = id * cplx(s, 0.0);
    ComplexMatrix minus = id * cplx(-s, 0.0);
    return compose_blocks(&plus, &plus, &plus, &minus, n);
}

double arm0_intensity(const std::vector<cplx>& composite, std::size_t n) {
    return kernels::nrm2sq(n, composite.data());
}

} // namespace

double abelian_direct_intensity(const SubspaceSequence& seq, double kappa) {
    if (seq.rank() != 1) throw input_error("abelian_direct_intensity: K = 1 required");
    const ComplexMatrix gamma = gamma_operator(seq, Closure::Open);
    const std::vector<cplx> psi = frame_column(seq[0], 0);
    std::vector<cplx> w = apply(gamma, psi);
    kernels::axpy(w.size(), std::polar(1.0, kappa), psi.data(), w.data());
    return 0.25 * norm_sq(w);
}

AbelianStep abelian_iterative_step(const std::vector<cplx>& prev_phased,
                                   const std::vector<cplx>& next, double kappa,
                                   const Tol& tol) {
    if (prev_phased.size() != next.size())
        throw input_error("abelian_iterative_step: dimension mismatch");
    std::vector<cplx> w = prev_phased;
    kernels::axpy(w.size(), std::polar(1.0, kappa), next.data(), w.data());
    AbelianStep step{0.25 * norm_sq(w), std::nullopt};
    const cplx ov = kernels::cdotc(next.size(), next.data(), prev_phased.data());
    if (std::abs(ov) > tol.abs_floor) step.maximizer = std::arg(ov);
    return step;
}

double direct_intensity(const SubspaceSequence& seq, const ComplexMatrix& v, std::size_t k) {
    if (k >= seq.rank()) throw input_error("direct_intensity: basis index out of range");
    const ComplexMatrix gamma = gamma_operator(seq, Closure::Open);
    const ComplexMatrix g = adjoint_times(seq[0].matrix(), adjoint_times(gamma, gamma) * seq[0].matrix());
    const ComplexMatrix vd = adjoint_times(v, d_matrix(seq, Closure::Closed));
    return 0.25 * (1.0 + g(k, k).real()) + 0.5 * vd(k, k).real();
}

double direct_total_intensity(const SubspaceSequence& seq, const ComplexMatrix& v) {
    const std::size_t kk = seq.rank();
    const ComplexMatrix gamma = gamma_operator(seq, Closure::Open);
    const ComplexMatrix g = adjoint_times(seq[0].matrix(), adjoint_times(gamma, gamma) * seq[0].matrix());
    const ComplexMatrix vd = adjoint_times(v, d_matrix(seq, Closure::Closed));
    return 0.25 * (static_cast<double>(kk) + g.trace().real()) + 0.5 * vd.trace().real();
}

double iterative_step_total_intensity(const ComplexMatrix& accumulated, const Frame& fa,
                                      const Frame& fb, const ComplexMatrix& v) {
    const ComplexMatrix inner = adjoint_times(accumulated, overlap_matrix(fa, fb) * v);
    return 0.5 * (static_cast<double>(fa.rank()) + inner.trace().real());
}

ComplexMatrix iterative_step_maximizer(const ComplexMatrix& accumulated, const Frame& fa,
                                       const Frame& fb, const Tol& tol) {
    return relative_phase(fb, fa, tol) * accumulated;
}

MaximalityReport verify_maximality(const SubspaceSequence& seq, std::size_t trials,
                                   std::uint64_t seed, const Tol& tol) {
    MaximalityReport rep;
    rep.trials = trials;

    const HolonomyResult hol = direct_holonomy(seq, tol);
    if (hol.kind != HolonomyKind::FullUnitary)
        throw input_error("verify_maximality: sequence must have full overlaps");
    const ComplexMatrix& ud = *hol.matrix;

    const double best = direct_total_intensity(seq, ud);
    double sigma_sum = 0.0;
    for (double s : hol.positive_spectrum) sigma_sum += s;
    const ComplexMatrix gamma = gamma_operator(seq, Closure::Open);
    const ComplexMatrix g =
        adjoint_times(seq[0].matrix(), adjoint_times(gamma, gamma) * seq[0].matrix());
    const double closed_form_max =
        0.25 * (static_cast<double>(seq.rank()) + g.trace().real()) + 0.5 * sigma_sum;
    rep.saturation_gap = std::abs(best - closed_form_max);

    for (std::size_t t = 0; t < trials; ++t) {
        const ComplexMatrix v = random_unitary(seq.rank(), seed + 0x9f0e11ULL * (t + 1));
        const double excess = direct_total_intensity(seq, v) - best;
        rep.max_excess = std::max(rep.max_excess, excess);
        if (excess > 1e-10) ++rep.violations;
    }

    // iterative chain: the analytic maximizer U_{b,a} acc must agree with the
    // polar-decomposition argmax of acc† (Fa|Fb) at every step
    ComplexMatrix acc = ComplexMatrix::identity(seq.rank());
    const std::size_t m = seq.size();
    for (std::size_t a = 0; a < m; ++a) {
        const Frame& cur = seq[a];
        const Frame& nxt = seq[(a + 1) % m];
        const ComplexMatrix formula = iterative_step_maximizer(acc, cur, nxt, tol);
        const ComplexMatrix argmax =
            polar_left(adjoint_times(acc, overlap_matrix(cur, nxt)), tol).isometry.adjoint();
        rep.step_gaps.push_back(frobenius_distance(formula, argmax));
        acc = formula;
    }
    return rep;
}

InterferenceRecord simulate_full_direct(const SubspaceSequence& seq, const ComplexMatrix& v) {
    const std::size_t n = seq.ambient_dim();
    if (n > kFullSimDimCap) throw input_error("simulate_full: ambient dimension cap exceeded");

    const ComplexMatrix id = ComplexMatrix::identity(n);
    const ComplexMatrix arm1 = lift_to_subspace(seq[0], v);
    const ComplexMatrix arm_op = compose_blocks(&id, nullptr, nullptr, &arm1, n);
    const ComplexMatrix bs = beam_splitter(n);

    std::vector<ComplexMatrix> filters;
    filters.reserve(seq.size());
    for (std::size_t a = 0; a < seq.size(); ++a) {
        const ComplexMatrix p = projector(seq[a]);
        filters.push_back(compose_blocks(&p, nullptr, nullptr, &id, n));
    }

    InterferenceRecord rec;
    rec.applied_unitary = v;
    const double s = 1.0 / std::sqrt(2.0);
    for (std::size_t k = 0; k < seq.rank(); ++k) {
        const std::vector<cplx> psi = frame_column(seq[0], k);
        std::vector<cplx> state(2 * n);
        for (std::size_t i = 0; i < n; ++i) state[i] = state[n + i] = s * psi[i];
        for (const ComplexMatrix& f : filters) state = apply(f, state);
        state = apply(arm_op, state);
        state = apply(bs, state);
        rec.intensities.push_back(arm0_intensity(state, n));
        rec.total += rec.intensities.back();
    }
    return rec;
}

InterferenceRecord simulate_full_direct_abelian(const SubspaceSequence& seq, double kappa) {
    if (seq.rank() != 1) throw input_error("simulate_full_direct_abelian: K = 1 required");
    ComplexMatrix phase(1, 1);
    phase(0, 0) = std::polar(1.0, kappa);
    InterferenceRecord rec = simulate_full_direct(seq, phase);
    rec.applied_unitary.reset();
    rec.applied_phase = kappa;
    return rec;
}

InterferenceRecord simulate_full_iterative_step(const Frame& fa, const Frame& fb,
                                                const ComplexMatrix& accumulated,
                                                const ComplexMatrix& v) {
    if (fa.ambient_dim() != fb.ambient_dim() || fa.rank() != fb.rank())
        throw input_error("simulate_full_iterative_step: frames must share N and K");
    const std::size_t n = fa.ambient_dim();
    if (n > kFullSimDimCap) throw input_error("simulate_full: ambient dimension cap exceeded");

    const ComplexMatrix acc_full = lift_to_subspace(fa, accumulated);
    const ComplexMatrix v_full = lift_to_subspace(fb, v);
    const ComplexMatrix bs = beam_splitter(n);

    InterferenceRecord rec;
    rec.applied_unitary = v;
    const double s = 1.0 / std::sqrt(2.0);
    for (std::size_t k = 0; k < fa.rank(); ++k) {
        const std::vector<cplx> ak = fa.column(k);
        const std::vector<cplx> bk = fb.column(k);
        const std::vector<cplx> top = apply(v_full, bk);
        const std::vector<cplx> bottom = apply(acc_full, ak);
        std::vector<cplx> state(2 * n);
        for (std::size_t i = 0; i < n; ++i) {
            state[i] = s * top[i];
            state[n + i] = s * bottom[i];
        }
        state = apply(bs, state);
        rec.intensities.push_back(arm0_intensity(state, n));
        rec.total += rec.intensities.back();
    }
    return rec;
}

} // namespace holo
