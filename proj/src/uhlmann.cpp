#include "holo/uhlmann.hpp"

#include "holo/errors.hpp"

namespace holo {

std::vector<ComplexMatrix> projector_sequence(const SubspaceSequence& seq) {
    std::vector<ComplexMatrix> ps;
    ps.reserve(seq.size());
    for (std::size_t a = 0; a < seq.size(); ++a) ps.push_back(projector(seq[a]));
    return ps;
}

ComplexMatrix uhlmann_holonomy(const SubspaceSequence& seq, const Tol& tol) {
    const std::size_t m = seq.size();
    const std::vector<ComplexMatrix> p = projector_sequence(seq);

    ComplexMatrix u = ComplexMatrix::identity(seq.ambient_dim());
    for (std::size_t a = 0; a < m; ++a) {
        const std::size_t b = (a + 1) % m;
        if (classify_overlap(seq[b], seq[a], tol).tag != OverlapTag::Full)
            throw undefined_error("uhlmann_holonomy: sequence not admissible "
                                  "(adjacent subspaces must fully overlap)");
        u = polar_left(p[b] * p[a], tol).isometry * u;
    }
    return u;
}

double compare_iterative(const SubspaceSequence& seq, const Tol& tol) {
    const ComplexMatrix uhl = uhlmann_holonomy(seq, tol);
    const HolonomyResult it = iterative_holonomy(seq, tol);
    if (!it.matrix) throw undefined_error("compare_iterative: iterative holonomy undefined");
    const ComplexMatrix compressed =
        adjoint_times(seq[0].matrix(), uhl * seq[0].matrix());
    return max_abs_distance(*it.matrix, compressed);
}

} // namespace holo
