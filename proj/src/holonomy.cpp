#include "holo/holonomy.hpp"

#include "holo/errors.hpp"

#include <cmath>

namespace holo {

namespace {

// Link frame pairs (Fb, Fa) in product order, b following a; the closed case
// appends the return leg (F_1, F_m).
std::vector<std::pair<std::size_t, std::size_t>> link_indices(std::size_t m, Closure closure) {
    std::vector<std::pair<std::size_t, std::size_t>> links;
    for (std::size_t a = 0; a + 1 < m; ++a) links.emplace_back(a + 1, a);
    if (closure == Closure::Closed) links.emplace_back(0, m - 1);
    return links;
}

HolonomyResult finish_from_product(const ComplexMatrix& product, std::size_t k,
                                   std::vector<OverlapClass> links, const Tol& tol) {
    HolonomyResult res;
    res.links = std::move(links);
    PolarParts parts = polar_left(product, tol);
    res.positive_spectrum = parts.singular_values;
    res.rank = parts.rank;
    if (parts.rank == 0) {
        res.kind = HolonomyKind::Undefined;
        return res;
    }
    res.kind = parts.rank == k ? HolonomyKind::FullUnitary : HolonomyKind::PartialIsometry;
    res.matrix = std::move(parts.isometry);
    return res;
}

} // namespace

ComplexMatrix relative_phase(const Frame& fa, const Frame& fb, const Tol& tol) {
    return polar_left(overlap_matrix(fa, fb), tol).isometry;
}

ComplexMatrix gamma_operator(const SubspaceSequence& seq, Closure closure) {
    ComplexMatrix g = projector(seq[0]);
    for (std::size_t a = 1; a < seq.size(); ++a) g = projector(seq[a]) * g;
    if (closure == Closure::Closed) g = projector(seq[0]) * g;
    return g;
}

ComplexMatrix d_matrix(const SubspaceSequence& seq, Closure closure) {
    const std::size_t m = seq.size();
    if (m < 2) throw input_error("d_matrix: m >= 2 required");
    ComplexMatrix d = overlap_matrix(seq[1], seq[0]);
    for (std::size_t a = 1; a + 1 < m; ++a) d = overlap_matrix(seq[a + 1], seq[a]) * d;
    if (closure == Closure::Closed) d = overlap_matrix(seq[0], seq[m - 1]) * d;
    return d;
}

HolonomyResult direct_holonomy(const SubspaceSequence& seq, const Tol& tol, Closure closure) {
    const std::size_t m = seq.size();
    if (m < 2) throw input_error("direct_holonomy: m >= 2 required");

    HolonomyResult res;
    const auto links = link_indices(m, closure);
    ComplexMatrix d = ComplexMatrix::identity(seq.rank());
    for (std::size_t i = 0; i < links.size(); ++i) {
        const auto& [b, a] = links[i];
        res.links.push_back(classify_overlap(seq[b], seq[a], tol));
        if (res.links.back().tag == OverlapTag::Orthogonal) {
            res.kind = HolonomyKind::Undefined;
            res.vanishing_link = i;
            return res; // an orthogonal link annihilates the whole product
        }
        d = overlap_matrix(seq[b], seq[a]) * d;
    }
    return finish_from_product(d, seq.rank(), std::move(res.links), tol);
}

HolonomyResult iterative_holonomy(const SubspaceSequence& seq, const Tol& tol, Closure closure) {
    const std::size_t m = seq.size();
    if (m < 2) throw input_error("iterative_holonomy: m >= 2 required");

    HolonomyResult res;
    const auto links = link_indices(m, closure);
    ComplexMatrix prod = ComplexMatrix::identity(seq.rank());
    for (std::size_t i = 0; i < links.size(); ++i) {
        const auto& [b, a] = links[i];
        res.links.push_back(classify_overlap(seq[b], seq[a], tol));
        if (res.links.back().tag == OverlapTag::Orthogonal) {
            res.kind = HolonomyKind::Undefined;
            res.vanishing_link = i;
            return res;
        }
        prod = relative_phase(seq[b], seq[a], tol) * prod;
    }
    return finish_from_product(prod, seq.rank(), std::move(res.links), tol);
}

cplx pancharatnam_direct(const SubspaceSequence& seq, const Tol& tol, Closure closure) {
    if (seq.rank() != 1) throw input_error("pancharatnam_direct: K = 1 required");
    cplx chain = 1.0;
    for (const auto& [b, a] : link_indices(seq.size(), closure))
        chain *= overlap_matrix(seq[b], seq[a])(0, 0);
    return phase_factor(chain, tol);
}

PancharatnamChain pancharatnam_iterative(const SubspaceSequence& seq, const Tol& tol,
                                         Closure closure) {
    if (seq.rank() != 1) throw input_error("pancharatnam_iterative: K = 1 required");
    PancharatnamChain out;
    cplx running = 1.0;
    for (const auto& [b, a] : link_indices(seq.size(), closure)) {
        running *= phase_factor(overlap_matrix(seq[b], seq[a])(0, 0), tol);
        out.accumulated.push_back(std::arg(running));
    }
    out.phase = running;
    return out;
}

} // namespace holo
