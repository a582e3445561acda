#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "holo/continuum.hpp"
#include "holo/errors.hpp"
#include "oracles.hpp"

#include <cmath>

using namespace holo;

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kTwoPi = 2.0 * kPi;

SmoothFramePath constant_path() {
    const ComplexMatrix f = random_frame(4, 2, 77).matrix();
    return SmoothFramePath("constant", 4, 2, [f](double) { return f; });
}

} // namespace

TEST_CASE("wz connection") {
    // constant path: zero connection through finite differences
    CHECK(wz_connection(constant_path(), 0.37).max_abs() <= 1e-10);

    // K = 1 analytic value: A(s) = -i chi sin^2(alpha) for the twisted state
    const double alpha = 0.7, chi = kTwoPi;
    const SmoothFramePath small = builtin_path("qubit-small-circle");
    for (double s : {0.0, 0.25, 0.8, 1.0}) {
        const ComplexMatrix a = wz_connection(small, s);
        CHECK(std::abs(a(0, 0) - cplx(0.0, -chi * std::sin(alpha) * std::sin(alpha))) <= 1e-12);
    }

    // anti-Hermiticity at FD accuracy on the coherent paths
    for (const char* name : {"coherent-j1-loop", "coherent-j1-arc"}) {
        const SmoothFramePath path = builtin_path(name);
        CHECK_FALSE(path.has_analytic_derivative());
        for (double s : {0.1, 0.5, 0.9}) {
            const ComplexMatrix a = wz_connection(path, s);
            CHECK(frobenius_distance(a, a.adjoint() * cplx(-1.0, 0.0)) <= 1e-8);
        }
    }
    // and at analytic accuracy elsewhere
    for (const char* name : {"qubit-great-circle", "qubit-open-arc", "partial-endpoint"}) {
        const SmoothFramePath path = builtin_path(name);
        for (double s : {0.2, 0.6}) {
            const ComplexMatrix a = wz_connection(path, s);
            CHECK(frobenius_distance(a, a.adjoint() * cplx(-1.0, 0.0)) <= 1e-12);
        }
    }
}

TEST_CASE("path ordered exponential") {
    // constant path: identity, trivial endpoint phase
    const PathOrderedExp pc = path_ordered_exp(constant_path(), 64);
    CHECK(frobenius_distance(pc.pexp, ComplexMatrix::identity(2)) <= 1e-12);
    CHECK(frobenius_distance(pc.endpoint_phase, ComplexMatrix::identity(2)) <= 1e-12);

    // K=1 closed circle: scalar e^{-i chi sin^2 alpha}, unitary result
    const double alpha = 0.7;
    const PathOrderedExp ps = path_ordered_exp(builtin_path("qubit-small-circle"), 512);
    const cplx want = std::polar(1.0, -kTwoPi * std::sin(alpha) * std::sin(alpha));
    CHECK(std::abs(ps.pexp(0, 0) - want) <= 1e-10);
    CHECK(is_unitary(ps.pexp, 1e-9));
    CHECK(std::abs(ps.endpoint_phase(0, 0) - cplx(1.0, 0.0)) <= 1e-12);

    // second-order self convergence: halving the step cuts the error ~4x
    const SmoothFramePath arc = builtin_path("coherent-j1-arc");
    const ComplexMatrix ref = path_ordered_exp(arc, 8192).pexp;
    const double e1 = frobenius_distance(path_ordered_exp(arc, 128).pexp, ref);
    const double e2 = frobenius_distance(path_ordered_exp(arc, 256).pexp, ref);
    CHECK(e2 / e1 >= 0.15);
    CHECK(e2 / e1 <= 0.40);
    CHECK(is_unitary(path_ordered_exp(arc, 128).pexp, 1e-9));

    CHECK_THROWS_AS(path_ordered_exp(arc, 1), input_error);
}

TEST_CASE("discretize") {
    const SmoothFramePath arc = builtin_path("qubit-open-arc");
    const SubspaceSequence ends = discretize(arc, 2);
    CHECK(frobenius_distance(ends[0].matrix(), arc.frame_matrix(0.0)) <= 1e-12);
    CHECK(frobenius_distance(ends[1].matrix(), arc.frame_matrix(1.0)) <= 1e-12);
    CHECK_THROWS_AS(discretize(arc, 1), input_error);

    for (const std::string& name : builtin_path_names()) {
        const SmoothFramePath path = builtin_path(name);
        const SubspaceSequence seq = discretize(path, 24);
        for (std::size_t a = 0; a < seq.size(); ++a)
            CHECK(seq[a].orthonormality_defect() <= 1e-10);
        // adjacent overlaps are Full once the sampling is fine enough
        for (std::size_t a = 0; a + 1 < seq.size(); ++a)
            CHECK(classify_overlap(seq[a + 1], seq[a]).tag == OverlapTag::Full);
    }
}

TEST_CASE("convergence study basics") {
    // constant path: everything at machine floor
    const ConvergenceTable ct = convergence_study(constant_path(), {4, 8}, 256);
    for (const auto& row : ct.rows) {
        REQUIRE(row.dev_direct.has_value());
        REQUIRE(row.dev_iterative.has_value());
        CHECK(*row.dev_direct <= 1e-12);
        CHECK(*row.dev_iterative <= 1e-12);
    }

    // textured paths: monotone decrease, fast pass over a short ladder
    for (const char* name : {"qubit-small-circle", "coherent-j1-arc"}) {
        const ConvergenceTable t =
            convergence_study(builtin_path(name), {16, 32, 64, 128}, 2048);
        for (std::size_t i = 1; i < t.rows.size(); ++i) {
            CHECK(*t.rows[i].dev_direct < *t.rows[i - 1].dev_direct);
            CHECK(*t.rows[i].dev_iterative < *t.rows[i - 1].dev_iterative);
        }
    }

    // closed paths: endpoint phase is the identity, limit is the bare pexp
    for (const char* name : {"qubit-small-circle", "coherent-j1-loop"}) {
        const ConvergenceTable t = convergence_study(builtin_path(name), {64}, 1024);
        CHECK(frobenius_distance(t.endpoint_phase,
                                 ComplexMatrix::identity(t.endpoint_phase.rows())) <= 1e-10);
    }
}

TEST_CASE("partial endpoint path converges to the partial-isometry limit") {
    const SmoothFramePath path = builtin_path("partial-endpoint");
    const Frame f0 = path.frame(0.0), f1 = path.frame(1.0);
    CHECK(classify_overlap(f0, f1).tag == OverlapTag::Partial);

    const ConvergenceTable t = convergence_study(path, {16, 64, 256}, 2048);
    CHECK(is_partial_isometry(t.reference, 1e-10));
    CHECK_FALSE(is_unitary(t.reference, 1e-6));
    for (const auto& row : t.rows) {
        REQUIRE(row.dev_direct.has_value());
        REQUIRE(row.dev_iterative.has_value());
        CHECK(*row.dev_direct <= 1e-10);
        CHECK(*row.dev_iterative <= 1e-10);
    }
}

TEST_CASE("gauge covariance of the open-path holonomy") {
    // smooth unitary gauge field W(s) applied along the path maps
    // U_{0,1} Pexp to W(0)† (U_{0,1} Pexp) W(0)
    for (const char* name : {"qubit-open-arc", "coherent-j1-arc"}) {
        const SmoothFramePath base = builtin_path(name);
        const std::size_t k = base.rank();
        ComplexMatrix hseed = oracle::rand_matrix(k, k, 1234);
        const ComplexMatrix h = hseed + hseed.adjoint();
        auto w_field = [h](double s) { return exp_hermitian(h, cplx(0.0, -(0.4 + 0.5 * s))); };

        const SmoothFramePath gauged(
            "gauged", base.ambient_dim(), k,
            [&base, w_field](double s) { return base.frame_matrix(s) * w_field(s); });

        const PathOrderedExp p0 = path_ordered_exp(base, 2048);
        const PathOrderedExp p1 = path_ordered_exp(gauged, 2048);
        const ComplexMatrix w0 = w_field(0.0);
        const ComplexMatrix lhs = p1.endpoint_phase * p1.pexp;
        const ComplexMatrix rhs = adjoint_times(w0, (p0.endpoint_phase * p0.pexp) * w0);
        CHECK(frobenius_distance(lhs, rhs) <= 1e-7);
    }
}
