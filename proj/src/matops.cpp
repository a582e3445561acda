#include "holo/matops.hpp"

#include "holo/errors.hpp"
#include "holo/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace holo {

namespace {

constexpr double kJacobiEps = 1e-14;
constexpr int kMaxSweeps = 64;

// Unitary 2x2 J = [[j11, j12], [j21, j22]] with J† G J diagonal for the
// Hermitian block G = [[a, c], [conj(c), b]] (a, b real). Built by absorbing
// the phase of c and applying the classic real Jacobi rotation.
struct Rot {
    cplx j11, j12, j21, j22;
};

Rot make_rotation(double a, double b, cplx c) {
    const double ac = std::abs(c);
    const cplx emiphi = std::conj(c) / ac; // e^{-i arg c}
    const double zeta = (b - a) / (2.0 * ac);
    const double t = (zeta >= 0.0 ? -1.0 : 1.0) / (std::abs(zeta) + std::sqrt(1.0 + zeta * zeta));
    const double cs = 1.0 / std::sqrt(1.0 + t * t);
    const double sn = t * cs;
    return {cplx(cs, 0.0), cplx(-sn, 0.0), sn * emiphi, cs * emiphi};
}

} // namespace

Svd svd_jacobi(const ComplexMatrix& m) {
    if (m.rows() == 0 || m.cols() == 0) return {};
    if (!m.is_finite()) throw input_error("svd: non-finite entries");
    if (m.rows() < m.cols()) {
        Svd s = svd_jacobi(m.adjoint());
        return {std::move(s.v), std::move(s.sigma), std::move(s.u)};
    }
    const std::size_t r = m.rows(), n = m.cols();

    // column-contiguous working copies: w carries m, v accumulates rotations
    std::vector<cplx> w(r * n), v(n * n, cplx{});
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < n; ++j) w[j * r + i] = m(i, j);
    for (std::size_t j = 0; j < n; ++j) v[j * n + j] = 1.0;

    bool converged = (n == 1);
    for (int sweep = 0; sweep < kMaxSweeps && !converged; ++sweep) {
        converged = true;
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                cplx* wp = w.data() + p * r;
                cplx* wq = w.data() + q * r;
                const double a = kernels::nrm2sq(r, wp);
                const double b = kernels::nrm2sq(r, wq);
                const cplx c = kernels::cdotc(r, wp, wq);
                if (a == 0.0 || b == 0.0) continue;
                if (std::abs(c) <= kJacobiEps * std::sqrt(a * b)) continue;
                converged = false;
                const Rot J = make_rotation(a, b, c);
                kernels::rot2(r, wp, wq, J.j11, J.j21, J.j12, J.j22);
                kernels::rot2(n, v.data() + p * n, v.data() + q * n, J.j11, J.j21, J.j12, J.j22);
            }
        }
    }
    if (!converged) throw numerical_error("svd: Jacobi sweeps did not converge");

    std::vector<double> sigma(n);
    for (std::size_t j = 0; j < n; ++j)
        sigma[j] = std::sqrt(kernels::nrm2sq(r, w.data() + j * r));

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t x, std::size_t y) { return sigma[x] > sigma[y]; });

    Svd out;
    out.u = ComplexMatrix(r, n);
    out.v = ComplexMatrix(n, n);
    out.sigma.resize(n);
    for (std::size_t j = 0; j < n; ++j) {
        const std::size_t src = order[j];
        const double s = sigma[src];
        out.sigma[j] = s;
        if (s > 1e-290) {
            const double inv = 1.0 / s;
            for (std::size_t i = 0; i < r; ++i) out.u(i, j) = w[src * r + i] * inv;
        }
        for (std::size_t i = 0; i < n; ++i) out.v(i, j) = v[src * n + i];
    }
    return out;
}

Eigh hermitian_eigen(const ComplexMatrix& h) {
    if (h.rows() != h.cols()) throw input_error("hermitian_eigen: square matrix required");
    if (!h.is_finite()) throw input_error("hermitian_eigen: non-finite entries");
    const std::size_t n = h.rows();

    ComplexMatrix a(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            a(i, j) = 0.5 * (h(i, j) + std::conj(h(j, i)));
    ComplexMatrix q = ComplexMatrix::identity(n);

    const double fro = a.frobenius_norm();
    if (fro > 0.0 && n > 1) {
        const double stop = 1e-15 * fro;
        bool converged = false;
        for (int sweep = 0; sweep < kMaxSweeps && !converged; ++sweep) {
            double off = 0.0;
            for (std::size_t p = 0; p + 1 < n; ++p) {
                for (std::size_t qq = p + 1; qq < n; ++qq) {
                    const cplx c = a(p, qq);
                    off = std::max(off, std::abs(c));
                    if (std::abs(c) <= stop) continue;
                    const Rot J = make_rotation(a(p, p).real(), a(qq, qq).real(), c);
                    // rows: [row_p; row_q] <- J† [row_p; row_q]
                    kernels::rot2(n, a.row(p), a.row(qq), std::conj(J.j11), std::conj(J.j21),
                                  std::conj(J.j12), std::conj(J.j22));
                    // columns of a and of the accumulated q: [col_p col_q] <- [col_p col_q] J
                    for (std::size_t i = 0; i < n; ++i) {
                        const cplx x = a(i, p), y = a(i, qq);
                        a(i, p) = J.j11 * x + J.j21 * y;
                        a(i, qq) = J.j12 * x + J.j22 * y;
                        const cplx qx = q(i, p), qy = q(i, qq);
                        q(i, p) = J.j11 * qx + J.j21 * qy;
                        q(i, qq) = J.j12 * qx + J.j22 * qy;
                    }
                    a(p, qq) = 0.0;
                    a(qq, p) = 0.0;
                    a(p, p) = a(p, p).real();
                    a(qq, qq) = a(qq, qq).real();
                }
            }
            converged = off <= stop;
        }
        if (!converged) throw numerical_error("hermitian_eigen: Jacobi sweeps did not converge");
    }

    std::vector<double> values(n);
    for (std::size_t i = 0; i < n; ++i) values[i] = a(i, i).real();
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t x, std::size_t y) { return values[x] < values[y]; });

    Eigh out;
    out.values.resize(n);
    out.vectors = ComplexMatrix(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        out.values[j] = values[order[j]];
        for (std::size_t i = 0; i < n; ++i) out.vectors(i, j) = q(i, order[j]);
    }
    return out;
}

PolarParts polar_left(const ComplexMatrix& m, const Tol& tol) {
    if (!m.is_finite()) throw input_error("polar_left: non-finite entries");
    Svd s = svd_jacobi(m);
    const std::size_t p = s.sigma.size();

    PolarParts parts;
    parts.singular_values = s.sigma;
    const double smax = p > 0 ? s.sigma[0] : 0.0;
    if (smax > tol.abs_floor) {
        const double cut = tol.rank_rel * smax;
        while (parts.rank < p && s.sigma[parts.rank] > cut) ++parts.rank;
    }

    // positive = u diag(sigma) u†, over the whole spectrum
    ComplexMatrix us = s.u;
    for (std::size_t j = 0; j < p; ++j)
        for (std::size_t i = 0; i < us.rows(); ++i) us(i, j) *= s.sigma[j];
    parts.positive = times_adjoint(us, s.u);

    // isometry = u ĩ v†, support directions only
    ComplexMatrix ur = s.u;
    for (std::size_t j = parts.rank; j < p; ++j)
        for (std::size_t i = 0; i < ur.rows(); ++i) ur(i, j) = 0.0;
    parts.isometry = times_adjoint(ur, s.v);
    return parts;
}

ComplexMatrix mp_pseudoinverse(const ComplexMatrix& h, const Tol& tol) {
    if (h.rows() != h.cols()) throw input_error("mp_pseudoinverse: square matrix required");
    if (!is_hermitian(h, 1e-8)) throw input_error("mp_pseudoinverse: input not Hermitian");
    Eigh e = hermitian_eigen(h);
    const std::size_t n = h.rows();
    const double lmax = e.values.empty() ? 0.0 : e.values.back();
    if (e.values.front() < -1e-8 * std::max(lmax, 1.0))
        throw input_error("mp_pseudoinverse: input not positive semidefinite");
    if (lmax <= tol.abs_floor) return ComplexMatrix::zero(n, n);

    ComplexMatrix qs = e.vectors;
    const double cut = tol.rank_rel * lmax;
    for (std::size_t j = 0; j < n; ++j) {
        const double inv = e.values[j] > cut ? 1.0 / e.values[j] : 0.0;
        for (std::size_t i = 0; i < n; ++i) qs(i, j) *= inv;
    }
    return times_adjoint(qs, e.vectors);
}

ComplexMatrix mp_pseudoinverse_general(const ComplexMatrix& m, const Tol& tol) {
    Svd s = svd_jacobi(m);
    const std::size_t p = s.sigma.size();
    const double smax = p > 0 ? s.sigma[0] : 0.0;
    ComplexMatrix vs = s.v;
    const double cut = std::max(tol.rank_rel * smax, tol.abs_floor);
    for (std::size_t j = 0; j < p; ++j) {
        const double inv = s.sigma[j] > cut ? 1.0 / s.sigma[j] : 0.0;
        for (std::size_t i = 0; i < vs.rows(); ++i) vs(i, j) *= inv;
    }
    return times_adjoint(vs, s.u);
}

cplx phase_factor(cplx z, const Tol& tol) {
    const double mod = std::abs(z);
    if (mod <= tol.abs_floor)
        throw undefined_error("phase_factor: modulus below floor, phase undefined");
    return z / mod;
}

bool is_partial_isometry(const ComplexMatrix& m, double tol) {
    if (m.rows() != m.cols()) throw input_error("is_partial_isometry: square matrix required");
    const ComplexMatrix mmm = times_adjoint(m, m) * m;
    return frobenius_distance(mmm, m) <= tol * m.frobenius_norm();
}

bool is_unitary(const ComplexMatrix& m, double tol) {
    if (m.rows() != m.cols()) throw input_error("is_unitary: square matrix required");
    const ComplexMatrix g = adjoint_times(m, m);
    return frobenius_distance(g, ComplexMatrix::identity(m.rows())) <= tol;
}

bool is_hermitian(const ComplexMatrix& h, double tol) {
    if (h.rows() != h.cols()) return false;
    return frobenius_distance(h, h.adjoint()) <= tol * std::max(h.frobenius_norm(), 1.0);
}

ComplexMatrix exp_hermitian(const ComplexMatrix& h, cplx factor) {
    Eigh e = hermitian_eigen(h);
    ComplexMatrix qs = e.vectors;
    for (std::size_t j = 0; j < qs.cols(); ++j) {
        const cplx f = std::exp(factor * e.values[j]);
        for (std::size_t i = 0; i < qs.rows(); ++i) qs(i, j) *= f;
    }
    return times_adjoint(qs, e.vectors);
}

ComplexMatrix inv_sqrt_hermitian(const ComplexMatrix& h) {
    Eigh e = hermitian_eigen(h);
    if (e.values.front() <= 0.0)
        throw input_error("inv_sqrt_hermitian: matrix not positive definite");
    ComplexMatrix qs = e.vectors;
    for (std::size_t j = 0; j < qs.cols(); ++j) {
        const double f = 1.0 / std::sqrt(e.values[j]);
        for (std::size_t i = 0; i < qs.rows(); ++i) qs(i, j) *= f;
    }
    return times_adjoint(qs, e.vectors);
}

} // namespace holo
