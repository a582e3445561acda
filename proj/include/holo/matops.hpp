#pragma once

#include "holo/complex_matrix.hpp"
#include "holo/tolerance.hpp"

#include <cstddef>
#include <vector>

namespace holo {

/// Thin singular value decomposition m = u * diag(sigma) * v†.
/// u is rows x p and v is cols x p with p = min(rows, cols); sigma is
/// nonincreasing. Columns of u belonging to singular values at the
/// numerical floor are zeroed rather than completed.
struct Svd {
    ComplexMatrix u;
    std::vector<double> sigma;
    ComplexMatrix v;
};

/// Hermitian eigendecomposition h = q * diag(values) * q†, values ascending.
struct Eigh {
    std::vector<double> values;
    ComplexMatrix vectors;
};

/// Left polar decomposition m = positive * isometry with
/// positive = sqrt(m m†) Hermitian PSD and isometry a partial isometry.
struct PolarParts {
    ComplexMatrix positive;
    ComplexMatrix isometry;
    std::size_t rank = 0;
    std::vector<double> singular_values; ///< nonincreasing
};

/// One-sided (Hestenes) Jacobi SVD. Accurate for the small dense matrices
/// this library deals in; throws numerical_error if sweeps fail to converge.
Svd svd_jacobi(const ComplexMatrix& m);

/// Cyclic two-sided Jacobi eigensolver for Hermitian matrices. The input is
/// Hermitized as (h + h†)/2 before iterating.
Eigh hermitian_eigen(const ComplexMatrix& h);

/// Left polar decomposition via SVD: with m = w s v†, positive = w s w† and
/// isometry = w ĩ v† keeping only directions with sigma > rank_rel*sigma_max.
/// The isometry is unitary iff rank equals the full dimension. m = 0 yields
/// rank 0 with zero isometry.
PolarParts polar_left(const ComplexMatrix& m, const Tol& tol = {});

/// Moore-Penrose pseudoinverse of a Hermitian PSD matrix: eigenvalues above
/// rank_rel*lambda_max are inverted in the spectral decomposition, the rest
/// are zeroed. Non-Hermitian input (beyond tolerance) is rejected.
ComplexMatrix mp_pseudoinverse(const ComplexMatrix& h, const Tol& tol = {});

/// General-matrix Moore-Penrose pseudoinverse via SVD (v s^-1 u† on the
/// significant spectrum). Used for cross-checks of the Hermitian route.
ComplexMatrix mp_pseudoinverse_general(const ComplexMatrix& m, const Tol& tol = {});

/// z/|z|. Throws undefined_error if |z| <= tol.abs_floor (orthogonal states
/// have no relative phase).
cplx phase_factor(cplx z, const Tol& tol = {});

/// ||m m† m - m||_F <= tol*||m||_F (vacuously true for m = 0).
bool is_partial_isometry(const ComplexMatrix& m, double tol = 1e-9);

/// ||m† m - 1||_F <= tol.
bool is_unitary(const ComplexMatrix& m, double tol = 1e-9);

/// ||h - h†||_F <= tol*max(||h||_F, 1).
bool is_hermitian(const ComplexMatrix& h, double tol = 1e-9);

/// q * diag(f(lambda)) * q† for Hermitian h = q diag(lambda) q†; `factor`
/// scales the exponent: exp_hermitian(h, c) = exp(c*h), exactly unitary for
/// purely imaginary c.
ComplexMatrix exp_hermitian(const ComplexMatrix& h, cplx factor);

/// Inverse square root of a Hermitian positive definite matrix.
ComplexMatrix inv_sqrt_hermitian(const ComplexMatrix& h);

} // namespace holo
