#pragma once

#include "holo/holonomy.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace holo {

/// Spherical polar direction, angles in radians.
struct Direction {
    double theta; ///< [0, pi]
    double phi;   ///< [0, 2 pi)
};

/// Spin-j system (j >= 1/2, integer or half-odd) in the J_z eigenbasis
/// ordered mu = j, j-1, ..., -j. Carries the J_y and J_z generators and a
/// cached eigendecomposition of J_y so rotation operators come from one
/// eigensolve.
class SpinSystem {
public:
    explicit SpinSystem(int twice_j);

    double j() const { return 0.5 * twice_j_; }
    int twice_j() const { return twice_j_; }
    std::size_t dim() const { return static_cast<std::size_t>(twice_j_) + 1; }

    const ComplexMatrix& jy() const { return jy_; }
    const ComplexMatrix& jz() const { return jz_; }

    /// e^{-i phi J_z} e^{-i theta J_y}
    ComplexMatrix rotation(double theta, double phi) const;

private:
    int twice_j_;
    ComplexMatrix jy_, jz_;
    Eigh jy_eig_;
};

/// Coherent-state frame of the +-j ladder extremes rotated to direction n:
/// columns e^{-i phi J_z} e^{-i theta J_y} |+j> and ... |-j>. N = 2j+1, K = 2.
Frame rotation_frame(const SpinSystem& sys, Direction dir);

/// Closed-form overlap entries: R and S of the trigonometric expressions
/// raised to the 2j-th power.
std::pair<cplx, cplx> rs_closed_form(const SpinSystem& sys, Direction a, Direction b);

/// Assembled closed-form overlap matrix [[R, S], [(-1)^{2j} S*, R*]].
ComplexMatrix overlap_closed_form(const SpinSystem& sys, Direction a, Direction b);

/// | |R|^{1/j} + |S|^{1/j} - 1 |, identically ~0: the overlap matrix of two
/// coherent frames can never vanish.
double normalization_residual(const SpinSystem& sys, Direction a, Direction b);

/// For half-odd j the overlap matrix is a scalar times a unitary, forcing the
/// two holonomies to coincide; returns ||U_D - U_I||_F for the given closed
/// sequence of directions.
double half_odd_equivalence(const SpinSystem& sys, const std::vector<Direction>& dirs,
                            const Tol& tol = {});

/// Closed-form expressions of the four-point configuration, evaluated
/// verbatim (eta0 through a principal-branch arctan). eta0_arg is the
/// full-argument variant arg((r0 cos j chi0 + s0) - i r0 sin j chi0) negated,
/// which fixes both the branch and the sign; u_d_arg is u_d rebuilt with it.
/// u_d / u_i are absent when the corresponding q vanishes (the closed-form
/// holonomy is then undefined).
struct FourPointClosedForm {
    double chi0 = 0.0, chi1 = 0.0, eta0 = 0.0, eta0_arg = 0.0;
    double q_d = 0.0, q_i = 0.0;
    std::optional<ComplexMatrix> u_d, u_i, u_d_arg;
    ComplexMatrix link21, link32, link43, link14; ///< U_{2,1}, U_{3,2}, U_{4,3}, U_{1,4}
    bool s_gt_r_32 = false; ///< |S(3,2)| > |R(3,2)|
    bool s_gt_r_14 = false; ///< |S(1,4)| > |R(1,4)|
};

/// Four-point example at directions (theta0,phi0), (theta1,phi0),
/// (theta1,phi1), (theta0,phi1) with |theta1 - theta0| = pi/2 so the first
/// and third overlaps are degenerate. Reports the printed closed forms and
/// the generic-machinery holonomies side by side; the oracle values are the
/// authoritative ones.
struct FourPointResult {
    FourPointClosedForm closed;
    HolonomyResult oracle_direct, oracle_iterative;
    std::optional<double> dev_direct, dev_iterative; ///< closed vs oracle, Frobenius
    std::optional<double> dev_direct_arg;            ///< u_d_arg vs oracle
    double dev_link21 = 0.0, dev_link32 = 0.0, dev_link43 = 0.0, dev_link14 = 0.0;
    double oracle_d_vs_i = 0.0; ///< ||U_D - U_I||_F of the oracle pair, when both defined
};
FourPointResult four_point_example(const SpinSystem& sys, double theta0, double theta1,
                                   double phi0, double phi1, const Tol& tol = {});

} // namespace holo
