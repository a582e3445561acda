#include "holo/coherent.hpp"

#include "holo/errors.hpp"

#include <cmath>

namespace holo {

namespace {

constexpr double kPi = 3.14159265358979323846;

cplx ipow(cplx base, int n) {
    cplx r = 1.0;
    for (int i = 0; i < n; ++i) r *= base;
    return r;
}

ComplexMatrix phase_column_pair(cplx prefactor, double eta) {
    // prefactor * (1/2) [[e^{-i eta}, e^{-i eta}], [e^{i eta}, e^{i eta}]]
    const cplx lo = 0.5 * prefactor * std::polar(1.0, -eta);
    const cplx hi = 0.5 * prefactor * std::polar(1.0, eta);
    return ComplexMatrix{{lo, lo}, {hi, hi}};
}

} // namespace

SpinSystem::SpinSystem(int twice_j) : twice_j_(twice_j) {
    if (twice_j_ < 1) throw input_error("SpinSystem: j >= 1/2 required");
    const std::size_t n = dim();
    const double j = 0.5 * twice_j_;
    jz_ = ComplexMatrix(n, n);
    jy_ = ComplexMatrix(n, n);
    for (std::size_t i = 0; i < n; ++i) jz_(i, i) = j - static_cast<double>(i);
    for (std::size_t i = 1; i < n; ++i) {
        // <mu+1|J_+|mu> = sqrt((j-mu)(j+mu+1)) with mu = j - i
        const double c = std::sqrt(static_cast<double>(i) * (twice_j_ - i + 1.0));
        jy_(i - 1, i) = cplx(0.0, -0.5) * c;
        jy_(i, i - 1) = cplx(0.0, 0.5) * c;
    }
    jy_eig_ = hermitian_eigen(jy_);
}

ComplexMatrix SpinSystem::rotation(double theta, double phi) const {
    const std::size_t n = dim();
    // e^{-i theta J_y} from the cached eigensystem
    ComplexMatrix qs = jy_eig_.vectors;
    for (std::size_t col = 0; col < n; ++col) {
        const cplx f = std::polar(1.0, -theta * jy_eig_.values[col]);
        for (std::size_t row = 0; row < n; ++row) qs(row, col) *= f;
    }
    ComplexMatrix r = times_adjoint(qs, jy_eig_.vectors);
    // left-multiply by the diagonal e^{-i phi J_z}
    const double j = 0.5 * twice_j_;
    for (std::size_t row = 0; row < n; ++row) {
        const cplx f = std::polar(1.0, -phi * (j - static_cast<double>(row)));
        for (std::size_t col = 0; col < n; ++col) r(row, col) *= f;
    }
    return r;
}

Frame rotation_frame(const SpinSystem& sys, Direction dir) {
    const ComplexMatrix r = sys.rotation(dir.theta, dir.phi);
    const std::size_t n = sys.dim();
    ComplexMatrix f(n, 2);
    for (std::size_t i = 0; i < n; ++i) {
        f(i, 0) = r(i, 0);     // |+j; n>
        f(i, 1) = r(i, n - 1); // |-j; n>
    }
    return Frame(std::move(f));
}

std::pair<cplx, cplx> rs_closed_form(const SpinSystem& sys, Direction a, Direction b) {
    const double dt = 0.5 * (a.theta - b.theta);
    const double st = 0.5 * (a.theta + b.theta);
    const double dp = 0.5 * (a.phi - b.phi);
    const cplx r_base(std::cos(dt) * std::cos(dp), std::cos(st) * std::sin(dp));
    const cplx s_base(std::sin(dt) * std::cos(dp), -std::sin(st) * std::sin(dp));
    return {ipow(r_base, sys.twice_j()), ipow(s_base, sys.twice_j())};
}

ComplexMatrix overlap_closed_form(const SpinSystem& sys, Direction a, Direction b) {
    const auto [r, s] = rs_closed_form(sys, a, b);
    const double sign = sys.twice_j() % 2 == 0 ? 1.0 : -1.0;
    return ComplexMatrix{{r, s}, {sign * std::conj(s), std::conj(r)}};
}

double normalization_residual(const SpinSystem& sys, Direction a, Direction b) {
    const auto [r, s] = rs_closed_form(sys, a, b);
    const double inv_j = 1.0 / sys.j();
    return std::abs(std::pow(std::abs(r), inv_j) + std::pow(std::abs(s), inv_j) - 1.0);
}

double half_odd_equivalence(const SpinSystem& sys, const std::vector<Direction>& dirs,
                            const Tol& tol) {
    if (sys.twice_j() % 2 == 0)
        throw input_error("half_odd_equivalence: j must be half-odd");
    std::vector<Frame> frames;
    frames.reserve(dirs.size());
    for (const Direction& d : dirs) frames.push_back(rotation_frame(sys, d));
    const SubspaceSequence seq(std::move(frames));
    const HolonomyResult ud = direct_holonomy(seq, tol);
    const HolonomyResult ui = iterative_holonomy(seq, tol);
    if (!ud.matrix || !ui.matrix)
        throw undefined_error("half_odd_equivalence: holonomy undefined");
    return frobenius_distance(*ud.matrix, *ui.matrix);
}

FourPointResult four_point_example(const SpinSystem& sys, double theta0, double theta1,
                                   double phi0, double phi1, const Tol& tol) {
    if (sys.twice_j() % 2 != 0)
        throw input_error("four_point_example: integer j required");
    if (std::abs(std::abs(theta1 - theta0) - 0.5 * kPi) > 1e-9)
        throw input_error("four_point_example: |theta1 - theta0| = pi/2 required");

    const int ij = sys.twice_j() / 2;
    const double j = sys.j();
    const double dphi = phi1 - phi0;
    const double half = 0.5 * dphi;
    const double sign_j = ij % 2 == 0 ? 1.0 : -1.0; // (-1)^j

    FourPointResult res;
    FourPointClosedForm& cf = res.closed;
    cf.chi0 = 2.0 * std::atan(std::cos(theta0) * std::tan(half));
    cf.chi1 = 2.0 * std::atan(std::cos(theta1) * std::tan(half));

    const double u0 = std::pow(std::sin(theta0) * std::sin(half), 2.0);
    const double u1 = std::pow(std::sin(theta1) * std::sin(half), 2.0);
    const double r0 = std::pow(1.0 - u0, j);
    const double r1 = std::pow(1.0 - u1, j);
    const double s0 = sign_j * std::pow(u0, j);
    const double s1 = sign_j * std::pow(u1, j);

    const double num = r0 * std::sin(j * cf.chi0);
    const double den = r0 * std::cos(j * cf.chi0) + s0;
    cf.eta0 = -std::atan(num / den);
    cf.eta0_arg = std::atan2(num, den);
    cf.q_d = r1 * std::cos(j * cf.chi1) + s1;
    cf.q_i = std::cos(j * cf.chi1);

    if (std::abs(cf.q_d) > tol.abs_floor) {
        cf.u_d = phase_column_pair(cf.q_d / std::abs(cf.q_d), cf.eta0);
        cf.u_d_arg = phase_column_pair(cf.q_d / std::abs(cf.q_d), cf.eta0_arg);
    }
    if (std::abs(cf.q_i) > tol.abs_floor)
        cf.u_i = phase_column_pair(cf.q_i / std::abs(cf.q_i), j * cf.chi0);

    cf.link21 = ComplexMatrix{{0.5, 0.5}, {0.5, 0.5}};
    cf.link43 = cf.link21;
    cf.link32 = ComplexMatrix::diagonal({std::polar(1.0, j * cf.chi1),
                                         std::polar(1.0, -j * cf.chi1)});
    cf.link14 = ComplexMatrix::diagonal({std::polar(1.0, -j * cf.chi0),
                                         std::polar(1.0, j * cf.chi0)});

    const Direction d1{theta0, phi0}, d2{theta1, phi0}, d3{theta1, phi1}, d4{theta0, phi1};
    const auto [r32, s32] = rs_closed_form(sys, d3, d2);
    const auto [r14, s14] = rs_closed_form(sys, d1, d4);
    cf.s_gt_r_32 = std::abs(s32) > std::abs(r32);
    cf.s_gt_r_14 = std::abs(s14) > std::abs(r14);

    const Frame f1 = rotation_frame(sys, d1);
    const Frame f2 = rotation_frame(sys, d2);
    const Frame f3 = rotation_frame(sys, d3);
    const Frame f4 = rotation_frame(sys, d4);

    res.dev_link21 = frobenius_distance(cf.link21, relative_phase(f2, f1, tol));
    res.dev_link32 = frobenius_distance(cf.link32, relative_phase(f3, f2, tol));
    res.dev_link43 = frobenius_distance(cf.link43, relative_phase(f4, f3, tol));
    res.dev_link14 = frobenius_distance(cf.link14, relative_phase(f1, f4, tol));

    const SubspaceSequence seq({f1, f2, f3, f4});
    res.oracle_direct = direct_holonomy(seq, tol);
    res.oracle_iterative = iterative_holonomy(seq, tol);

    if (cf.u_d && res.oracle_direct.matrix)
        res.dev_direct = frobenius_distance(*cf.u_d, *res.oracle_direct.matrix);
    if (cf.u_d_arg && res.oracle_direct.matrix)
        res.dev_direct_arg = frobenius_distance(*cf.u_d_arg, *res.oracle_direct.matrix);
    if (cf.u_i && res.oracle_iterative.matrix)
        res.dev_iterative = frobenius_distance(*cf.u_i, *res.oracle_iterative.matrix);
    if (res.oracle_direct.matrix && res.oracle_iterative.matrix)
        res.oracle_d_vs_i =
            frobenius_distance(*res.oracle_direct.matrix, *res.oracle_iterative.matrix);
    return res;
}

} // namespace holo
