#include "holo/continuum.hpp"

#include "holo/coherent.hpp"
#include "holo/errors.hpp"

#include <cmath>
#include <memory>
#include <utility>

namespace holo {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kTwoPi = 6.28318530717958647693;

ComplexMatrix qubit_state(cplx a0, cplx a1) {
    ComplexMatrix f(2, 1);
    f(0, 0) = a0;
    f(1, 0) = a1;
    return f;
}

} // namespace

SmoothFramePath::SmoothFramePath(std::string name, std::size_t n, std::size_t k, FrameFn frame,
                                 std::optional<FrameFn> derivative, double fd_step)
    : name_(std::move(name)), n_(n), k_(k), frame_(std::move(frame)),
      derivative_(std::move(derivative)), fd_step_(fd_step) {
    if (!frame_) throw input_error("SmoothFramePath: frame function required");
    if (fd_step_ <= 0.0) throw input_error("SmoothFramePath: fd_step must be positive");
}

Frame SmoothFramePath::frame(double s) const { return Frame(frame_(s)); }

ComplexMatrix SmoothFramePath::derivative(double s) const {
    if (derivative_) return (*derivative_)(s);
    const double h = fd_step_;
    ComplexMatrix d = frame_(s + h);
    d -= frame_(s - h);
    d *= cplx(0.5 / h, 0.0);
    return d;
}

SmoothFramePath builtin_path(const std::string& name) {
    if (name == "qubit-great-circle") {
        auto fr = [](double s) { return qubit_state(std::cos(kPi * s), std::sin(kPi * s)); };
        auto dr = [](double s) {
            return qubit_state(-kPi * std::sin(kPi * s), kPi * std::cos(kPi * s));
        };
        return {name, 2, 1, fr, dr};
    }
    if (name == "qubit-small-circle") {
        const double alpha = 0.7;
        auto fr = [alpha](double s) {
            return qubit_state(std::cos(alpha), std::polar(std::sin(alpha), kTwoPi * s));
        };
        auto dr = [alpha](double s) {
            return qubit_state(0.0, cplx(0.0, kTwoPi) * std::polar(std::sin(alpha), kTwoPi * s));
        };
        return {name, 2, 1, fr, dr};
    }
    if (name == "qubit-open-arc") {
        auto beta = [](double s) { return 0.6 + 0.5 * s; };
        auto chi = [](double s) { return 0.8 * s + 0.3 * s * s; };
        auto fr = [=](double s) {
            return qubit_state(std::cos(beta(s)), std::polar(std::sin(beta(s)), chi(s)));
        };
        auto dr = [=](double s) {
            const double b = beta(s), c = chi(s);
            const double db = 0.5, dc = 0.8 + 0.6 * s;
            return qubit_state(-db * std::sin(b),
                               std::polar(1.0, c) * (db * std::cos(b) + cplx(0.0, dc) * std::sin(b)));
        };
        return {name, 2, 1, fr, dr};
    }
    if (name == "coherent-j1-loop") {
        auto sys = std::make_shared<SpinSystem>(2);
        auto fr = [sys](double s) {
            const double theta = kPi / 3.0 + 0.2 * std::sin(kTwoPi * s);
            const double phi = kTwoPi * s;
            return rotation_frame(*sys, {theta, phi}).matrix();
        };
        return {name, 3, 2, fr};
    }
    if (name == "coherent-j1-arc") {
        auto sys = std::make_shared<SpinSystem>(2);
        auto fr = [sys](double s) {
            return rotation_frame(*sys, {0.5 + 0.6 * s, 1.5 * s}).matrix();
        };
        return {name, 3, 2, fr};
    }
    if (name == "partial-endpoint") {
        auto fr = [](double s) {
            ComplexMatrix f(4, 2);
            f(0, 0) = std::polar(1.0, s);
            f(1, 1) = std::cos(0.5 * kPi * s);
            f(2, 1) = std::sin(0.5 * kPi * s);
            return f;
        };
        auto dr = [](double s) {
            ComplexMatrix d(4, 2);
            d(0, 0) = cplx(0.0, 1.0) * std::polar(1.0, s);
            d(1, 1) = -0.5 * kPi * std::sin(0.5 * kPi * s);
            d(2, 1) = 0.5 * kPi * std::cos(0.5 * kPi * s);
            return d;
        };
        return {name, 4, 2, fr, dr};
    }
    throw input_error("builtin_path: unknown path '" + name + "'");
}

std::vector<std::string> builtin_path_names() {
    return {"qubit-great-circle", "qubit-small-circle", "qubit-open-arc",
            "coherent-j1-loop",   "coherent-j1-arc",    "partial-endpoint"};
}

ComplexMatrix wz_connection(const SmoothFramePath& path, double s) {
    return adjoint_times(path.derivative(s), path.frame_matrix(s));
}

PathOrderedExp path_ordered_exp(const SmoothFramePath& path, std::size_t steps, const Tol& tol) {
    if (steps < 2) throw input_error("path_ordered_exp: steps >= 2 required");
    const double ds = 1.0 / static_cast<double>(steps);
    ComplexMatrix pexp = ComplexMatrix::identity(path.rank());
    for (std::size_t i = 0; i < steps; ++i) {
        const double s = (static_cast<double>(i) + 0.5) * ds;
        const ComplexMatrix a = wz_connection(path, s);
        // Hermitize iA and exponentiate; exact unitarity per step
        const ComplexMatrix h = (a - a.adjoint()) * cplx(0.0, 0.5);
        pexp = exp_hermitian(h, cplx(0.0, -ds)) * pexp;
    }
    const ComplexMatrix endpoint =
        relative_phase(path.frame(0.0), path.frame(1.0), tol);
    return {std::move(pexp), endpoint};
}

SubspaceSequence discretize(const SmoothFramePath& path, std::size_t m) {
    if (m < 2) throw input_error("discretize: m >= 2 required");
    std::vector<Frame> frames;
    frames.reserve(m);
    for (std::size_t i = 0; i < m; ++i)
        frames.push_back(path.frame(static_cast<double>(i) / static_cast<double>(m - 1)));
    return SubspaceSequence(std::move(frames));
}

ConvergenceTable convergence_study(const SmoothFramePath& path,
                                   const std::vector<std::size_t>& m_values,
                                   std::size_t reference_steps, const Tol& tol) {
    // Richardson extrapolation of the second-order integrator, re-unitarized
    const PathOrderedExp coarse = path_ordered_exp(path, reference_steps, tol);
    const PathOrderedExp fine = path_ordered_exp(path, 2 * reference_steps, tol);
    ComplexMatrix extrap = fine.pexp + (fine.pexp - coarse.pexp) * cplx(1.0 / 3.0, 0.0);
    extrap = polar_left(extrap, tol).isometry;

    ConvergenceTable table;
    table.endpoint_phase = fine.endpoint_phase;
    table.reference = fine.endpoint_phase * extrap;
    for (std::size_t m : m_values) {
        ConvergenceRow row;
        row.m = m;
        const SubspaceSequence seq = discretize(path, m);
        const HolonomyResult ud = direct_holonomy(seq, tol);
        const HolonomyResult ui = iterative_holonomy(seq, tol);
        if (ud.matrix) row.dev_direct = frobenius_distance(*ud.matrix, table.reference);
        if (ui.matrix) row.dev_iterative = frobenius_distance(*ui.matrix, table.reference);
        table.rows.push_back(row);
    }
    return table;
}

} // namespace holo
