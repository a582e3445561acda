#pragma once

#include "holo/holonomy.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace holo {

/// Smooth family s in [0,1] -> frame, with analytic derivative where the
/// builder supplies one and central finite differences (error O(h^2), default
/// h = 1e-6) otherwise. The frame function must be evaluable slightly outside
/// [0,1] so differences work at the endpoints.
class SmoothFramePath {
public:
    using FrameFn = std::function<ComplexMatrix(double)>;

    SmoothFramePath(std::string name, std::size_t n, std::size_t k, FrameFn frame,
                    std::optional<FrameFn> derivative = std::nullopt, double fd_step = 1e-6);

    const std::string& name() const { return name_; }
    std::size_t ambient_dim() const { return n_; }
    std::size_t rank() const { return k_; }
    bool has_analytic_derivative() const { return derivative_.has_value(); }

    ComplexMatrix frame_matrix(double s) const { return frame_(s); }
    Frame frame(double s) const;
    ComplexMatrix derivative(double s) const; ///< dF/ds, analytic or O(h^2) FD

private:
    std::string name_;
    std::size_t n_, k_;
    FrameFn frame_;
    std::optional<FrameFn> derivative_;
    double fd_step_;
};

/// Built-in path catalogue. Names:
///   qubit-great-circle   K=1 meridian |a(s)> = cos(pi s)|0> + sin(pi s)|1>;
///                        closed in the Grassmannian, frame lift open.
///   qubit-small-circle   K=1 circle at fixed colatitude, closed frame path.
///   qubit-open-arc       K=1 generic open arc with varying twist.
///   coherent-j1-loop     K=2 spin-1 coherent frame loop (closed).
///   coherent-j1-arc      K=2 spin-1 coherent frame open arc.
///   partial-endpoint     K=2 in N=4, endpoint overlap engineered rank 1.
SmoothFramePath builtin_path(const std::string& name);
std::vector<std::string> builtin_path_names();

/// Wilczek-Zee connection [A(s)]_{kl} = <da_k/ds | a_l>; anti-Hermitian up to
/// differentiation error.
ComplexMatrix wz_connection(const SmoothFramePath& path, double s);

/// Ordered midpoint-rule product of step exponentials of the connection,
/// latest s leftmost, plus the endpoint relative phase U_{0,1} between
/// frame(0) and frame(1), returned separately so callers can form
/// U_{0,1} * pexp for comparison with closed discrete holonomies.
struct PathOrderedExp {
    ComplexMatrix pexp;           ///< unitary K x K
    ComplexMatrix endpoint_phase; ///< partial isometry U_{0,1}
};
PathOrderedExp path_ordered_exp(const SmoothFramePath& path, std::size_t steps,
                                const Tol& tol = {});

/// Frames sampled at s = 0, 1/(m-1), ..., 1.
SubspaceSequence discretize(const SmoothFramePath& path, std::size_t m);

/// Deviations of the closed discrete holonomies from the continuum limit
/// U_{0,1} * pexp at a Richardson-extrapolated reference resolution. Rows
/// where a discrete holonomy is Undefined carry empty deviations.
struct ConvergenceRow {
    std::size_t m = 0;
    std::optional<double> dev_direct;
    std::optional<double> dev_iterative;
};
struct ConvergenceTable {
    std::vector<ConvergenceRow> rows;
    ComplexMatrix reference;      ///< U_{0,1} * pexp
    ComplexMatrix endpoint_phase; ///< U_{0,1}
};
ConvergenceTable convergence_study(const SmoothFramePath& path,
                                   const std::vector<std::size_t>& m_values,
                                   std::size_t reference_steps = 8192, const Tol& tol = {});

} // namespace holo
