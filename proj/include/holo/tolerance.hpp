#pragma once

namespace holo {

/// Numerical tolerances shared across the library.
///
/// Rank decisions are relative: a singular value sigma counts toward the rank
/// iff sigma > rank_rel * sigma_max, with abs_floor guarding the
/// sigma_max ~ 0 case. Phases of complex numbers with modulus <= abs_floor
/// are treated as undefined.
struct Tol {
    double rank_rel = 1e-10;    ///< relative singular-value cutoff
    double abs_floor = 1e-14;   ///< absolute floor for moduli / sigma_max
    double frame_ortho = 1e-8;  ///< worst accepted frame orthonormality defect
    double unitary_check = 1e-8; ///< unitarity defect accepted for gauge inputs
};

} // namespace holo
