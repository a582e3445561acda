#pragma once

#include <stdexcept>
#include <string>

namespace holo {

/// Base class for all library errors.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Invalid caller input: dimension mismatch, non-finite entries, malformed files.
struct input_error : error {
    using error::error;
};

/// A quantity the theory leaves undefined was requested: phase of (near-)zero,
/// holonomy of an inadmissible sequence.
struct undefined_error : error {
    using error::error;
};

/// Iterative numerics failed to converge. Should not happen on sane inputs.
struct numerical_error : error {
    using error::error;
};

} // namespace holo
