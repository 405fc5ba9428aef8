#pragma once

#include <stdexcept>
#include <string>

namespace nak {

/// Malformed or out-of-range input supplied by a caller.
struct InvalidInput : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// fold() was handed a triangulation that is not rotation symmetric.
struct SymmetryFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A computation that should succeed by theory did not (a bug or a bound too small).
struct InternalError : std::logic_error {
    using std::logic_error::logic_error;
};

}  // namespace nak
