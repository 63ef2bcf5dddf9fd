#pragma once

#include <stdexcept>
#include <string>

namespace affprox {

/// Structurally well-formed input that violates a semantic requirement
/// (bad dimensions, non-surjective map, invalid generator parameters, ...).
struct ValidationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Shapes that do not line up: vector lengths, matrix sizes, point dimensions.
struct DimensionError : ValidationError {
    using ValidationError::ValidationError;
};

/// Envelope query at a point with an empty fiber, i.e. outside the image of C.
struct EmptyFiberError : ValidationError {
    using ValidationError::ValidationError;
};

/// Text that could not be read as a rational, an instance, or a report.
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// An exact identity the solver relies on failed to hold. This is never
/// expected on valid input; it indicates a bug, not a bad instance.
struct InternalError : std::logic_error {
    using std::logic_error::logic_error;
};

}  // namespace affprox
