#pragma once

#include <stdexcept>

namespace lsdial {

// Shared error taxonomy. Everything derives from Error so callers can catch
// a single type at the boundary.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ParseError : Error {
    using Error::Error;
};
struct ShapeMismatch : Error {
    using Error::Error;
};
struct SingularMatrix : Error {
    using Error::Error;
};
struct ConstraintViolation : Error {
    using Error::Error;
};
struct UnboundedSpace : Error {
    using Error::Error;
};
struct BadDelta : Error {
    using Error::Error;
};

// An internal cross-check failed: indicates a bug in this library, not bad input.
struct InternalInconsistency : Error {
    using Error::Error;
};

}  // namespace lsdial
