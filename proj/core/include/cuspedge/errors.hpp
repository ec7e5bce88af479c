#pragma once

#include <stdexcept>
#include <string>

namespace cuspedge {

/// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Two jets with different truncation degrees were combined.
struct DegreeMismatchError : Error {
    using Error::Error;
};

/// Requested truncation degree exceeds the engine cap (14).
struct TruncationCapError : Error {
    using Error::Error;
};

/// A computation window exceeds the reliable degree of its input jet.
struct InsufficientTruncationError : Error {
    using Error::Error;
};

/// A germ expected to be a submersion has a zero 1-jet.
struct NotSubmersionError : Error {
    using Error::Error;
};

/// Malformed input file or value.
struct ParseError : Error {
    using Error::Error;
};

/// Edge coefficients violate b03 != 0.
struct NotCuspidalEdgeError : Error {
    using Error::Error;
};

/// Moduli violate their validity constraints (a=0, b=0, excluded values...).
struct InvalidModuliError : Error {
    using Error::Error;
};

} // namespace cuspedge
