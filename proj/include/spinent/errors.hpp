#pragma once

#include <stdexcept>
#include <string>

namespace spinent {

/// Base class for all toolkit errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NotHermitian : Error {
    using Error::Error;
};

struct BadDensityMatrix : Error {
    using Error::Error;
};

struct DimensionMismatch : Error {
    using Error::Error;
};

struct ParamOutOfRange : Error {
    using Error::Error;
};

struct NotNormalized : Error {
    using Error::Error;
};

struct NonFiniteObjective : Error {
    using Error::Error;
};

struct DegeneracyUnresolved : Error {
    using Error::Error;
};

/// An internal cross-check (two redundant computation routes) disagreed.
struct ConsistencyError : Error {
    using Error::Error;
};

}  // namespace spinent
