#pragma once

#include <stdexcept>
#include <string>

namespace steerkit {

/// Base class for all steerkit errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DimensionMismatchError : Error {
    using Error::Error;
};

struct NotHermitianError : Error {
    using Error::Error;
};

struct InvalidStateError : Error {
    using Error::Error;
};

struct NotProjectorError : Error {
    using Error::Error;
};

struct NotAResolutionError : Error {
    using Error::Error;
};

struct UnsupportedDimensionError : Error {
    using Error::Error;
};

struct InvalidParameterError : Error {
    using Error::Error;
};

struct NonHermitianCoefficientsError : Error {
    using Error::Error;
};

struct IncompleteStrategyError : Error {
    using Error::Error;
};

struct StrategySpaceTooLargeError : Error {
    using Error::Error;
};

struct NotSymmetricError : Error {
    using Error::Error;
};

/// Structural problem in an input document; `path` is a JSON-pointer-like location.
struct SchemaError : Error {
    std::string path;
    SchemaError(const std::string& message, std::string where)
        : Error(message + " (at " + where + ")"), path(std::move(where)) {}
};

/// A parsed document is well-formed but breaks a model invariant.
struct InvariantError : Error {
    using Error::Error;
};

}  // namespace steerkit
