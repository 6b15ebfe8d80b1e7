#pragma once

#include <stdexcept>
#include <string>

namespace swdl {

/// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Matrix entries do not satisfy ad - bc = 1 within tolerance.
struct NotSymplectic : Error {
    NotSymplectic(const std::string& msg, double residual)
        : Error(msg), residual(residual) {}
    double residual; ///< ad - bc - 1
};

/// A matrix entry required to be nonzero is zero (Lemma-1 style preconditions).
struct ZeroEntry : Error {
    using Error::Error;
};

/// The b entry of an LCT matrix is zero where the integral kernel form is required.
struct ZeroB : Error {
    using Error::Error;
};

struct DegenerateInput : Error {
    using Error::Error;
};

struct UnboundedSupport : Error {
    using Error::Error;
};

struct InvalidWidth : Error {
    using Error::Error;
};

struct ZeroEnergy : Error {
    using Error::Error;
};

struct AxisMismatch : Error {
    using Error::Error;
};

struct ZeroAtOrigin : Error {
    using Error::Error;
};

/// Direct grid moments and the LCT-domain decomposition disagree beyond the hard limit.
struct DecompositionMismatch : Error {
    using Error::Error;
};

/// Slope-to-rate map is undefined (b1*d1 - a1*c1 = 0).
struct DegenerateMap : Error {
    using Error::Error;
};

struct EmptyGrid : Error {
    using Error::Error;
};

/// Configuration file / flag errors; message carries line or field context.
struct ConfigError : Error {
    using Error::Error;
};

} // namespace swdl
