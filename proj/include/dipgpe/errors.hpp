#pragma once

#include <stdexcept>
#include <string>

namespace dipgpe {

// Base class for every error thrown by the toolkit.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Caller handed data violating an operation's precondition.
struct DomainError : Error { using Error::Error; };

// The fiber energy has no zero (potential energy nonnegative).
struct NoRootError : Error { using Error::Error; };

// Time step too large for the nonlinear phase rotation.
struct StabilityError : Error { using Error::Error; };

// Iterative solver hit its iteration cap while still making progress.
struct NonConvergenceError : Error { using Error::Error; };

// A rescaled field is not spectrally resolved on its grid.
struct ResampleError : Error { using Error::Error; };

// Observation window invalid (wrap-around reached, or t outside range).
struct WindowError : Error { using Error::Error; };

// Not enough samples for a diagnostic.
struct InsufficientDataError : Error { using Error::Error; };

// A translated profile does not fit in the box with the required margin.
struct BoxOverflowError : Error { using Error::Error; };

// Experiment configuration missing or invalid.
struct ConfigError : Error { using Error::Error; };

// Catalog entry failed its checksum.
struct CorruptRecordError : Error { using Error::Error; };

} // namespace dipgpe
