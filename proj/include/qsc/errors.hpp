#pragma once

#include <stdexcept>

namespace qsc {

// Base type for everything thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NotHermitian : Error { using Error::Error; };
struct NoConvergence : Error { using Error::Error; };
struct DimensionMismatch : Error { using Error::Error; };
struct NotPositive : Error { using Error::Error; };
struct DomainError : Error { using Error::Error; };
struct UnknownLabel : Error { using Error::Error; };
struct LabelMismatch : Error { using Error::Error; };
struct WrongArity : Error { using Error::Error; };
struct NonRealEnergy : Error { using Error::Error; };
struct TooFewSamples : Error { using Error::Error; };
struct UnsupportedDim : Error { using Error::Error; };
struct NotUnitary : Error { using Error::Error; };

} // namespace qsc
