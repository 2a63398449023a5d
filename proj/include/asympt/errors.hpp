// Error taxonomy. InvalidInput covers violated preconditions and malformed
// inputs (CLI exit 2); NumericalError covers failures arising during an
// otherwise valid computation (CLI exit 3).
#pragma once

#include <stdexcept>
#include <string>

namespace asympt {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InvalidInput : Error {
    using Error::Error;
};

struct NumericalError : Error {
    using Error::Error;
};

// -- input-side errors --------------------------------------------------

struct InsufficientCoefficients : InvalidInput {
    using InvalidInput::InvalidInput;
};

struct TooShort : InvalidInput {
    using InvalidInput::InvalidInput;
};

struct TooFewPoints : InvalidInput {
    using InvalidInput::InvalidInput;
};

struct ZeroCoefficientInWindow : InvalidInput {
    using InvalidInput::InvalidInput;
};

struct DuplicateNodes : InvalidInput {
    using InvalidInput::InvalidInput;
};

struct MismatchedVariable : InvalidInput {
    using InvalidInput::InvalidInput;
};

struct InconsistentDegrees : InvalidInput {
    using InvalidInput::InvalidInput;
};

struct NoSignChange : InvalidInput {
    using InvalidInput::InvalidInput;
};

struct OutOfRange : InvalidInput {
    using InvalidInput::InvalidInput;
};

// -- numerical failures -------------------------------------------------

struct SingularSystem : NumericalError {
    using NumericalError::NumericalError;
};

struct EvaluationAtPole : NumericalError {
    using NumericalError::NumericalError;
};

struct EvaluationBreakdown : NumericalError {
    using NumericalError::NumericalError;
};

struct SingularDeterminant : NumericalError {
    using NumericalError::NumericalError;
};

struct DegeneratePolynomial : NumericalError {
    using NumericalError::NumericalError;
};

struct DegenerateFit : NumericalError {
    using NumericalError::NumericalError;
};

struct InconsistentAsymptotics : NumericalError {
    using NumericalError::NumericalError;
};

}  // namespace asympt
