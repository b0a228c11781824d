#pragma once
#include <stdexcept>
#include <string>

namespace spindimer {

// common base so callers can catch everything domain-specific at once
struct SpinDimerError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// a driven scenario was requested with |Gamma| = 0 (the drive freezes)
struct DegenerateCoupling : SpinDimerError {
    using SpinDimerError::SpinDimerError;
};

// the engineered field diverges: cot argument within 1e-9 of a multiple of pi
struct CotangentSingularity : SpinDimerError {
    using SpinDimerError::SpinDimerError;
};

// adaptive Simpson hit the recursion cap with the error estimate above tolerance
struct QuadratureFailure : SpinDimerError {
    using SpinDimerError::SpinDimerError;
};

// an operator expected to be Hermitian failed the symmetry check
struct NonHermitian : SpinDimerError {
    using SpinDimerError::SpinDimerError;
};

// two sector propagators evaluated at different times were combined
struct TimeMismatch : SpinDimerError {
    using SpinDimerError::SpinDimerError;
};

// a minus-sector schedule degenerated to omega1 == omega2
struct InvalidEqualOmega : SpinDimerError {
    using SpinDimerError::SpinDimerError;
};

// field conversion requested with a vanishing g-factor
struct ZeroGFactor : SpinDimerError {
    using SpinDimerError::SpinDimerError;
};

// the integrator exceeded its step budget
struct StepLimitExceeded : SpinDimerError {
    using SpinDimerError::SpinDimerError;
};

// the integrator cannot reach the requested tolerance (step underflow)
struct ToleranceUnreachable : SpinDimerError {
    using SpinDimerError::SpinDimerError;
};

} // namespace spindimer
