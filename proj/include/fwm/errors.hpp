#ifndef FWM_ERRORS_HPP
#define FWM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace fwm {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A parameter or state field violates its documented invariant.
struct ValidationError : Error {
    using Error::Error;
};

/// Config text is syntactically malformed.
struct ParseError : Error {
    using Error::Error;
};

/// Config contains a key that is not part of the documented schema.
struct UnknownKeyError : ParseError {
    using ParseError::ParseError;
};

/// Closed-form denominator is numerically an exact pole.
struct DegenerateDenominator : Error {
    using Error::Error;
};

/// The resonance quadratic has no real roots at these parameters.
struct ComplexRoots : Error {
    using Error::Error;
};

/// An iterative solver ran out of budget.
struct NonConvergence : Error {
    using Error::Error;
};

/// Density-matrix positivity broken beyond tolerance along a trajectory.
struct InvariantViolation : Error {
    using Error::Error;
};

/// Scan maximum sits on the sweep boundary.
struct NoInteriorOptimum : Error {
    using Error::Error;
};

struct IoError : Error {
    using Error::Error;
};

} // namespace fwm

#endif
