#pragma once

#include <stdexcept>
#include <string>

namespace etaxi {

// Base class for all toolkit errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// An input contained a NaN or infinity.
struct NonFiniteError : Error {
    using Error::Error;
};

// A point fell within the cone guard |xi^2 - eta^2| < eps_cone.
struct OnLightConeError : Error {
    using Error::Error;
};

// exp would leave the representable double range.
struct OverflowError : Error {
    using Error::Error;
};

// A parameter violated its documented precondition.
struct InvalidParamError : Error {
    using Error::Error;
};

// A finite-difference stencil left the curve's domain interval.
struct DomainEdgeError : Error {
    using Error::Error;
};

// A finite-difference stencil crossed the cone guard.
struct NearConeError : Error {
    using Error::Error;
};

}  // namespace etaxi
