// errors.hpp — exception taxonomy shared across the library

#pragma once

#include <stdexcept>
#include <string>

namespace rydpol {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A laboratory parameter is out of its admissible range or non-finite.
struct InvalidParameterError : Error {
    using Error::Error;
};

// |1 - zeta^2| fell below the guard band; the effective-model denominators
// are ill-conditioned there.
struct SingularParameterError : Error {
    using Error::Error;
};

// A displacement configuration hit the resonance denominator of the
// nonlinear on-site/hopping expressions.
struct SingularGeometryError : Error {
    using Error::Error;
};

// An operation was called outside its domain (e.g. a sweet-spot-only
// closed form away from the sweet spot).
struct DomainError : Error {
    using Error::Error;
};

// t_e = 0: the bare band is flat and the effective coupling is undefined.
struct DegenerateBandError : Error {
    using Error::Error;
};

// Requested basis/spectrum size exceeds what the encoding or the dense
// solver can hold.
struct CapacityError : Error {
    using Error::Error;
};

// Inconsistent inputs during operator assembly.
struct BuildError : Error {
    using Error::Error;
};

// Iterative solver ran out of iterations; carries the best estimate found.
struct ConvergenceError : Error {
    ConvergenceError(const std::string& what, double best, double res)
        : Error(what), best_estimate(best), best_residual(res) {}
    double best_estimate;
    double best_residual;
};

// Both ends of a requested bracket have the same ground-state sector.
struct NoTransitionError : Error {
    using Error::Error;
};

// Configuration file / override problems; carries the offending key.
struct ConfigError : Error {
    ConfigError(const std::string& what, std::string key_in = {})
        : Error(what), key(std::move(key_in)) {}
    std::string key;
};

} // namespace rydpol
