#ifndef IONREP_ERRORS_HPP
#define IONREP_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ionrep {

// Base class for every error raised by the library. The CLI maps
// ConfigError to exit code 2 and everything else to exit code 3.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A state whose squared norm is at or below the degeneracy threshold was
// asked for a normalized quantity (concurrence, swap).
class DegenerateStateError : public Error {
public:
    using Error::Error;
};

// A derived detuning or harmonic frequency is not strictly positive.
class FrequencyError : public Error {
public:
    using Error::Error;
};

// The constant-generator propagator was requested for unequal frequencies.
class NotTimeIndependentError : public Error {
public:
    using Error::Error;
};

class IntegratorError : public Error {
public:
    using Error::Error;
};

class DimensionError : public Error {
public:
    using Error::Error;
};

class ConfigError : public Error {
public:
    using Error::Error;
};

} // namespace ionrep

#endif // IONREP_ERRORS_HPP
