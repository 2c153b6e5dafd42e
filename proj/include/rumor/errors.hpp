#ifndef RUMOR_ERRORS_HPP
#define RUMOR_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace rumor {

// Base class for everything this library throws on purpose.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Invalid or inconsistent model parameters.
class ParamError : public Error {
public:
    explicit ParamError(const std::string& msg) : Error(msg) {}
};

// A state vector violates its invariants (negative density, broken normalization).
class StateError : public Error {
public:
    explicit StateError(const std::string& msg) : Error(msg) {}
};

// Numerical breakdown mid-integration (step size too large, drift).
class NumericalError : public Error {
public:
    explicit NumericalError(const std::string& msg) : Error(msg) {}
};

// A result was requested from a run that did not reach steady state.
class NotConvergedError : public Error {
public:
    explicit NotConvergedError(const std::string& msg) : Error(msg) {}
};

// Graph construction failed (infeasible degree sequence or restart budget).
class ConstructionError : public Error {
public:
    explicit ConstructionError(const std::string& msg) : Error(msg) {}
};

// Bad run configuration (files, keys, option combinations).
class ConfigError : public Error {
public:
    explicit ConfigError(const std::string& msg) : Error(msg) {}
};

} // namespace rumor

#endif
