#pragma once

#include <stdexcept>
#include <string>

namespace oft {

/// Bad argument to a library call (grid mismatch, invalid axis, NaN input, ...).
class ArgumentError : public std::invalid_argument {
public:
    explicit ArgumentError(const std::string& what) : std::invalid_argument(what) {}
};

/// Invalid or inconsistent solver configuration (unknown key, bad value, ...).
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

/// Numerical failure inside a solver (singular pivot, seed non-convergence, resonance).
class SolverError : public std::runtime_error {
public:
    explicit SolverError(const std::string& what) : std::runtime_error(what) {}
};

/// File-format or filesystem failure.
class IoError : public std::runtime_error {
public:
    explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

/// Operation invoked in the wrong object state (accumulator overrun, ...).
class StateError : public std::logic_error {
public:
    explicit StateError(const std::string& what) : std::logic_error(what) {}
};

} // namespace oft
