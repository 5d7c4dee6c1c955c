#pragma once

#include <stdexcept>
#include <string>

namespace dunkl {

// Thrown when a coupling parameter lies on (or numerically too close to) a
// pole of the normalized eigenfunction series, k in {-1/2, -3/2, -5/2, ...}.
class SingularParameterError : public std::runtime_error {
public:
    explicit SingularParameterError(const std::string& msg) : std::runtime_error(msg) {}
};

// Thrown when a series fails its stopping rule within the term budget.
class ConvergenceError : public std::runtime_error {
public:
    explicit ConvergenceError(const std::string& msg) : std::runtime_error(msg) {}
};

// Thrown when a requested truncation radius violates the Gaussian tail bound.
class TailBoundError : public std::runtime_error {
public:
    explicit TailBoundError(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace dunkl
