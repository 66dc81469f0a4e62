#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hdcov {

/// Base class for every error raised by the library. The CLI maps any
/// hdcov::Error to exit code 2.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An argument lies outside the domain of the function (ratio outside (0,1),
/// negative chi-square argument, p >= n, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

/// Adaptive quadrature exhausted its refinement budget.
class NonConvergence : public Error {
public:
    using Error::Error;
};

/// Symmetric eigensolver failed to converge.
class ConvergenceFailure : public Error {
public:
    using Error::Error;
};

/// A covariance matrix has an eigenvalue at or below the singularity
/// tolerance, so its log-determinant is not usable.
class DegenerateCovariance : public Error {
public:
    using Error::Error;
};

class DimensionMismatch : public Error {
public:
    using Error::Error;
};

class NoRealSolution : public Error {
public:
    using Error::Error;
};

class Singularity : public Error {
public:
    using Error::Error;
};

/// Parse failure in an input file.
class DataError : public Error {
public:
    using Error::Error;
};

/// A Monte Carlo replicate failed; carries the replicate index.
class ReplicateError : public Error {
public:
    ReplicateError(std::size_t index, const std::string& what)
        : Error("replicate " + std::to_string(index) + ": " + what), index_(index) {}

    std::size_t index() const noexcept { return index_; }

private:
    std::size_t index_;
};

}  // namespace hdcov
