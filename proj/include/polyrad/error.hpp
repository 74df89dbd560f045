#pragma once

#include <stdexcept>
#include <string>

namespace polyrad {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A value violates a type invariant (negative radius, opening out of range, ...).
class InvalidArgument : public Error {
public:
    using Error::Error;
};

class NotInteriorError : public Error {
public:
    using Error::Error;
};

/// The shape has no closed-form inner radius; use the walk-on-spheres estimator.
class NoAnalyticFormula : public Error {
public:
    using Error::Error;
};

class PoleError : public Error {
public:
    using Error::Error;
};

class OverflowError : public Error {
public:
    using Error::Error;
};

/// Too many walks hit the step limit.
class WosError : public Error {
public:
    using Error::Error;
};

/// A theorem hypothesis failed. `constraint()` names it (e.g. "m >= 5").
class HypothesisError : public Error {
public:
    HypothesisError(std::string constraint, const std::string& detail)
        : Error("hypothesis violated: " + constraint + (detail.empty() ? "" : " (" + detail + ")")),
          constraint_(std::move(constraint)) {}

    const std::string& constraint() const noexcept { return constraint_; }

private:
    std::string constraint_;
};

/// A configuration is structurally invalid (membership, disjointness, shape of the grid).
class ConfigurationError : public Error {
public:
    using Error::Error;
};

/// Malformed serialized input.
class ParseError : public Error {
public:
    using Error::Error;
};

}  // namespace polyrad
