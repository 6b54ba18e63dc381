#pragma once

#include <stdexcept>
#include <string>

namespace gnc {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Inputs that are malformed or mutually inconsistent (dimensions, fields, partitions).
class SpecificationError : public Error {
public:
    using Error::Error;
};

/// Violated operation precondition (bad split of a weight, zero error where nonzero required, ...).
class PreconditionError : public Error {
public:
    using Error::Error;
};

class DivisionByZeroError : public Error {
public:
    using Error::Error;
};

/// A channel could not be built; usually two codewords collide at zero error.
class ConstructionError : public Error {
public:
    using Error::Error;
};

/// Enumeration would exceed the configured budget.
class BudgetError : public Error {
public:
    using Error::Error;
};

/// A local encoding function is not linear, so no transfer-matrix form exists.
class NonlinearityError : public Error {
public:
    NonlinearityError(std::string node, std::string edge, const std::string& what)
        : Error(what), node_(std::move(node)), edge_(std::move(edge)) {}

    const std::string& node() const noexcept { return node_; }
    const std::string& edge() const noexcept { return edge_; }

private:
    std::string node_;
    std::string edge_;
};

/// Bounded-distance decoding requested at a radius where the balls overlap.
class InvalidDecoderError : public Error {
public:
    using Error::Error;
};

/// tau / c* requested for a pair whose correction distance is infinite.
class UndefinedThresholdError : public Error {
public:
    using Error::Error;
};

/// Two independent computations of the same quantity disagree. Always a bug.
class ConsistencyError : public Error {
public:
    using Error::Error;
};

/// Config or command-line text that cannot be parsed.
class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string& what)
        : Error(line == 0 ? what : "line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

}  // namespace gnc
