#pragma once

#include <stdexcept>
#include <string>

namespace nck3 {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed text input: cubic files, Weil-polynomial lines, rationals.
class ParseError : public Error {
public:
    ParseError(const std::string& what, int line = 0)
        : Error(line > 0 ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
    int line() const noexcept { return line_; }

private:
    int line_;
};

/// A polynomial violates a structural precondition (e.g. constant term != 1).
class MalformedPolynomial : public Error {
public:
    using Error::Error;
};

class UnsupportedField : public Error {
public:
    using Error::Error;
};

/// A computation would exceed the configured enumeration budget.
class ResourceLimit : public Error {
public:
    using Error::Error;
};

/// An arithmetic identity that must always hold did not. Indicates a bug.
class ConsistencyError : public Error {
public:
    using Error::Error;
};

/// Point counts that no degree-22 unit-circle polynomial can produce.
class InfeasibleCounts : public Error {
public:
    using Error::Error;
};

class InsufficientData : public Error {
public:
    using Error::Error;
};

/// Counts of a cubic fourfold that break the Chevalley-Warning-Ax congruence.
class AxCongruenceViolation : public Error {
public:
    using Error::Error;
};

class ProjectivityViolation : public Error {
public:
    using Error::Error;
};

}  // namespace nck3
