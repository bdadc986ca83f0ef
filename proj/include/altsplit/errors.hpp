#pragma once

#include <stdexcept>
#include <string>

namespace altsplit {

/// Base of every error the library throws. Classification verdicts never
/// throw; constructive operations throw when their hypotheses fail.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
public:
    using Error::Error;
};

class NotSquare : public Error {
public:
    using Error::Error;
};

class DimensionMismatch : public Error {
public:
    using Error::Error;
};

class NonFiniteEntry : public Error {
public:
    using Error::Error;
};

/// The group inverse does not exist (rank(M) != rank(M^2)).
class IndexGreaterThanOne : public Error {
public:
    using Error::Error;
};

class EigenSolverFailure : public Error {
public:
    using Error::Error;
};

/// Splittings passed together do not split the same coefficient matrix.
class MismatchedA : public Error {
public:
    using Error::Error;
};

class SingularIminusH : public Error {
public:
    using Error::Error;
};

class RangeNullConditionFailed : public Error {
public:
    using Error::Error;
};

class ZeroDiagonal : public Error {
public:
    using Error::Error;
};

class NonsingularityHypothesisFailed : public Error {
public:
    using Error::Error;
};

class ClassificationFailed : public Error {
public:
    using Error::Error;
};

class UnknownTheoremId : public Error {
public:
    using Error::Error;
};

class MissingDelta : public Error {
public:
    using Error::Error;
};

class IoError : public Error {
public:
    using Error::Error;
};

/// Malformed Matrix Market input. `line()` is 1-based, 0 when unknown.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t line)
        : Error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

class UnsupportedField : public Error {
public:
    using Error::Error;
};

}  // namespace altsplit
