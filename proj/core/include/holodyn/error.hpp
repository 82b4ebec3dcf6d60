#pragma once

#include <stdexcept>
#include <string>

namespace holodyn {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Jets with different dimension, base point or degree cap were combined.
class StructuralError : public Error {
public:
    using Error::Error;
};

class BaseMismatchError : public Error {
public:
    explicit BaseMismatchError(double distance)
        : Error("composition base mismatch (distance " + std::to_string(distance) + ")"),
          distance_(distance) {}
    double distance() const noexcept { return distance_; }

private:
    double distance_;
};

class InsufficientDegreeError : public Error {
public:
    using Error::Error;
};

class TermOverflowError : public Error {
public:
    using Error::Error;
};

class NotPeriodicError : public Error {
public:
    NotPeriodicError(const std::string& what, double residual) : Error(what), residual_(residual) {}
    double residual() const noexcept { return residual_; }

private:
    double residual_;
};

// Input violates a documented precondition (e.g. affine map passed to the
// sphere construction).
class PreconditionError : public Error {
public:
    using Error::Error;
};

// A search came up empty but could succeed with different parameters.
class RecoverableSearchError : public Error {
public:
    using Error::Error;
};

// A numerical construction finished but failed its own residual checks.
class SelfCheckError : public Error {
public:
    using Error::Error;
};

class SchemaError : public Error {
public:
    SchemaError(std::string field, const std::string& what)
        : Error("schema error at '" + field + "': " + what), field_(std::move(field)) {}
    const std::string& field() const noexcept { return field_; }

private:
    std::string field_;
};

}  // namespace holodyn
