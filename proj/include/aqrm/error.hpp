#pragma once

#include <stdexcept>
#include <string>

namespace aqrm {

/// Failure categories. The numeric values double as CLI exit codes.
enum class ErrorKind : int {
    InvalidInput = 2,
    SolverFailure = 3,
    PreconditionViolation = 4,
};

const char* to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

class InvalidInputError : public Error {
public:
    explicit InvalidInputError(const std::string& what) : Error(ErrorKind::InvalidInput, what) {}
};

class SolverError : public Error {
public:
    explicit SolverError(const std::string& what) : Error(ErrorKind::SolverFailure, what) {}
};

class PreconditionError : public Error {
public:
    explicit PreconditionError(const std::string& what) : Error(ErrorKind::PreconditionViolation, what) {}
};

}  // namespace aqrm
