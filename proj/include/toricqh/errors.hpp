#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace toricqh {

/// Base class for every failure that comes from the mathematical input
/// (a polytope that is not reflexive, a fan that is not smooth, ...).
class DomainError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class NotFullDimensional : public DomainError {
public:
    using DomainError::DomainError;
};

class OriginNotInterior : public DomainError {
public:
    using DomainError::DomainError;
};

class NotReflexive : public DomainError {
public:
    using DomainError::DomainError;
};

class NotSimplicial : public DomainError {
public:
    using DomainError::DomainError;
};

class NotSmooth : public DomainError {
public:
    using DomainError::DomainError;
};

class NotDelzant : public DomainError {
public:
    using DomainError::DomainError;
};

class NotStrictlyConvex : public DomainError {
public:
    using DomainError::DomainError;
};

class NonpositiveCoefficient : public DomainError {
public:
    using DomainError::DomainError;
};

class NotCritical : public DomainError {
public:
    using DomainError::DomainError;
};

class OverCount : public DomainError {
public:
    using DomainError::DomainError;
};

class InvalidRegime : public DomainError {
public:
    using DomainError::DomainError;
};

/// Malformed text input. Line and column are 1-based; column 0 means
/// "the whole line".
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, std::size_t column, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) +
                             ": " + what),
          line_(line),
          column_(column) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

}  // namespace toricqh
