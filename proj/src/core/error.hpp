#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ihara {

// Each failure class maps onto one status code of the C API.
enum class ErrorKind {
    dimension,
    invalid_input,
    parse,
    not_edge_free,
    not_invertible,
    division_by_zero,
    rounding,
    enumeration_guard,
    verification,
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

class DimensionError : public Error {
public:
    explicit DimensionError(const std::string& what) : Error(ErrorKind::dimension, what) {}
};

class InvalidInput : public Error {
public:
    explicit InvalidInput(const std::string& what) : Error(ErrorKind::invalid_input, what) {}
};

class ParseError : public Error {
public:
    explicit ParseError(const std::string& what) : Error(ErrorKind::parse, what) {}
};

class NotEdgeFree : public Error {
public:
    explicit NotEdgeFree(const std::string& what) : Error(ErrorKind::not_edge_free, what) {}
};

class NotInvertible : public Error {
public:
    explicit NotInvertible(const std::string& what) : Error(ErrorKind::not_invertible, what) {}
};

class DivisionByZero : public Error {
public:
    explicit DivisionByZero(const std::string& what) : Error(ErrorKind::division_by_zero, what) {}
};

class RoundingError : public Error {
public:
    RoundingError(const std::string& what, std::size_t worst_index, double residual)
        : Error(ErrorKind::rounding, what), worst_index_(worst_index), residual_(residual) {}
    std::size_t worst_index() const noexcept { return worst_index_; }
    double residual() const noexcept { return residual_; }

private:
    std::size_t worst_index_;
    double residual_;
};

class GuardError : public Error {
public:
    explicit GuardError(const std::string& what) : Error(ErrorKind::enumeration_guard, what) {}
};

class VerificationError : public Error {
public:
    explicit VerificationError(const std::string& what) : Error(ErrorKind::verification, what) {}
};

}  // namespace ihara
