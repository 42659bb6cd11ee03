#pragma once

#include <stdexcept>
#include <string>

namespace congr {

/// Failure modes of the public API. Every exception thrown by the library
/// carries one of these codes.
enum class Errc {
    DivisionByZero,
    FieldMismatch,
    DimensionMismatch,
    IndexOutOfRange,
    SingularMatrix,
    SingularTransform,
    UnsupportedField,
    CapExceeded,
    BadInput,
};

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

struct DivisionByZeroError : Error {
    explicit DivisionByZeroError(const std::string& w = "division by zero")
        : Error(Errc::DivisionByZero, w) {}
};

struct FieldMismatchError : Error {
    explicit FieldMismatchError(const std::string& w = "operands belong to different fields")
        : Error(Errc::FieldMismatch, w) {}
};

struct DimensionMismatchError : Error {
    explicit DimensionMismatchError(const std::string& w = "matrix dimensions do not match")
        : Error(Errc::DimensionMismatch, w) {}
};

struct IndexOutOfRangeError : Error {
    explicit IndexOutOfRangeError(const std::string& w = "index out of range")
        : Error(Errc::IndexOutOfRange, w) {}
};

struct SingularMatrixError : Error {
    explicit SingularMatrixError(const std::string& w = "singular matrix")
        : Error(Errc::SingularMatrix, w) {}
};

struct SingularTransformError : Error {
    explicit SingularTransformError(const std::string& w = "transform matrix is singular")
        : Error(Errc::SingularTransform, w) {}
};

struct UnsupportedFieldError : Error {
    explicit UnsupportedFieldError(const std::string& w = "unsupported field")
        : Error(Errc::UnsupportedField, w) {}
};

struct CapExceededError : Error {
    explicit CapExceededError(const std::string& w = "size cap exceeded")
        : Error(Errc::CapExceeded, w) {}
};

struct ParseError : Error {
    explicit ParseError(const std::string& w = "malformed input")
        : Error(Errc::BadInput, w) {}
};

} // namespace congr
