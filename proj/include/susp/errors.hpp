#pragma once

#include <stdexcept>
#include <string>

namespace susp {

enum class ErrorKind {
    Context,
    Shape,
    Degree,
    InvalidTransformation,
    Domain,
    InvalidSuspension,
    Method,
    Protocol,
    Resource,
    Cancelled,
    PrimeRejected,
    Distinctness,
    WitnessInvalid,
    UnsupportedCase,
    Parse,
    Schema,
    Inconsistency,
};

inline const char* to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::Context: return "context error";
        case ErrorKind::Shape: return "shape error";
        case ErrorKind::Degree: return "degree error";
        case ErrorKind::InvalidTransformation: return "invalid transformation";
        case ErrorKind::Domain: return "domain error";
        case ErrorKind::InvalidSuspension: return "invalid suspension";
        case ErrorKind::Method: return "method error";
        case ErrorKind::Protocol: return "protocol error";
        case ErrorKind::Resource: return "resource limit";
        case ErrorKind::Cancelled: return "cancelled";
        case ErrorKind::PrimeRejected: return "prime rejected";
        case ErrorKind::Distinctness: return "distinctness error";
        case ErrorKind::WitnessInvalid: return "witness invalid";
        case ErrorKind::UnsupportedCase: return "unsupported case";
        case ErrorKind::Parse: return "parse error";
        case ErrorKind::Schema: return "schema error";
        case ErrorKind::Inconsistency: return "internal inconsistency";
    }
    return "error";
}

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

template <ErrorKind K>
class KindedError : public Error {
public:
    explicit KindedError(const std::string& what) : Error(K, what) {}
};

using ContextError = KindedError<ErrorKind::Context>;
using ShapeError = KindedError<ErrorKind::Shape>;
using DegreeError = KindedError<ErrorKind::Degree>;
using InvalidTransformationError = KindedError<ErrorKind::InvalidTransformation>;
using DomainError = KindedError<ErrorKind::Domain>;
using InvalidSuspensionError = KindedError<ErrorKind::InvalidSuspension>;
using MethodError = KindedError<ErrorKind::Method>;
using ProtocolError = KindedError<ErrorKind::Protocol>;
using ResourceError = KindedError<ErrorKind::Resource>;
using CancelledError = KindedError<ErrorKind::Cancelled>;
using PrimeRejectedError = KindedError<ErrorKind::PrimeRejected>;
using DistinctnessError = KindedError<ErrorKind::Distinctness>;
using WitnessInvalidError = KindedError<ErrorKind::WitnessInvalid>;
using UnsupportedCaseError = KindedError<ErrorKind::UnsupportedCase>;
using SchemaError = KindedError<ErrorKind::Schema>;
using InconsistencyError = KindedError<ErrorKind::Inconsistency>;

// Parse errors carry a 1-based source position.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t line, std::size_t column)
        : Error(ErrorKind::Parse, "line " + std::to_string(line) + ", column " +
                                      std::to_string(column) + ": " + what),
          message_(what), line_(line), column_(column) {}

    /// The description without the position prefix.
    const std::string& message() const noexcept { return message_; }
    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::string message_;
    std::size_t line_;
    std::size_t column_;
};

}  // namespace susp
