#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace addix {

enum class ErrorKind {
    NotPrime,
    ReducibleModulus,
    FieldTooLarge,
    SingularBasis,
    NotPrimitive,
    DivisionByZero,
    IndexOutOfRange,
    NotADivisor,
    DimensionMismatch,
    MTooLarge,
    BudgetExceeded,
    TrivialCharacter,
    UnknownCheck,
    IoError,
    InvalidArgument,
};

std::string_view to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace addix
