#pragma once

#include <stdexcept>
#include <string>

namespace superkoszul {

enum class ErrorKind {
    NonHomogeneousRelation,
    BoundTooSmall,
    BoundExceeded,
    WeightIncompatibleRelation,
    WindowTooSmall,
    SignIncoherence,
    NotAStaircase,
    ConilpotencyFailure,
    CoactionNotMultiplicative,
    RelationFailure,
    CompositeNonzero,
    Parse,
    InvalidArgument,
};

const char* error_kind_name(ErrorKind kind);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(error_kind_name(kind)) + ": " + what), kind_(kind)
    {
    }

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace superkoszul
