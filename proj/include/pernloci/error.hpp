#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace pernloci {

enum class ErrorCode {
    NonHomogeneous,
    LimitExceeded,
    Degenerate,
    ExcludedRho,
    DegenerateFiber,
    Singular,
    NoConvergence,
    WrongPeriod,
    Clearance,
    NonSimple,
    MarkedSetMismatch,
    NotSubset,
    StepUnderflow,
    Insufficient,
    Parse,
    Validation,
    NotReduced,
    Io,
    InvalidArgument,
};

std::string_view error_name(ErrorCode code) noexcept;

/// Broad class of an error, used to pick a process exit status.
enum class ErrorClass { Validation, Numerical, Other };
ErrorClass error_class(ErrorCode code) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(error_name(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace pernloci
