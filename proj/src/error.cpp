#include "pernloci/error.hpp"

namespace pernloci {

std::string_view error_name(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::NonHomogeneous: return "NON_HOMOGENEOUS";
        case ErrorCode::LimitExceeded: return "LIMIT_EXCEEDED";
        case ErrorCode::Degenerate: return "DEGENERATE";
        case ErrorCode::ExcludedRho: return "EXCLUDED_RHO";
        case ErrorCode::DegenerateFiber: return "DEGENERATE_FIBER";
        case ErrorCode::Singular: return "SINGULAR";
        case ErrorCode::NoConvergence: return "NO_CONVERGENCE";
        case ErrorCode::WrongPeriod: return "WRONG_PERIOD";
        case ErrorCode::Clearance: return "CLEARANCE";
        case ErrorCode::NonSimple: return "NON_SIMPLE";
        case ErrorCode::MarkedSetMismatch: return "MARKED_SET_MISMATCH";
        case ErrorCode::NotSubset: return "NOT_SUBSET";
        case ErrorCode::StepUnderflow: return "STEP_UNDERFLOW";
        case ErrorCode::Insufficient: return "INSUFFICIENT";
        case ErrorCode::Parse: return "PARSE";
        case ErrorCode::Validation: return "VALIDATION";
        case ErrorCode::NotReduced: return "NOT_REDUCED";
        case ErrorCode::Io: return "IO";
        case ErrorCode::InvalidArgument: return "INVALID_ARGUMENT";
    }
    return "UNKNOWN";
}

ErrorClass error_class(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::NoConvergence:
        case ErrorCode::StepUnderflow:
        case ErrorCode::WrongPeriod:
            return ErrorClass::Numerical;
        case ErrorCode::Io:
            return ErrorClass::Other;
        default:
            return ErrorClass::Validation;
    }
}

}  // namespace pernloci
