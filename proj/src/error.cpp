#include "ellidh/error.hpp"

namespace ellidh {

std::string_view error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::InvalidArgument: return "INVALID_ARGUMENT";
        case ErrorCode::InvalidConfig: return "CONFIG_INVALID";
        case ErrorCode::FieldInvalid: return "FIELD_INVALID";
        case ErrorCode::FieldMismatch: return "FIELD_MISMATCH";
        case ErrorCode::DivisionByZero: return "DIVISION_BY_ZERO";
        case ErrorCode::CurveSingular: return "CURVE_SINGULAR";
        case ErrorCode::NotOnCurve: return "NOT_ON_CURVE";
        case ErrorCode::PoleEvaluation: return "POLE_EVALUATION";
        case ErrorCode::BudgetExceeded: return "BUDGET_EXCEEDED";
        case ErrorCode::HypothesisViolation: return "HYPOTHESIS_VIOLATION";
        case ErrorCode::InternalInvariant: return "INTERNAL_INVARIANT";
    }
    return "UNKNOWN";
}

int exit_status(ErrorCode code) {
    switch (code) {
        case ErrorCode::BudgetExceeded: return 3;
        case ErrorCode::HypothesisViolation: return 4;
        case ErrorCode::InternalInvariant: return 5;
        default: return 2;
    }
}

}  // namespace ellidh
