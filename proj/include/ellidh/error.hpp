#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ellidh {

/// Error categories. Each maps to a stable string code and a CLI exit status.
enum class ErrorCode {
    InvalidArgument,      // precondition violated by the caller
    InvalidConfig,        // malformed job configuration
    FieldInvalid,         // non-prime / even characteristic, reducible modulus
    FieldMismatch,        // operands from different fields
    DivisionByZero,
    CurveSingular,
    NotOnCurve,
    PoleEvaluation,       // evaluating a function at one of its poles
    BudgetExceeded,
    HypothesisViolation,  // a theorem's hypotheses are not met
    InternalInvariant,    // a proven identity failed: implementation bug
};

std::string_view error_code_name(ErrorCode code);
int exit_status(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
    throw Error(code, message);
}

inline void require(bool condition, ErrorCode code, const std::string& message) {
    if (!condition) fail(code, message);
}

}  // namespace ellidh
