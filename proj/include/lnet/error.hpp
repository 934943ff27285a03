#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace lnet {

enum class ErrorCode {
    FieldMismatch,
    DivisionByZero,
    DimensionMismatch,
    PoleAtZero,
    HullNotClosed,
    NonUniqueShadow,
    NotAPolygon,
    OrderingInconsistent,
    PreconditionViolation,
    PathLeavesWindow,
    NotOneGenerated,
    NotSimple,
    NotLinked,
    WindowTooSmall,
    ShiftNotApplicable,
    BudgetExceeded,
    ZeroImage,
    DecompositionFailed,
    SmoothingInvalid,
    ParseError,
    NotNeighbors,
    NotClassifiable,
    StratumNotPolygon,
    PointNotOnVariety,
    NotPolygonGenerated,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what);
    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] void fail(ErrorCode code, const std::string& what);

inline void require(bool condition, ErrorCode code, const char* what) {
    if (!condition) fail(code, what);
}

}  // namespace lnet
