#include "lnet/error.hpp"

namespace lnet {

std::string_view to_string(ErrorCode code) {
    switch (code) {
    case ErrorCode::FieldMismatch: return "FieldMismatch";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::PoleAtZero: return "PoleAtZero";
    case ErrorCode::HullNotClosed: return "HullNotClosed";
    case ErrorCode::NonUniqueShadow: return "NonUniqueShadow";
    case ErrorCode::NotAPolygon: return "NotAPolygon";
    case ErrorCode::OrderingInconsistent: return "OrderingInconsistent";
    case ErrorCode::PreconditionViolation: return "PreconditionViolation";
    case ErrorCode::PathLeavesWindow: return "PathLeavesWindow";
    case ErrorCode::NotOneGenerated: return "NotOneGenerated";
    case ErrorCode::NotSimple: return "NotSimple";
    case ErrorCode::NotLinked: return "NotLinked";
    case ErrorCode::WindowTooSmall: return "WindowTooSmall";
    case ErrorCode::ShiftNotApplicable: return "ShiftNotApplicable";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::ZeroImage: return "ZeroImage";
    case ErrorCode::DecompositionFailed: return "DecompositionFailed";
    case ErrorCode::SmoothingInvalid: return "SmoothingInvalid";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::NotNeighbors: return "NotNeighbors";
    case ErrorCode::NotClassifiable: return "NotClassifiable";
    case ErrorCode::StratumNotPolygon: return "StratumNotPolygon";
    case ErrorCode::PointNotOnVariety: return "PointNotOnVariety";
    case ErrorCode::NotPolygonGenerated: return "NotPolygonGenerated";
    }
    return "Unknown";
}

Error::Error(ErrorCode code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

}  // namespace lnet
