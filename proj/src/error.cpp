#include "rankfuzz/error.hpp"

namespace rankfuzz {

std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::LengthMismatch: return "LengthMismatch";
        case ErrorCode::NegativeOrNonFiniteScore: return "NegativeOrNonFiniteScore";
        case ErrorCode::DuplicateNonZeroScore: return "DuplicateNonZeroScore";
        case ErrorCode::DuplicateItemId: return "DuplicateItemId";
        case ErrorCode::TooShort: return "TooShort";
        case ErrorCode::UnknownItem: return "UnknownItem";
        case ErrorCode::KOutOfRange: return "KOutOfRange";
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::ItemSetMismatch: return "ItemSetMismatch";
        case ErrorCode::EmptyGrid: return "EmptyGrid";
        case ErrorCode::InvalidGrid: return "InvalidGrid";
        case ErrorCode::TooFewPoints: return "TooFewPoints";
        case ErrorCode::InvalidScoreKind: return "InvalidScoreKind";
        case ErrorCode::KDegenerateForChanceCorrection: return "KDegenerateForChanceCorrection";
        case ErrorCode::DegenerateDenominator: return "DegenerateDenominator";
        case ErrorCode::UndefinedCorrelation: return "UndefinedCorrelation";
        case ErrorCode::NoComparablePairs: return "NoComparablePairs";
        case ErrorCode::DeltaTooLarge: return "DeltaTooLarge";
        case ErrorCode::OddN: return "OddN";
        case ErrorCode::InvalidArgument: return "InvalidArgument";
        case ErrorCode::NonPositiveAlpha: return "NonPositiveAlpha";
        case ErrorCode::ScoreOverflow: return "ScoreOverflow";
        case ErrorCode::EpsilonTooSmallForPrecision: return "EpsilonTooSmallForPrecision";
    }
    return "Unknown";
}

bool is_domain_error(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::KDegenerateForChanceCorrection:
        case ErrorCode::DegenerateDenominator:
        case ErrorCode::UndefinedCorrelation:
        case ErrorCode::NoComparablePairs:
            return true;
        default:
            return false;
    }
}

}  // namespace rankfuzz
