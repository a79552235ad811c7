#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace rankfuzz {

enum class ErrorCode {
    // ranking-core
    LengthMismatch,
    NegativeOrNonFiniteScore,
    DuplicateNonZeroScore,
    DuplicateItemId,
    TooShort,
    UnknownItem,
    KOutOfRange,
    ParseError,
    // scoring
    ItemSetMismatch,
    EmptyGrid,
    InvalidGrid,
    TooFewPoints,
    InvalidScoreKind,
    KDegenerateForChanceCorrection,
    DegenerateDenominator,
    UndefinedCorrelation,
    NoComparablePairs,
    // synthetic / oracle
    DeltaTooLarge,
    OddN,
    InvalidArgument,
    NonPositiveAlpha,
    ScoreOverflow,
    EpsilonTooSmallForPrecision,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Exception carrying a machine-readable code. Every failure raised by the
/// library is an Error; callers branch on code() rather than on message text.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(std::string(to_string(code)) + ": " + message),
          code_(code),
          message_(message) {}

    [[nodiscard]] ErrorCode code() const noexcept { return code_; }
    /// Message without the code prefix.
    [[nodiscard]] const std::string& message() const noexcept { return message_; }

private:
    ErrorCode code_;
    std::string message_;
};

/// True for the per-point domain errors of the benchmark scores, which curves
/// record as undefined values instead of propagating.
bool is_domain_error(ErrorCode code) noexcept;

}  // namespace rankfuzz
