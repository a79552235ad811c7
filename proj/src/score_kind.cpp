#include "rankfuzz/score_kind.hpp"

#include <string>

#include "rankfuzz/error.hpp"

namespace rankfuzz {

std::string_view to_string(ScoreKind kind) noexcept {
    switch (kind) {
        case ScoreKind::Fuji: return "fuji";
        case ScoreKind::Jaccard: return "jaccard";
        case ScoreKind::Hamming: return "hamming";
        case ScoreKind::Pog: return "pog";
        case ScoreKind::ChanceCorrectedOverlap: return "chance_corrected_overlap";
        case ScoreKind::Lustgarten: return "lustgarten";
        case ScoreKind::Correlation: return "correlation";
        case ScoreKind::Gamma: return "gamma";
    }
    return "unknown";
}

ScoreKind parse_score_kind(std::string_view name) {
    for (const ScoreKind kind : kAllScoreKinds) {
        if (name == to_string(kind)) {
            return kind;
        }
    }
    if (name == "chance_corrected" || name == "npog" || name == "kuncheva" || name == "wald" ||
        name == "pearson") {
        return ScoreKind::ChanceCorrectedOverlap;
    }
    throw Error(ErrorCode::InvalidScoreKind, "unknown score '" + std::string(name) + "'");
}

bool has_maximum_property(ScoreKind kind) noexcept {
    switch (kind) {
        case ScoreKind::Fuji:
        case ScoreKind::Jaccard:
        case ScoreKind::Hamming:
        case ScoreKind::Pog:
        case ScoreKind::Gamma:
            return true;
        default:
            return false;
    }
}

}  // namespace rankfuzz
