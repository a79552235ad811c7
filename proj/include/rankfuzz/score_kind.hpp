#pragma once

#include <array>
#include <string_view>

namespace rankfuzz {

enum class ScoreKind {
    Fuji,
    Jaccard,
    Hamming,
    Pog,
    ChanceCorrectedOverlap,  ///< nPOG / Kuncheva / Wald / Pearson at equal list lengths
    Lustgarten,
    Correlation,
    Gamma,
};

inline constexpr std::array<ScoreKind, 8> kAllScoreKinds = {
    ScoreKind::Fuji,   ScoreKind::Jaccard,    ScoreKind::Hamming,     ScoreKind::Pog,
    ScoreKind::ChanceCorrectedOverlap, ScoreKind::Lustgarten, ScoreKind::Correlation,
    ScoreKind::Gamma,
};

std::string_view to_string(ScoreKind kind) noexcept;

/// Accepts the canonical names plus `chance_corrected`, `npog`, `kuncheva`,
/// `wald` and `pearson` for the chance-corrected family. Throws InvalidScoreKind.
ScoreKind parse_score_kind(std::string_view name);

/// Kinds that reach 1 exactly when both top sets agree at every k.
bool has_maximum_property(ScoreKind kind) noexcept;

}  // namespace rankfuzz
