#pragma once

#include <cstddef>

#include "rankfuzz/fuji.hpp"
#include "rankfuzz/pair.hpp"
#include "rankfuzz/ranking.hpp"
#include "rankfuzz/score_kind.hpp"

namespace rankfuzz {

// Set-based scores take |∩| = |T_r(k) ∩ T_s(k)| at equal list length n.

/// 1 - |T_r(k) Δ T_s(k)| / n
double hamming_at(const Ranking& r, const Ranking& s, std::size_t k);
/// |∩| / k
double pog_at(const Ranking& r, const Ranking& s, std::size_t k);
/// (|∩| n - k^2) / (k (n - k)); the common value of nPOG, Kuncheva, Wald and
/// indicator Pearson. Throws KDegenerateForChanceCorrection at k == n.
double chance_corrected_overlap_at(const Ranking& r, const Ranking& s, std::size_t k);
/// (|∩| - k^2/n) / (k - max(0, 2k - n)); throws DegenerateDenominator at k == n.
double lustgarten_at(const Ranking& r, const Ranking& s, std::size_t k);
/// Pearson correlation of the two score vectors restricted to T_r(k) ∪ T_s(k).
/// Throws UndefinedCorrelation on fewer than 2 items or zero variance.
double correlation_at(const Ranking& r, const Ranking& s, std::size_t k);
/// Goodman-Kruskal gamma over unordered pairs of T_r(k) ∪ T_s(k); pairs tied
/// in either ranking count as neither. Throws NoComparablePairs.
double gamma_at(const Ranking& r, const Ranking& s, std::size_t k);

double hamming_at(const AlignedPair& p, std::size_t k);
double pog_at(const AlignedPair& p, std::size_t k);
double chance_corrected_overlap_at(const AlignedPair& p, std::size_t k);
double lustgarten_at(const AlignedPair& p, std::size_t k);
double correlation_at(const AlignedPair& p, std::size_t k);
double gamma_at(const AlignedPair& p, std::size_t k);

/// Dispatches to the point score of `kind`. Domain errors propagate.
double point_score(const AlignedPair& p, std::size_t k, ScoreKind kind);
double point_score(const Ranking& r, const Ranking& s, std::size_t k, ScoreKind kind);

/// Curve for any score kind. Points outside a score's domain are NaN; all
/// other errors propagate. Set-based scores, gamma and the union used by
/// correlation are maintained incrementally in one pass over k.
Curve benchmark_curve(const AlignedPair& p, ScoreKind kind, const KGrid& grid);
Curve benchmark_curve(const Ranking& r, const Ranking& s, ScoreKind kind, const KGrid& grid);

}  // namespace rankfuzz
