#pragma once

#include <cstddef>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "rankfuzz/fuji.hpp"
#include "rankfuzz/ranking.hpp"
#include "rankfuzz/score_kind.hpp"

namespace rankfuzz {

/// 12 significant digits (%.12g); NaN prints as `nan`.
std::string format_sig12(double v);
/// 12 digits after the point (%.12f); NaN prints as `nan`.
std::string format_fixed12(double v);

/// `k,value` header, one row per grid point.
std::string curve_to_csv(const Curve& c);
/// {"score": ..., "n": ..., "points": [{"k": 1, "value": 0.5}, ...]}; NaN is null.
std::string curve_to_json(const Curve& c);

/// Reads back a `k,value` file. `nan` cells become NaN.
Curve parse_curve_csv(std::string_view bytes);

struct NamedRanking {
    std::string name;
    Ranking ranking;
};

/// Every *.csv and *.json file in `dir`, sorted by file name, labelled by stem.
std::vector<NamedRanking> load_ranking_dir(const std::filesystem::path& dir, TieMode mode);

struct SimilarityMatrix {
    std::vector<std::string> names;
    std::vector<std::vector<double>> values;  ///< square, symmetric
    ScoreKind kind = ScoreKind::Fuji;
    std::string grid;
};

/// Pairwise AUC of every two rankings, diagonal included. Pairs are spread
/// over `jobs` threads; each result lands in a fixed slot, so the output does
/// not depend on scheduling. Throws ItemSetMismatch naming the offending pair.
SimilarityMatrix compute_matrix(std::span<const NamedRanking> rankings, ScoreKind kind,
                                const KGrid& grid, std::size_t jobs);

/// Entrywise mean; all matrices must carry the same names in the same order.
SimilarityMatrix average_matrices(std::span<const SimilarityMatrix> matrices);

/// First row and column are labels; cells use 12 significant digits.
std::string matrix_to_csv(const SimilarityMatrix& m);

}  // namespace rankfuzz
