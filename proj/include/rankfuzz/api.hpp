#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "rankfuzz/fuji.hpp"
#include "rankfuzz/ranking.hpp"
#include "rankfuzz/score_kind.hpp"

/// Array-in, array-out entry points for foreign-language bindings. They only
/// marshal into Rankings and delegate, so results are bit-identical to the
/// core calls.
namespace rankfuzz::api {

double score(std::span<const std::string> ids_a, std::span<const double> scores_a,
             std::span<const std::string> ids_b, std::span<const double> scores_b, std::size_t k,
             ScoreKind kind, TieMode mode = TieMode::Permissive);

double score(std::span<const std::int64_t> ids_a, std::span<const double> scores_a,
             std::span<const std::int64_t> ids_b, std::span<const double> scores_b, std::size_t k,
             ScoreKind kind, TieMode mode = TieMode::Permissive);

struct CurveAndAuc {
    std::vector<std::size_t> k;
    std::vector<double> values;
    double auc = 0.0;
};

CurveAndAuc curve_and_auc(std::span<const std::string> ids_a, std::span<const double> scores_a,
                          std::span<const std::string> ids_b, std::span<const double> scores_b,
                          ScoreKind kind, const KGrid& grid, TieMode mode = TieMode::Permissive);

CurveAndAuc curve_and_auc(std::span<const std::int64_t> ids_a, std::span<const double> scores_a,
                          std::span<const std::int64_t> ids_b, std::span<const double> scores_b,
                          ScoreKind kind, const KGrid& grid, TieMode mode = TieMode::Permissive);

}  // namespace rankfuzz::api
