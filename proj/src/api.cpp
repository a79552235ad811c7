#include "rankfuzz/api.hpp"

#include "rankfuzz/benchmark.hpp"

namespace rankfuzz::api {

namespace {

Ranking to_ranking(std::span<const std::string> ids, std::span<const double> scores, TieMode mode) {
    return Ranking::create({ids.begin(), ids.end()}, {scores.begin(), scores.end()}, mode);
}

std::vector<std::string> to_strings(std::span<const std::int64_t> ids) {
    std::vector<std::string> out;
    out.reserve(ids.size());
    for (const std::int64_t id : ids) {
        out.push_back(std::to_string(id));
    }
    return out;
}

}  // namespace

double score(std::span<const std::string> ids_a, std::span<const double> scores_a,
             std::span<const std::string> ids_b, std::span<const double> scores_b, std::size_t k,
             ScoreKind kind, TieMode mode) {
    return point_score(to_ranking(ids_a, scores_a, mode), to_ranking(ids_b, scores_b, mode), k, kind);
}

double score(std::span<const std::int64_t> ids_a, std::span<const double> scores_a,
             std::span<const std::int64_t> ids_b, std::span<const double> scores_b, std::size_t k,
             ScoreKind kind, TieMode mode) {
    const auto a = to_strings(ids_a);
    const auto b = to_strings(ids_b);
    return score(a, scores_a, b, scores_b, k, kind, mode);
}

CurveAndAuc curve_and_auc(std::span<const std::string> ids_a, std::span<const double> scores_a,
                          std::span<const std::string> ids_b, std::span<const double> scores_b,
                          ScoreKind kind, const KGrid& grid, TieMode mode) {
    Curve c = benchmark_curve(to_ranking(ids_a, scores_a, mode), to_ranking(ids_b, scores_b, mode),
                              kind, grid);
    const double area = auc(c);
    return {std::move(c.grid), std::move(c.values), area};
}

CurveAndAuc curve_and_auc(std::span<const std::int64_t> ids_a, std::span<const double> scores_a,
                          std::span<const std::int64_t> ids_b, std::span<const double> scores_b,
                          ScoreKind kind, const KGrid& grid, TieMode mode) {
    const auto a = to_strings(ids_a);
    const auto b = to_strings(ids_b);
    return curve_and_auc(a, scores_a, b, scores_b, kind, grid, mode);
}

}  // namespace rankfuzz::api
