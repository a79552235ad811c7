#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "rankfuzz/pair.hpp"
#include "rankfuzz/ranking.hpp"
#include "rankfuzz/score_kind.hpp"

namespace rankfuzz {

/// Cut-point schedule for a similarity curve.
class KGrid {
public:
    enum class Kind { Full, Geometric, Explicit };

    /// 1, 2, ..., n
    static KGrid full() { return KGrid(Kind::Full, {}); }
    /// 1, 2, 4, ..., 2^m, n with m = floor(log2 n); n is not repeated when it is a power of two.
    static KGrid geometric() { return KGrid(Kind::Geometric, {}); }
    /// Strictly increasing cut points within 1..n (checked by expand()).
    static KGrid explicit_points(std::vector<std::size_t> points);

    /// "full", "geometric", or a comma-separated list such as "1,2,5".
    static KGrid parse(std::string_view text);

    [[nodiscard]] Kind kind() const noexcept { return kind_; }

    /// Concrete cut points for a list of length n. Throws EmptyGrid or InvalidGrid.
    [[nodiscard]] std::vector<std::size_t> expand(std::size_t n) const;

    [[nodiscard]] std::string describe() const;

private:
    KGrid(Kind kind, std::vector<std::size_t> points) : kind_(kind), points_(std::move(points)) {}

    Kind kind_;
    std::vector<std::size_t> points_;
};

/// Similarity values over a grid of cut points. Undefined points (benchmark
/// scores outside their domain) hold NaN.
struct Curve {
    ScoreKind kind = ScoreKind::Fuji;
    std::size_t n = 0;
    std::vector<std::size_t> grid;
    std::vector<double> values;
};

/// Fuzzy membership of `item` in T_r(k): 1 inside the top set, r_i / r_(k)
/// outside it when r_(k) > 0, and 0 otherwise.
double membership(const Ranking& r, std::size_t k, std::string_view item);

// Point scores. When both k-th scores are zero the top sets are cut inside a
// block of tied zeros; the score is then defined as 1, which is exactly the
// value the incremental curve reports after its early break.

double jaccard_at(const Ranking& r, const Ranking& s, std::size_t k);
double jaccard_at(const AlignedPair& p, std::size_t k);

double fuji_at(const Ranking& r, const Ranking& s, std::size_t k);
double fuji_at(const AlignedPair& p, std::size_t k);

/// FUJI over T_r(k1) ∪ T_s(k2), with memberships taken at k1 for r and k2 for s.
double fuji_at2(const Ranking& r, const Ranking& s, std::size_t k1, std::size_t k2);

/// FUJI or Jaccard curve by a single incremental pass that keeps the symmetric
/// difference D and intersection I of the two top sets. Cut points between
/// grid entries still update D and I but skip the membership sums.
/// Worst case O(n^2) on the full grid; O(n * |grid|) otherwise.
Curve similarity_curve(const Ranking& r, const Ranking& s, ScoreKind kind, const KGrid& grid);
Curve similarity_curve(const AlignedPair& p, ScoreKind kind, const KGrid& grid);

/// Trapezoidal area with unit spacing between consecutive grid points,
/// divided by (points - 1). On the full grid this is the standard
/// (1/(n-1)) * ((f_1 + f_n)/2 + sum_{k=2}^{n-1} f_k). NaN values propagate.
double auc(const Curve& c);

}  // namespace rankfuzz
