#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace rankfuzz {

/// How equal scores are treated when building a Ranking.
enum class TieMode {
    Strict,      ///< every score must be distinct
    Permissive,  ///< ties allowed among zero scores only, broken by input position
};

/// An immutable set of items carrying non-negative relevance scores. The
/// ordering is by decreasing score; `order()[i]` is the input index of the
/// item at rank i + 1.
class Ranking {
public:
    /// Validates and builds a ranking. Throws Error on LengthMismatch,
    /// NegativeOrNonFiniteScore, DuplicateNonZeroScore, DuplicateItemId or
    /// TooShort.
    static Ranking create(std::vector<std::string> items, std::vector<double> scores,
                          TieMode mode = TieMode::Strict);

    [[nodiscard]] std::size_t size() const noexcept { return items_.size(); }
    [[nodiscard]] const std::vector<std::string>& items() const noexcept { return items_; }
    [[nodiscard]] const std::vector<double>& scores() const noexcept { return scores_; }
    [[nodiscard]] const std::vector<std::size_t>& order() const noexcept { return order_; }
    [[nodiscard]] TieMode mode() const noexcept { return mode_; }

    /// Input index of an item id, or throws UnknownItem.
    [[nodiscard]] std::size_t index_of(std::string_view item) const;
    [[nodiscard]] bool contains(std::string_view item) const;

    /// 1-based rank of the item at input index `index`.
    [[nodiscard]] std::size_t rank_at(std::size_t index) const { return rank_[index]; }

    /// Score of the item at rank k (1-based): the order statistic r_(k).
    [[nodiscard]] double score_at_rank(std::size_t k) const { return scores_[order_[k - 1]]; }

    friend bool operator==(const Ranking& a, const Ranking& b) {
        return a.items_ == b.items_ && a.scores_ == b.scores_ && a.order_ == b.order_;
    }

private:
    Ranking() = default;

    std::vector<std::string> items_;
    std::vector<double> scores_;
    std::vector<std::size_t> order_;
    std::vector<std::size_t> rank_;
    std::unordered_map<std::string, std::size_t> index_;
    TieMode mode_ = TieMode::Strict;
};

/// The k top-ranked items of a ranking, as input indices in rank order.
struct TopSet {
    const Ranking* parent = nullptr;
    std::size_t k = 0;
    std::vector<std::size_t> members;

    [[nodiscard]] std::vector<std::string> ids() const;
};

Ranking new_ranking(std::vector<std::string> items, std::vector<double> scores,
                    TieMode mode = TieMode::Strict);

/// 1-based rank of `item`; throws UnknownItem.
std::size_t rank_of(const Ranking& r, std::string_view item);

/// First k items of `r` by rank; throws KOutOfRange unless 1 <= k <= n.
TopSet top_set(const Ranking& r, std::size_t k);

/// Same items with every score multiplied by `factor` (> 0).
Ranking scaled(const Ranking& r, double factor);

/// Throws KOutOfRange unless 1 <= k <= n.
void check_k(std::size_t k, std::size_t n);

}  // namespace rankfuzz
