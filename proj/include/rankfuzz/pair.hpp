#pragma once

#include <cstddef>
#include <vector>

#include "rankfuzz/ranking.hpp"

namespace rankfuzz {

/// Two rankings over the same item set, re-indexed into the first ranking's
/// input positions so per-item lookups are plain vector reads.
class AlignedPair {
public:
    /// Throws ItemSetMismatch when the id sets differ.
    AlignedPair(const Ranking& r, const Ranking& s);

    [[nodiscard]] std::size_t size() const noexcept { return n_; }

    [[nodiscard]] double score_r(std::size_t i) const { return score_r_[i]; }
    [[nodiscard]] double score_s(std::size_t i) const { return score_s_[i]; }
    [[nodiscard]] std::size_t rank_r(std::size_t i) const { return rank_r_[i]; }
    [[nodiscard]] std::size_t rank_s(std::size_t i) const { return rank_s_[i]; }

    /// Item (input index of r) at rank k of r / of s.
    [[nodiscard]] std::size_t item_at_rank_r(std::size_t k) const { return by_rank_r_[k - 1]; }
    [[nodiscard]] std::size_t item_at_rank_s(std::size_t k) const { return by_rank_s_[k - 1]; }

    /// Order statistics r_(k) and s_(k).
    [[nodiscard]] double kth_r(std::size_t k) const { return score_r_[by_rank_r_[k - 1]]; }
    [[nodiscard]] double kth_s(std::size_t k) const { return score_s_[by_rank_s_[k - 1]]; }

    [[nodiscard]] const std::vector<double>& scores_r() const noexcept { return score_r_; }
    [[nodiscard]] const std::vector<double>& scores_s() const noexcept { return score_s_; }

    /// |T_r(k) ∩ T_s(k)|.
    [[nodiscard]] std::size_t overlap(std::size_t k) const;

    /// T_r(k) ∪ T_s(k) as item indices: r's top k in rank order, then the
    /// remaining members of s's top k in s-rank order.
    [[nodiscard]] std::vector<std::size_t> union_members(std::size_t k) const;

private:
    std::size_t n_ = 0;
    std::vector<double> score_r_;
    std::vector<double> score_s_;
    std::vector<std::size_t> rank_r_;
    std::vector<std::size_t> rank_s_;
    std::vector<std::size_t> by_rank_r_;
    std::vector<std::size_t> by_rank_s_;
};

}  // namespace rankfuzz
