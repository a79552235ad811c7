#include "rankfuzz/pair.hpp"

#include "rankfuzz/error.hpp"

namespace rankfuzz {

AlignedPair::AlignedPair(const Ranking& r, const Ranking& s) : n_(r.size()) {
    if (r.size() != s.size()) {
        throw Error(ErrorCode::ItemSetMismatch, "rankings have " + std::to_string(r.size()) +
                                                    " and " + std::to_string(s.size()) + " items");
    }
    // s index -> r index
    std::vector<std::size_t> to_r(n_);
    for (std::size_t j = 0; j < n_; ++j) {
        const std::string& id = s.items()[j];
        if (!r.contains(id)) {
            throw Error(ErrorCode::ItemSetMismatch, "item '" + id + "' only in the second ranking");
        }
        to_r[j] = r.index_of(id);
    }

    score_r_ = r.scores();
    score_s_.resize(n_);
    rank_r_.resize(n_);
    rank_s_.resize(n_);
    by_rank_r_ = r.order();
    by_rank_s_.resize(n_);
    for (std::size_t i = 0; i < n_; ++i) {
        rank_r_[i] = r.rank_at(i);
    }
    for (std::size_t j = 0; j < n_; ++j) {
        score_s_[to_r[j]] = s.scores()[j];
        rank_s_[to_r[j]] = s.rank_at(j);
        by_rank_s_[s.rank_at(j) - 1] = to_r[j];
    }
}

std::size_t AlignedPair::overlap(std::size_t k) const {
    std::size_t c = 0;
    for (std::size_t j = 0; j < k; ++j) {
        c += rank_s_[by_rank_r_[j]] <= k ? 1 : 0;
    }
    return c;
}

std::vector<std::size_t> AlignedPair::union_members(std::size_t k) const {
    std::vector<std::size_t> u(by_rank_r_.begin(), by_rank_r_.begin() + static_cast<std::ptrdiff_t>(k));
    for (std::size_t j = 0; j < k; ++j) {
        const std::size_t x = by_rank_s_[j];
        if (rank_r_[x] > k) {
            u.push_back(x);
        }
    }
    return u;
}

}  // namespace rankfuzz
