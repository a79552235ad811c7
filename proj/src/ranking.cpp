#include "rankfuzz/ranking.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "rankfuzz/error.hpp"

namespace rankfuzz {

Ranking Ranking::create(std::vector<std::string> items, std::vector<double> scores, TieMode mode) {
    if (items.size() != scores.size()) {
        throw Error(ErrorCode::LengthMismatch, std::to_string(items.size()) + " items but " +
                                                   std::to_string(scores.size()) + " scores");
    }
    if (items.size() < 2) {
        throw Error(ErrorCode::TooShort, "a ranking needs at least 2 items, got " +
                                             std::to_string(items.size()));
    }
    for (std::size_t i = 0; i < scores.size(); ++i) {
        if (!std::isfinite(scores[i]) || scores[i] < 0.0) {
            throw Error(ErrorCode::NegativeOrNonFiniteScore,
                        "item '" + items[i] + "' has score " + std::to_string(scores[i]));
        }
    }

    Ranking r;
    r.index_.reserve(items.size());
    for (std::size_t i = 0; i < items.size(); ++i) {
        if (!r.index_.emplace(items[i], i).second) {
            throw Error(ErrorCode::DuplicateItemId, "item '" + items[i] + "' appears twice");
        }
    }

    r.order_.resize(items.size());
    std::iota(r.order_.begin(), r.order_.end(), std::size_t{0});
    // Stable: equal scores keep input position.
    std::stable_sort(r.order_.begin(), r.order_.end(),
                     [&](std::size_t a, std::size_t b) { return scores[a] > scores[b]; });

    for (std::size_t i = 1; i < r.order_.size(); ++i) {
        const std::size_t prev = r.order_[i - 1];
        const std::size_t cur = r.order_[i];
        if (scores[prev] == scores[cur] && (mode == TieMode::Strict || scores[cur] != 0.0)) {
            throw Error(ErrorCode::DuplicateNonZeroScore,
                        "items '" + items[prev] + "' and '" + items[cur] + "' share score " +
                            std::to_string(scores[cur]));
        }
    }

    r.rank_.resize(items.size());
    for (std::size_t i = 0; i < r.order_.size(); ++i) {
        r.rank_[r.order_[i]] = i + 1;
    }
    r.items_ = std::move(items);
    r.scores_ = std::move(scores);
    r.mode_ = mode;
    return r;
}

std::size_t Ranking::index_of(std::string_view item) const {
    const auto it = index_.find(std::string(item));
    if (it == index_.end()) {
        throw Error(ErrorCode::UnknownItem, "item '" + std::string(item) + "' is not ranked");
    }
    return it->second;
}

bool Ranking::contains(std::string_view item) const {
    return index_.contains(std::string(item));
}

std::vector<std::string> TopSet::ids() const {
    std::vector<std::string> out;
    out.reserve(members.size());
    for (const std::size_t m : members) {
        out.push_back(parent->items()[m]);
    }
    return out;
}

Ranking new_ranking(std::vector<std::string> items, std::vector<double> scores, TieMode mode) {
    return Ranking::create(std::move(items), std::move(scores), mode);
}

std::size_t rank_of(const Ranking& r, std::string_view item) {
    return r.rank_at(r.index_of(item));
}

void check_k(std::size_t k, std::size_t n) {
    if (k < 1 || k > n) {
        throw Error(ErrorCode::KOutOfRange,
                    "k = " + std::to_string(k) + " outside 1.." + std::to_string(n));
    }
}

TopSet top_set(const Ranking& r, std::size_t k) {
    check_k(k, r.size());
    TopSet t{&r, k, {}};
    t.members.assign(r.order().begin(), r.order().begin() + static_cast<std::ptrdiff_t>(k));
    return t;
}

Ranking scaled(const Ranking& r, double factor) {
    if (!(factor > 0.0) || !std::isfinite(factor)) {
        throw Error(ErrorCode::InvalidArgument, "scale factor must be positive and finite");
    }
    std::vector<double> scores = r.scores();
    for (double& s : scores) {
        s *= factor;
    }
    return Ranking::create(r.items(), std::move(scores), r.mode());
}

}  // namespace rankfuzz
