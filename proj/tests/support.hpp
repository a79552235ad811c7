#pragma once

#include <algorithm>
#include <cstddef>
#include <random>
#include <string>
#include <vector>

#include "rankfuzz/ranking.hpp"
#include "rankfuzz/synthetic.hpp"

namespace rankfuzz::testing {

inline Ranking make(std::vector<double> scores, TieMode mode = TieMode::Strict) {
    auto ids = synthetic_ids(scores.size());
    return Ranking::create(std::move(ids), std::move(scores), mode);
}

/// Distinct positive scores in random order.
inline std::vector<double> random_scores(std::mt19937_64& rng, std::size_t n) {
    std::uniform_real_distribution<double> u(0.01, 10.0);
    std::vector<double> v(n);
    for (std::size_t i = 0; i < n; ++i) {
        v[i] = u(rng) + 1e-7 * static_cast<double>(i);
    }
    return v;
}

/// Like random_scores but with a random number of items set to zero.
inline std::vector<double> random_zero_tail_scores(std::mt19937_64& rng, std::size_t n) {
    auto v = random_scores(rng, n);
    std::vector<std::size_t> idx(n);
    for (std::size_t i = 0; i < n; ++i) {
        idx[i] = i;
    }
    std::shuffle(idx.begin(), idx.end(), rng);
    const std::size_t zeros = std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
    for (std::size_t i = 0; i < zeros; ++i) {
        v[idx[i]] = 0.0;
    }
    return v;
}

struct RandomPair {
    Ranking r;
    Ranking s;
};

/// Random pair over x1..xn; `zero_tail` makes both permissive with zero scores.
inline RandomPair random_pair(std::mt19937_64& rng, std::size_t n, bool zero_tail) {
    if (zero_tail) {
        return {make(random_zero_tail_scores(rng, n), TieMode::Permissive),
                make(random_zero_tail_scores(rng, n), TieMode::Permissive)};
    }
    return {make(random_scores(rng, n)), make(random_scores(rng, n))};
}

}  // namespace rankfuzz::testing
