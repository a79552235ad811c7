#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "rankfuzz/ranking.hpp"

namespace rankfuzz {

enum class Scenario { Reversed, Correlated, TwoPart };

/// "reversed", "correlated" or "two-part" (also "two_part"); throws InvalidArgument.
Scenario parse_scenario(std::string_view name);

struct ScenarioSpec {
    Scenario scenario = Scenario::Reversed;
    std::size_t n = 10;
    double delta = 1.0;  ///< unused by TwoPart
};

/// Item ids x1..xn.
std::vector<std::string> synthetic_ids(std::size_t n);

/// r = (100, 100 - delta, ..., 100 - (n-1) delta) over x1..xn and s holding the
/// same scores in reverse, so rank_s(x_i) = n + 1 - rank_r(x_i).
/// Requires (n - 1) * delta < 100 (DeltaTooLarge) and delta > 0.
std::pair<Ranking, Ranking> gen_reversed(std::size_t n, double delta);

/// Pairs of items share a block score and swap order between r and s:
/// r = (b1, b1 - delta, b2, b2 - delta, ...), s_{2i} = r_{2i-1}, s_{2i-1} = r_{2i}.
/// Block tops start at 100 and step down by min(20, 80 / (n/2 - 1)), which is
/// the printed (100, 80, ..., 20) layout at n = 10 and stays above 20 for
/// larger n. Requires even n (OddN) and 0 < delta < block step (DeltaTooLarge).
std::pair<Ranking, Ranking> gen_correlated(std::size_t n, double delta);

/// Step between consecutive block tops used by gen_correlated.
double correlated_block_step(std::size_t n);

struct TwoPartRankings {
    Ranking r;  ///< x1, ..., xn
    Ranking s;  ///< x_{n/2+1}, ..., xn, x1, ..., x_{n/2}
    Ranking t;  ///< xn, ..., x1
};

/// Orders as above with harmonic scores: the item at rank p scores 1/p.
TwoPartRankings gen_two_part(std::size_t n);

/// Rankings of a scenario in output order (two or three of them).
std::vector<Ranking> generate(const ScenarioSpec& spec);

/// E_π[Jaccard(r, π(r), k)] for a uniform permutation π: the hypergeometric
/// sum Σ_ρ P(|∩| = ρ) ρ / (2k - ρ), evaluated with log-space binomials.
double expected_jaccard_exact(std::size_t n, std::size_t k);

/// k / (2n - k)
double expected_jaccard_approx(std::size_t n, std::size_t k);

}  // namespace rankfuzz
