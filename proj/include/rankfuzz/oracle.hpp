#pragma once

#include <cstddef>
#include <functional>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "rankfuzz/ranking.hpp"
#include "rankfuzz/score_kind.hpp"

/// Reference evaluators written straight from the defining sums. Nothing here
/// calls into the incremental curve code or AlignedPair, so agreement between
/// the two is a real check.
namespace rankfuzz::oracle {

/// FUJI or Jaccard at k from explicitly materialized top sets. Shares the
/// zero-cut rule of the core scores: 1 when both k-th scores are zero.
double naive_point_score(const Ranking& r, const Ranking& s, std::size_t k, ScoreKind kind);

/// FUJI over T_r(k1) ∪ T_s(k2).
double naive_fuji2(const Ranking& r, const Ranking& s, std::size_t k1, std::size_t k2);

/// Naive FUJI/Jaccard curve on the full grid 1..n.
std::vector<double> naive_curve(const Ranking& r, const Ranking& s, ScoreKind kind);

/// Plain trapezoid of a full-grid curve, scaled to [0, 1].
double naive_auc(std::span<const double> curve);

/// Same score multiset with ranks reflected: the item at rank i receives the
/// score r_(n+1-i).
Ranking reversed_of(const Ranking& r);

/// Reassign r's scores so that items.at(i) receives scores[perm[i]]
/// (i.e. the ranking π(r) for an index permutation).
Ranking permuted(const Ranking& r, std::span<const std::size_t> perm);

/// Closed-form minimum Jaccard AUC over all rankings against a fixed one:
/// n / (4(n-1)) for even n, (n^2 + 1) / (4 n (n-1)) for odd n.
double min_auc_jaccard(std::size_t n);

/// Calls fn for every permutation of 0..n-1 in lexicographic order.
void for_each_permutation(std::size_t n, const std::function<void(std::span<const std::size_t>)>& fn);

/// Minimum full-grid Jaccard AUC over all n! rankings against a fixed one.
double exhaustive_min_auc_jaccard(std::size_t n);

/// Mean Jaccard(r, π(r), k) over all n! permutations π.
double enumerated_expected_jaccard(std::size_t n, std::size_t k);

struct GeometricRankingSpec {
    std::vector<std::string> order;  ///< item ids, top first when alpha < 1
    double alpha = 0.5;
};

/// Scores 1, alpha, alpha^2, ... along spec.order. Throws NonPositiveAlpha,
/// InvalidArgument (alpha == 1) or ScoreOverflow when a score leaves the
/// positive finite range.
Ranking geometric_ranking(const GeometricRankingSpec& spec);

/// Reversed pair whose FUJI values at every k < n sit within O(epsilon) of the
/// Jaccard minimum: s increases over x1..xn with
///   s_1 = 1,
///   s_a = (s_1 + ... + s_{a-1}) / epsilon                      for 2 <= a <= n/2,
///   s_a = max((s_1 + ... + s_{n+1-a}) / epsilon, 2 s_{a-1})     for a > n/2,
/// and r_i = s_{n+1-i}, so every ratio term of the score is at most epsilon.
/// Even n only (OddN); EpsilonTooSmallForPrecision when the scores overflow.
std::pair<Ranking, Ranking> no_fuji_minimizer_witness(std::size_t n, double epsilon);

// The four chance-corrected overlap scores in their usual published forms,
// for lists of equal length n with top-k overlap c.
double npog(std::size_t c, std::size_t k, std::size_t n);
double kuncheva(std::size_t c, std::size_t k, std::size_t n);
double wald(std::size_t c, std::size_t k1, std::size_t k2, std::size_t n);
/// Pearson correlation of two explicit 0/1 membership vectors of length n.
double indicator_pearson(std::span<const int> a, std::span<const int> b);
/// Builds the two membership vectors for (c, k, n) and correlates them.
double indicator_pearson(std::size_t c, std::size_t k, std::size_t n);

/// Quick battery of the oracle checks; writes one line per check and returns
/// true when all pass. Backs the hidden `selftest` CLI command.
bool run_selftest(std::ostream& out);

}  // namespace rankfuzz::oracle
