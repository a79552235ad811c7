#include "rankfuzz/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <limits>
#include <numeric>
#include <ostream>
#include <random>
#include <set>

#include "rankfuzz/benchmark.hpp"
#include "rankfuzz/error.hpp"
#include "rankfuzz/fuji.hpp"
#include "rankfuzz/synthetic.hpp"

namespace rankfuzz::oracle {

namespace {

using IdSet = std::set<std::string>;

IdSet top_ids(const Ranking& r, std::size_t k) {
    const auto ids = top_set(r, k).ids();
    return IdSet(ids.begin(), ids.end());
}

void require_same_items(const Ranking& r, const Ranking& s) {
    if (IdSet(r.items().begin(), r.items().end()) != IdSet(s.items().begin(), s.items().end())) {
        throw Error(ErrorCode::ItemSetMismatch, "rankings rank different items");
    }
}

double mu(const Ranking& r, const IdSet& top, double kth, const std::string& id, bool fuzzy) {
    if (top.contains(id)) {
        return 1.0;
    }
    if (!fuzzy || kth <= 0.0) {
        return 0.0;
    }
    return r.scores()[r.index_of(id)] / kth;
}

double ratio_of_sums(const Ranking& r, const Ranking& s, std::size_t k1, std::size_t k2,
                     bool fuzzy) {
    require_same_items(r, s);
    check_k(k1, r.size());
    check_k(k2, s.size());
    const double kth_r = r.score_at_rank(k1);
    const double kth_s = s.score_at_rank(k2);
    if (kth_r == 0.0 && kth_s == 0.0) {
        return 1.0;
    }
    const IdSet tr = top_ids(r, k1);
    const IdSet ts = top_ids(s, k2);
    IdSet all = tr;
    all.insert(ts.begin(), ts.end());
    double num = 0.0;
    double den = 0.0;
    for (const std::string& id : all) {
        const double a = mu(r, tr, kth_r, id, fuzzy);
        const double b = mu(s, ts, kth_s, id, fuzzy);
        num += std::min(a, b);
        den += std::max(a, b);
    }
    return num / den;
}

}  // namespace

double naive_point_score(const Ranking& r, const Ranking& s, std::size_t k, ScoreKind kind) {
    if (kind != ScoreKind::Fuji && kind != ScoreKind::Jaccard) {
        throw Error(ErrorCode::InvalidScoreKind, "naive evaluator covers fuji and jaccard only");
    }
    return ratio_of_sums(r, s, k, k, kind == ScoreKind::Fuji);
}

double naive_fuji2(const Ranking& r, const Ranking& s, std::size_t k1, std::size_t k2) {
    return ratio_of_sums(r, s, k1, k2, true);
}

std::vector<double> naive_curve(const Ranking& r, const Ranking& s, ScoreKind kind) {
    std::vector<double> out(r.size());
    for (std::size_t k = 1; k <= r.size(); ++k) {
        out[k - 1] = naive_point_score(r, s, k, kind);
    }
    return out;
}

double naive_auc(std::span<const double> curve) {
    const std::size_t n = curve.size();
    double sum = (curve.front() + curve.back()) / 2.0;
    for (std::size_t k = 2; k <= n - 1; ++k) {
        sum += curve[k - 1];
    }
    return sum / static_cast<double>(n - 1);
}

Ranking reversed_of(const Ranking& r) {
    const std::size_t n = r.size();
    std::vector<double> scores(n);
    for (std::size_t i = 1; i <= n; ++i) {
        scores[r.order()[i - 1]] = r.score_at_rank(n + 1 - i);
    }
    return Ranking::create(r.items(), std::move(scores), r.mode());
}

Ranking permuted(const Ranking& r, std::span<const std::size_t> perm) {
    std::vector<double> scores(r.size());
    for (std::size_t i = 0; i < r.size(); ++i) {
        scores[i] = r.scores()[perm[i]];
    }
    return Ranking::create(r.items(), std::move(scores), r.mode());
}

double min_auc_jaccard(std::size_t n) {
    if (n < 2) {
        throw Error(ErrorCode::TooShort, "minimum AUC needs n >= 2");
    }
    const double nd = static_cast<double>(n);
    const double factor = 1.0 / (4.0 * (nd - 1.0));
    return n % 2 == 1 ? factor * (nd * nd + 1.0) / nd : factor * nd;
}

void for_each_permutation(std::size_t n,
                          const std::function<void(std::span<const std::size_t>)>& fn) {
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    do {
        fn(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
}

namespace {

Ranking descending_reference(std::size_t n) {
    std::vector<double> scores(n);
    for (std::size_t i = 0; i < n; ++i) {
        scores[i] = static_cast<double>(n - i);
    }
    return Ranking::create(synthetic_ids(n), std::move(scores));
}

}  // namespace

double exhaustive_min_auc_jaccard(std::size_t n) {
    const Ranking r = descending_reference(n);
    double best = std::numeric_limits<double>::infinity();
    for_each_permutation(n, [&](std::span<const std::size_t> perm) {
        const auto curve = naive_curve(r, permuted(r, perm), ScoreKind::Jaccard);
        best = std::min(best, naive_auc(curve));
    });
    return best;
}

double enumerated_expected_jaccard(std::size_t n, std::size_t k) {
    const Ranking r = descending_reference(n);
    double total = 0.0;
    std::size_t count = 0;
    for_each_permutation(n, [&](std::span<const std::size_t> perm) {
        total += naive_point_score(r, permuted(r, perm), k, ScoreKind::Jaccard);
        ++count;
    });
    return total / static_cast<double>(count);
}

Ranking geometric_ranking(const GeometricRankingSpec& spec) {
    if (!(spec.alpha > 0.0)) {
        throw Error(ErrorCode::NonPositiveAlpha, "alpha must be positive");
    }
    if (spec.alpha == 1.0) {
        throw Error(ErrorCode::InvalidArgument, "alpha = 1 makes every score equal");
    }
    std::vector<double> scores(spec.order.size());
    double value = 1.0;
    for (double& s : scores) {
        if (!std::isfinite(value) || value <= 0.0 || value < std::numeric_limits<double>::min()) {
            throw Error(ErrorCode::ScoreOverflow, "geometric scores leave the normal double range");
        }
        s = value;
        value *= spec.alpha;
    }
    return Ranking::create(spec.order, std::move(scores));
}

std::pair<Ranking, Ranking> no_fuji_minimizer_witness(std::size_t n, double epsilon) {
    if (n % 2 != 0) {
        throw Error(ErrorCode::OddN, "the witness construction covers even n only");
    }
    if (n < 2) {
        throw Error(ErrorCode::TooShort, "witness needs n >= 2");
    }
    if (!(epsilon > 0.0) || !(epsilon < 1.0)) {
        throw Error(ErrorCode::InvalidArgument, "epsilon must lie in (0, 1)");
    }
    std::vector<double> s(n + 1, 0.0);  // 1-based
    std::vector<double> prefix(n + 1, 0.0);
    s[1] = 1.0;
    prefix[1] = 1.0;
    const std::size_t half = n / 2;
    for (std::size_t a = 2; a <= n; ++a) {
        if (a <= half) {
            s[a] = prefix[a - 1] / epsilon;
        } else {
            s[a] = std::max(prefix[n + 1 - a] / epsilon, 2.0 * s[a - 1]);
        }
        prefix[a] = prefix[a - 1] + s[a];
        if (!std::isfinite(prefix[a])) {
            throw Error(ErrorCode::EpsilonTooSmallForPrecision,
                        "scores overflow for n = " + std::to_string(n));
        }
    }
    std::vector<double> s_scores(s.begin() + 1, s.end());
    std::vector<double> r_scores(s_scores.rbegin(), s_scores.rend());
    const auto ids = synthetic_ids(n);
    return {Ranking::create(ids, std::move(r_scores)), Ranking::create(ids, std::move(s_scores))};
}

double npog(std::size_t c, std::size_t k, std::size_t n) {
    const double pog = static_cast<double>(c) / static_cast<double>(k);
    const double expected = static_cast<double>(k) / static_cast<double>(n);
    return (pog - expected) / (1.0 - expected);
}

double kuncheva(std::size_t c, std::size_t k, std::size_t n) {
    const double kd = static_cast<double>(k);
    const double nd = static_cast<double>(n);
    return (static_cast<double>(c) * nd - kd * kd) / (kd * (nd - kd));
}

double wald(std::size_t c, std::size_t k1, std::size_t k2, std::size_t n) {
    const double nd = static_cast<double>(n);
    const double prod = static_cast<double>(k1) * static_cast<double>(k2);
    return (static_cast<double>(c) * nd - prod) /
           (nd * static_cast<double>(std::min(k1, k2)) - prod);
}

double indicator_pearson(std::span<const int> a, std::span<const int> b) {
    const double n = static_cast<double>(a.size());
    const double mean_a = std::accumulate(a.begin(), a.end(), 0.0) / n;
    const double mean_b = std::accumulate(b.begin(), b.end(), 0.0) / n;
    double saa = 0.0;
    double sbb = 0.0;
    double sab = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        saa += (a[i] - mean_a) * (a[i] - mean_a);
        sbb += (b[i] - mean_b) * (b[i] - mean_b);
        sab += (a[i] - mean_a) * (b[i] - mean_b);
    }
    return sab / std::sqrt(saa * sbb);
}

double indicator_pearson(std::size_t c, std::size_t k, std::size_t n) {
    std::vector<int> a(n, 0);
    std::vector<int> b(n, 0);
    for (std::size_t i = 0; i < k; ++i) {
        a[i] = 1;
    }
    // c shared members, the other k - c placed after a's block
    for (std::size_t i = 0; i < c; ++i) {
        b[i] = 1;
    }
    for (std::size_t i = 0; i < k - c; ++i) {
        b[k + i] = 1;
    }
    return indicator_pearson(a, b);
}

bool run_selftest(std::ostream& out) {
    bool all = true;
    auto report = [&](const std::string& name, bool ok, double detail) {
        out << (ok ? "PASS " : "FAIL ") << name << " (" << std::setprecision(12) << detail << ")\n";
        all = all && ok;
    };

    {
        const double eps = 1e-9;
        const double alpha = 1e6;
        const auto ids = synthetic_ids(3);
        const Ranking r = Ranking::create(ids, {1.0, 0.5, 1.0 / 3.0});
        const Ranking s = Ranking::create(ids, {1.0 - 2 * eps, 1.0 - eps, 1.0});
        const Ranking t = Ranking::create(ids, {alpha, 1.0, alpha * alpha});
        const double worst = std::max({std::abs(fuji_at(r, s, 1) - 2.0 / 3.0),
                                       std::abs(fuji_at(r, s, 2) - 8.0 / 9.0),
                                       std::abs(fuji_at(r, t, 1) - 1.0 / 6.0),
                                       std::abs(fuji_at(r, t, 2) - 5.0 / 9.0)});
        report("limit values 2/3 8/9 1/6 5/9", worst <= 1e-3, worst);
    }
    {
        std::mt19937_64 rng(20240101);
        double worst = 0.0;
        for (int trial = 0; trial < 50; ++trial) {
            const std::size_t n = 2 + rng() % 40;
            std::uniform_real_distribution<double> u(0.0, 1.0);
            std::vector<double> a(n);
            std::vector<double> b(n);
            for (std::size_t i = 0; i < n; ++i) {
                a[i] = u(rng) + 1e-9 * static_cast<double>(i);
                b[i] = u(rng) + 1e-9 * static_cast<double>(i);
            }
            const auto ids = synthetic_ids(n);
            const Ranking r = Ranking::create(ids, a);
            const Ranking s = Ranking::create(ids, b);
            for (const ScoreKind kind : {ScoreKind::Fuji, ScoreKind::Jaccard}) {
                const Curve c = similarity_curve(r, s, kind, KGrid::full());
                const auto ref = naive_curve(r, s, kind);
                for (std::size_t i = 0; i < n; ++i) {
                    worst = std::max(worst, std::abs(c.values[i] - ref[i]));
                }
            }
        }
        report("incremental curve matches naive sums", worst <= 1e-12, worst);
    }
    {
        double worst = 0.0;
        for (std::size_t n = 2; n <= 7; ++n) {
            worst = std::max(worst, std::abs(exhaustive_min_auc_jaccard(n) - min_auc_jaccard(n)));
        }
        report("minimum Jaccard AUC closed form, n <= 7", worst <= 1e-12, worst);
    }
    {
        double worst = 0.0;
        for (std::size_t n = 3; n <= 30; ++n) {
            for (std::size_t k = 1; k < n; ++k) {
                for (std::size_t c = 0; c <= k; ++c) {
                    if (k - c > n - k) {
                        continue;
                    }
                    const double ref = kuncheva(c, k, n);
                    worst = std::max({worst, std::abs(npog(c, k, n) - ref),
                                      std::abs(wald(c, k, k, n) - ref),
                                      std::abs(indicator_pearson(c, k, n) - ref)});
                }
            }
        }
        report("chance-corrected family agrees", worst <= 1e-12, worst);
    }
    {
        double worst = 0.0;
        for (std::size_t n = 2; n <= 6; ++n) {
            for (std::size_t k = 1; k <= n; ++k) {
                worst = std::max(worst, std::abs(enumerated_expected_jaccard(n, k) -
                                                 expected_jaccard_exact(n, k)));
            }
        }
        report("expected Jaccard matches enumeration, n <= 6", worst <= 1e-12, worst);
    }
    return all;
}

}  // namespace rankfuzz::oracle
