#include "rankfuzz/benchmark.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <span>

#include "rankfuzz/error.hpp"

namespace rankfuzz {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

double hamming_value(std::size_t c, std::size_t k, std::size_t n) {
    return 1.0 - 2.0 * static_cast<double>(k - c) / static_cast<double>(n);
}

double pog_value(std::size_t c, std::size_t k) {
    return static_cast<double>(c) / static_cast<double>(k);
}

double chance_value(std::size_t c, std::size_t k, std::size_t n) {
    if (k >= n) {
        throw Error(ErrorCode::KDegenerateForChanceCorrection,
                    "chance-corrected overlap is undefined at k = n = " + std::to_string(n));
    }
    const double kd = static_cast<double>(k);
    const double nd = static_cast<double>(n);
    return (static_cast<double>(c) * nd - kd * kd) / (kd * (nd - kd));
}

double lustgarten_value(std::size_t c, std::size_t k, std::size_t n) {
    const std::size_t forced = 2 * k > n ? 2 * k - n : 0;
    const std::size_t den = k - forced;
    if (den == 0) {
        throw Error(ErrorCode::DegenerateDenominator,
                    "Lustgarten denominator vanishes at k = " + std::to_string(k));
    }
    const double kd = static_cast<double>(k);
    const double nd = static_cast<double>(n);
    return (static_cast<double>(c) * nd - kd * kd) / (nd * static_cast<double>(den));
}

double pearson_on(const AlignedPair& p, std::span<const std::size_t> members) {
    if (members.size() < 2) {
        throw Error(ErrorCode::UndefinedCorrelation, "fewer than 2 items in the evaluation set");
    }
    double mean_r = 0.0;
    double mean_s = 0.0;
    for (const std::size_t x : members) {
        mean_r += p.score_r(x);
        mean_s += p.score_s(x);
    }
    mean_r /= static_cast<double>(members.size());
    mean_s /= static_cast<double>(members.size());
    double srr = 0.0;
    double sss = 0.0;
    double srs = 0.0;
    for (const std::size_t x : members) {
        const double dr = p.score_r(x) - mean_r;
        const double ds = p.score_s(x) - mean_s;
        srr += dr * dr;
        sss += ds * ds;
        srs += dr * ds;
    }
    if (srr == 0.0 || sss == 0.0) {
        throw Error(ErrorCode::UndefinedCorrelation, "zero variance on the evaluation set");
    }
    return std::clamp(srs / std::sqrt(srr * sss), -1.0, 1.0);
}

int sign(double v) {
    return (v > 0.0) - (v < 0.0);
}

/// +1 concordant, -1 discordant, 0 tied in either ranking.
int concordance(const AlignedPair& p, std::size_t x, std::size_t y) {
    return sign(p.score_r(x) - p.score_r(y)) * sign(p.score_s(x) - p.score_s(y));
}

double gamma_value(std::int64_t concordant, std::int64_t discordant) {
    if (concordant + discordant == 0) {
        throw Error(ErrorCode::NoComparablePairs, "no concordant or discordant pairs");
    }
    return static_cast<double>(concordant - discordant) /
           static_cast<double>(concordant + discordant);
}

}  // namespace

double hamming_at(const AlignedPair& p, std::size_t k) {
    check_k(k, p.size());
    return hamming_value(p.overlap(k), k, p.size());
}

double pog_at(const AlignedPair& p, std::size_t k) {
    check_k(k, p.size());
    return pog_value(p.overlap(k), k);
}

double chance_corrected_overlap_at(const AlignedPair& p, std::size_t k) {
    check_k(k, p.size());
    return chance_value(p.overlap(k), k, p.size());
}

double lustgarten_at(const AlignedPair& p, std::size_t k) {
    check_k(k, p.size());
    return lustgarten_value(p.overlap(k), k, p.size());
}

double correlation_at(const AlignedPair& p, std::size_t k) {
    check_k(k, p.size());
    const auto u = p.union_members(k);
    return pearson_on(p, u);
}

double gamma_at(const AlignedPair& p, std::size_t k) {
    check_k(k, p.size());
    const auto u = p.union_members(k);
    std::int64_t concordant = 0;
    std::int64_t discordant = 0;
    for (std::size_t a = 0; a < u.size(); ++a) {
        for (std::size_t b = a + 1; b < u.size(); ++b) {
            const int c = concordance(p, u[a], u[b]);
            concordant += c > 0;
            discordant += c < 0;
        }
    }
    return gamma_value(concordant, discordant);
}

double hamming_at(const Ranking& r, const Ranking& s, std::size_t k) {
    return hamming_at(AlignedPair(r, s), k);
}
double pog_at(const Ranking& r, const Ranking& s, std::size_t k) {
    return pog_at(AlignedPair(r, s), k);
}
double chance_corrected_overlap_at(const Ranking& r, const Ranking& s, std::size_t k) {
    return chance_corrected_overlap_at(AlignedPair(r, s), k);
}
double lustgarten_at(const Ranking& r, const Ranking& s, std::size_t k) {
    return lustgarten_at(AlignedPair(r, s), k);
}
double correlation_at(const Ranking& r, const Ranking& s, std::size_t k) {
    return correlation_at(AlignedPair(r, s), k);
}
double gamma_at(const Ranking& r, const Ranking& s, std::size_t k) {
    return gamma_at(AlignedPair(r, s), k);
}

double point_score(const AlignedPair& p, std::size_t k, ScoreKind kind) {
    switch (kind) {
        case ScoreKind::Fuji: return fuji_at(p, k);
        case ScoreKind::Jaccard: return jaccard_at(p, k);
        case ScoreKind::Hamming: return hamming_at(p, k);
        case ScoreKind::Pog: return pog_at(p, k);
        case ScoreKind::ChanceCorrectedOverlap: return chance_corrected_overlap_at(p, k);
        case ScoreKind::Lustgarten: return lustgarten_at(p, k);
        case ScoreKind::Correlation: return correlation_at(p, k);
        case ScoreKind::Gamma: return gamma_at(p, k);
    }
    throw Error(ErrorCode::InvalidScoreKind, "unhandled score kind");
}

double point_score(const Ranking& r, const Ranking& s, std::size_t k, ScoreKind kind) {
    return point_score(AlignedPair(r, s), k, kind);
}

Curve benchmark_curve(const AlignedPair& p, ScoreKind kind, const KGrid& grid) {
    if (kind == ScoreKind::Fuji || kind == ScoreKind::Jaccard) {
        return similarity_curve(p, kind, grid);
    }
    const std::size_t n = p.size();
    Curve curve{kind, n, grid.expand(n), {}};
    curve.values.assign(curve.grid.size(), kNaN);

    std::vector<bool> in_r(n, false);
    std::vector<bool> in_s(n, false);
    std::vector<std::size_t> members;  // T_r(k) ∪ T_s(k) in joining order
    members.reserve(n);
    std::size_t overlap = 0;
    std::int64_t concordant = 0;
    std::int64_t discordant = 0;

    auto join = [&](std::size_t x) {
        if (kind == ScoreKind::Gamma) {
            for (const std::size_t y : members) {
                const int c = concordance(p, x, y);
                concordant += c > 0;
                discordant += c < 0;
            }
        }
        members.push_back(x);
    };

    std::size_t next = 0;
    for (std::size_t k = 1; k <= n && next < curve.grid.size(); ++k) {
        const std::size_t xr = p.item_at_rank_r(k);
        const std::size_t xs = p.item_at_rank_s(k);
        in_r[xr] = true;
        if (!in_s[xr]) {
            join(xr);
        } else {
            ++overlap;
        }
        in_s[xs] = true;
        if (!in_r[xs]) {
            join(xs);
        } else {
            ++overlap;
        }
        if (curve.grid[next] != k) {
            continue;
        }
        try {
            switch (kind) {
                case ScoreKind::Hamming: curve.values[next] = hamming_value(overlap, k, n); break;
                case ScoreKind::Pog: curve.values[next] = pog_value(overlap, k); break;
                case ScoreKind::ChanceCorrectedOverlap:
                    curve.values[next] = chance_value(overlap, k, n);
                    break;
                case ScoreKind::Lustgarten:
                    curve.values[next] = lustgarten_value(overlap, k, n);
                    break;
                case ScoreKind::Correlation: curve.values[next] = pearson_on(p, members); break;
                case ScoreKind::Gamma: curve.values[next] = gamma_value(concordant, discordant); break;
                default: break;
            }
        } catch (const Error& e) {
            if (!is_domain_error(e.code())) {
                throw;
            }
        }
        ++next;
    }
    return curve;
}

Curve benchmark_curve(const Ranking& r, const Ranking& s, ScoreKind kind, const KGrid& grid) {
    return benchmark_curve(AlignedPair(r, s), kind, grid);
}

}  // namespace rankfuzz
