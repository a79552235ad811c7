#include "rankfuzz/fuji.hpp"

#include <algorithm>
#include <charconv>
#include <cstdint>

#include "rankfuzz/error.hpp"

namespace rankfuzz {

namespace {

double fuzzy(double score, std::size_t rank, std::size_t k, double kth) {
    if (rank <= k) {
        return 1.0;
    }
    return kth > 0.0 ? score / kth : 0.0;
}

bool zero_cut(const AlignedPair& p, std::size_t k1, std::size_t k2) {
    return p.kth_r(k1) == 0.0 && p.kth_s(k2) == 0.0;
}

}  // namespace

KGrid KGrid::explicit_points(std::vector<std::size_t> points) {
    if (points.empty()) {
        throw Error(ErrorCode::EmptyGrid, "explicit grid has no points");
    }
    return KGrid(Kind::Explicit, std::move(points));
}

KGrid KGrid::parse(std::string_view text) {
    if (text == "full") {
        return full();
    }
    if (text == "geometric") {
        return geometric();
    }
    std::vector<std::size_t> points;
    std::size_t pos = 0;
    while (pos <= text.size() && !text.empty()) {
        std::size_t end = text.find(',', pos);
        if (end == std::string_view::npos) {
            end = text.size();
        }
        const std::string_view field = text.substr(pos, end - pos);
        std::size_t value = 0;
        const auto res = std::from_chars(field.data(), field.data() + field.size(), value);
        if (field.empty() || res.ec != std::errc{} || res.ptr != field.data() + field.size()) {
            throw Error(ErrorCode::InvalidGrid, "bad grid '" + std::string(text) +
                                                    "': expected full, geometric or k1,k2,...");
        }
        points.push_back(value);
        pos = end + 1;
    }
    return explicit_points(std::move(points));
}

std::vector<std::size_t> KGrid::expand(std::size_t n) const {
    std::vector<std::size_t> out;
    switch (kind_) {
        case Kind::Full:
            out.resize(n);
            for (std::size_t k = 1; k <= n; ++k) {
                out[k - 1] = k;
            }
            break;
        case Kind::Geometric:
            for (std::size_t k = 1; k <= n; k *= 2) {
                out.push_back(k);
            }
            if (out.back() != n) {
                out.push_back(n);
            }
            break;
        case Kind::Explicit:
            for (std::size_t i = 0; i < points_.size(); ++i) {
                if (points_[i] < 1 || points_[i] > n || (i > 0 && points_[i] <= points_[i - 1])) {
                    throw Error(ErrorCode::InvalidGrid,
                                "grid points must increase strictly within 1.." + std::to_string(n));
                }
            }
            out = points_;
            break;
    }
    if (out.empty()) {
        throw Error(ErrorCode::EmptyGrid, "grid expands to no points");
    }
    return out;
}

std::string KGrid::describe() const {
    switch (kind_) {
        case Kind::Full: return "full";
        case Kind::Geometric: return "geometric";
        case Kind::Explicit: break;
    }
    std::string s;
    for (std::size_t i = 0; i < points_.size(); ++i) {
        s += (i ? "," : "") + std::to_string(points_[i]);
    }
    return s;
}

double membership(const Ranking& r, std::size_t k, std::string_view item) {
    check_k(k, r.size());
    const std::size_t i = r.index_of(item);
    return fuzzy(r.scores()[i], r.rank_at(i), k, r.score_at_rank(k));
}

double jaccard_at(const AlignedPair& p, std::size_t k) {
    check_k(k, p.size());
    if (zero_cut(p, k, k)) {
        return 1.0;
    }
    const auto inter = static_cast<double>(p.overlap(k));
    return inter / (2.0 * static_cast<double>(k) - inter);
}

double jaccard_at(const Ranking& r, const Ranking& s, std::size_t k) {
    return jaccard_at(AlignedPair(r, s), k);
}

namespace {

double fuji_two_cut(const AlignedPair& p, std::size_t k1, std::size_t k2) {
    check_k(k1, p.size());
    check_k(k2, p.size());
    if (zero_cut(p, k1, k2)) {
        return 1.0;
    }
    const double kth_r = p.kth_r(k1);
    const double kth_s = p.kth_s(k2);
    double min_sum = 0.0;
    double max_sum = 0.0;
    auto add = [&](std::size_t x) {
        const double a = fuzzy(p.score_r(x), p.rank_r(x), k1, kth_r);
        const double b = fuzzy(p.score_s(x), p.rank_s(x), k2, kth_s);
        min_sum += std::min(a, b);
        max_sum += std::max(a, b);
    };
    for (std::size_t j = 1; j <= k1; ++j) {
        add(p.item_at_rank_r(j));
    }
    for (std::size_t j = 1; j <= k2; ++j) {
        const std::size_t x = p.item_at_rank_s(j);
        if (p.rank_r(x) > k1) {
            add(x);
        }
    }
    return min_sum / max_sum;
}

}  // namespace

double fuji_at(const AlignedPair& p, std::size_t k) {
    return fuji_two_cut(p, k, k);
}

double fuji_at(const Ranking& r, const Ranking& s, std::size_t k) {
    return fuji_two_cut(AlignedPair(r, s), k, k);
}

double fuji_at2(const Ranking& r, const Ranking& s, std::size_t k1, std::size_t k2) {
    return fuji_two_cut(AlignedPair(r, s), k1, k2);
}

Curve similarity_curve(const AlignedPair& p, ScoreKind kind, const KGrid& grid) {
    if (kind != ScoreKind::Fuji && kind != ScoreKind::Jaccard) {
        throw Error(ErrorCode::InvalidScoreKind,
                    "similarity_curve handles fuji and jaccard, not " + std::string(to_string(kind)));
    }
    const std::size_t n = p.size();
    Curve curve{kind, n, grid.expand(n), {}};
    curve.values.assign(curve.grid.size(), 1.0);

    enum : std::uint8_t { kOutside, kInD, kInI };
    std::vector<std::uint8_t> where(n, kOutside);
    std::vector<std::size_t> slot(n, 0);  // position of an item inside D
    std::vector<std::size_t> diff;        // D: in exactly one of the top sets
    diff.reserve(n);
    std::size_t inter = 0;                // |I|

    std::size_t next = 0;
    for (std::size_t k = 1; k < n && next < curve.grid.size(); ++k) {
        // Both cuts inside the zero tail: every remaining value is 1.
        if (p.kth_r(k) == 0.0 && p.kth_s(k) == 0.0) {
            break;
        }
        for (const std::size_t x : {p.item_at_rank_r(k), p.item_at_rank_s(k)}) {
            if (where[x] == kOutside) {
                where[x] = kInD;
                slot[x] = diff.size();
                diff.push_back(x);
            } else {
                const std::size_t last = diff.back();
                diff[slot[x]] = last;
                slot[last] = slot[x];
                diff.pop_back();
                where[x] = kInI;
                ++inter;
            }
        }
        if (curve.grid[next] != k) {
            continue;
        }
        double size_i = static_cast<double>(inter);
        if (kind == ScoreKind::Fuji) {
            const double kth_r = p.kth_r(k);
            const double kth_s = p.kth_s(k);
            for (const std::size_t x : diff) {
                const double a = fuzzy(p.score_r(x), p.rank_r(x), k, kth_r);
                const double b = fuzzy(p.score_s(x), p.rank_s(x), k, kth_s);
                size_i += std::min(a, b);
            }
        }
        curve.values[next] = size_i / static_cast<double>(inter + diff.size());
        ++next;
    }
    return curve;
}

Curve similarity_curve(const Ranking& r, const Ranking& s, ScoreKind kind, const KGrid& grid) {
    return similarity_curve(AlignedPair(r, s), kind, grid);
}

double auc(const Curve& c) {
    const std::size_t points = c.values.size();
    if (points < 2) {
        throw Error(ErrorCode::TooFewPoints, "AUC needs at least 2 curve points, got " +
                                                 std::to_string(points));
    }
    double area = 0.5 * (c.values.front() + c.values.back());
    for (std::size_t i = 1; i + 1 < points; ++i) {
        area += c.values[i];
    }
    return area / static_cast<double>(points - 1);
}

}  // namespace rankfuzz
