#include "rankfuzz/report.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <limits>
#include <thread>

#include "json.hpp"
#include "rankfuzz/benchmark.hpp"
#include "rankfuzz/error.hpp"
#include "rankfuzz/ranking_io.hpp"

namespace rankfuzz {

namespace {

std::string printf_double(const char* fmt, double v) {
    if (std::isnan(v)) {
        return "nan";
    }
    char buf[64];
    std::snprintf(buf, sizeof buf, fmt, v);
    return buf;
}

}  // namespace

std::string format_sig12(double v) {
    return printf_double("%.12g", v);
}

std::string format_fixed12(double v) {
    return printf_double("%.12f", v);
}

std::string curve_to_csv(const Curve& c) {
    std::string out = "k,value\n";
    for (std::size_t i = 0; i < c.grid.size(); ++i) {
        out += std::to_string(c.grid[i]);
        out += ',';
        out += format_sig12(c.values[i]);
        out += '\n';
    }
    return out;
}

std::string curve_to_json(const Curve& c) {
    nlohmann::ordered_json doc;
    doc["score"] = std::string(to_string(c.kind));
    doc["n"] = c.n;
    auto& points = doc["points"] = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < c.grid.size(); ++i) {
        nlohmann::ordered_json point;
        point["k"] = c.grid[i];
        if (std::isnan(c.values[i])) {
            point["value"] = nullptr;
        } else {
            point["value"] = c.values[i];
        }
        points.push_back(std::move(point));
    }
    return doc.dump(2) + "\n";
}

Curve parse_curve_csv(std::string_view bytes) {
    Curve c;
    std::size_t pos = 0;
    std::size_t line_no = 0;
    while (pos < bytes.size()) {
        std::size_t end = bytes.find('\n', pos);
        if (end == std::string_view::npos) {
            end = bytes.size();
        }
        std::string_view line = bytes.substr(pos, end - pos);
        pos = end + 1;
        ++line_no;
        if (!line.empty() && line.back() == '\r') {
            line.remove_suffix(1);
        }
        if (line.empty()) {
            continue;
        }
        if (line_no == 1) {
            if (line != "k,value") {
                throw Error(ErrorCode::ParseError, "line 1: expected header 'k,value'");
            }
            continue;
        }
        const std::size_t comma = line.find(',');
        if (comma == std::string_view::npos) {
            throw Error(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": missing ','");
        }
        std::size_t k = 0;
        const std::string_view kf = line.substr(0, comma);
        const std::string_view vf = line.substr(comma + 1);
        double v = 0.0;
        const auto rk = std::from_chars(kf.data(), kf.data() + kf.size(), k);
        const auto rv = std::from_chars(vf.data(), vf.data() + vf.size(), v);
        if (rk.ec != std::errc{} || rk.ptr != kf.data() + kf.size() || rv.ec != std::errc{} ||
            rv.ptr != vf.data() + vf.size()) {
            throw Error(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": bad row");
        }
        c.grid.push_back(k);
        c.values.push_back(v);
    }
    c.n = c.grid.empty() ? 0 : c.grid.back();
    return c;
}

std::vector<NamedRanking> load_ranking_dir(const std::filesystem::path& dir, TieMode mode) {
    if (!std::filesystem::is_directory(dir)) {
        throw Error(ErrorCode::InvalidArgument, "'" + dir.string() + "' is not a directory");
    }
    std::vector<std::filesystem::path> files;
    for (const auto& entry : std::filesystem::directory_iterator(dir)) {
        const auto ext = entry.path().extension();
        if (entry.is_regular_file() && (ext == ".csv" || ext == ".json")) {
            files.push_back(entry.path());
        }
    }
    std::sort(files.begin(), files.end());
    std::vector<NamedRanking> out;
    out.reserve(files.size());
    for (const auto& f : files) {
        out.push_back({f.stem().string(), load_ranking(f, mode)});
    }
    return out;
}

SimilarityMatrix compute_matrix(std::span<const NamedRanking> rankings, ScoreKind kind,
                                const KGrid& grid, std::size_t jobs) {
    const std::size_t m = rankings.size();
    if (m < 2) {
        throw Error(ErrorCode::InvalidArgument, "a similarity matrix needs at least 2 rankings");
    }
    SimilarityMatrix out;
    out.kind = kind;
    out.grid = grid.describe();
    for (const auto& nr : rankings) {
        out.names.push_back(nr.name);
    }
    out.values.assign(m, std::vector<double>(m, 0.0));

    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = i; j < m; ++j) {
            pairs.emplace_back(i, j);
        }
    }
    // Slot per pair; the first failure (by pair index) is reported.
    std::vector<double> results(pairs.size(), 0.0);
    std::vector<std::exception_ptr> errors(pairs.size());
    std::atomic<std::size_t> cursor{0};
    auto worker = [&] {
        for (std::size_t idx = cursor++; idx < pairs.size(); idx = cursor++) {
            const auto [i, j] = pairs[idx];
            try {
                try {
                    results[idx] = auc(benchmark_curve(rankings[i].ranking, rankings[j].ranking, kind, grid));
                } catch (const Error& e) {
                    throw Error(e.code(), "'" + rankings[i].name + "' vs '" + rankings[j].name +
                                              "': " + e.message());
                }
            } catch (...) {
                errors[idx] = std::current_exception();
            }
        }
    };
    const std::size_t threads = std::clamp<std::size_t>(jobs, 1, pairs.size());
    {
        std::vector<std::jthread> pool;
        for (std::size_t t = 1; t < threads; ++t) {
            pool.emplace_back(worker);
        }
        worker();
    }
    for (const auto& e : errors) {
        if (e) {
            std::rethrow_exception(e);
        }
    }
    for (std::size_t idx = 0; idx < pairs.size(); ++idx) {
        const auto [i, j] = pairs[idx];
        out.values[i][j] = results[idx];
        out.values[j][i] = results[idx];
    }
    return out;
}

SimilarityMatrix average_matrices(std::span<const SimilarityMatrix> matrices) {
    if (matrices.empty()) {
        throw Error(ErrorCode::InvalidArgument, "nothing to average");
    }
    SimilarityMatrix out = matrices.front();
    for (std::size_t d = 1; d < matrices.size(); ++d) {
        if (matrices[d].names != out.names) {
            throw Error(ErrorCode::ItemSetMismatch,
                        "datasets hold differently named rankings; cannot average");
        }
        for (std::size_t i = 0; i < out.names.size(); ++i) {
            for (std::size_t j = 0; j < out.names.size(); ++j) {
                out.values[i][j] += matrices[d].values[i][j];
            }
        }
    }
    for (auto& row : out.values) {
        for (double& v : row) {
            v /= static_cast<double>(matrices.size());
        }
    }
    return out;
}

std::string matrix_to_csv(const SimilarityMatrix& m) {
    std::string out;
    for (const auto& name : m.names) {
        out += ',';
        out += name;
    }
    out += '\n';
    for (std::size_t i = 0; i < m.names.size(); ++i) {
        out += m.names[i];
        for (const double v : m.values[i]) {
            out += ',';
            out += format_sig12(v);
        }
        out += '\n';
    }
    return out;
}

}  // namespace rankfuzz
