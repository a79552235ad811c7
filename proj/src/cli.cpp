#include "rankfuzz/cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <thread>

#include "CLI11.hpp"
#include "rankfuzz/benchmark.hpp"
#include "rankfuzz/error.hpp"
#include "rankfuzz/oracle.hpp"
#include "rankfuzz/ranking_io.hpp"
#include "rankfuzz/report.hpp"
#include "rankfuzz/synthetic.hpp"

namespace rankfuzz::cli {

namespace fs = std::filesystem;

namespace {

struct PairOptions {
    std::string a;
    std::string b;
    std::string score = "fuji";
    std::string grid;
    bool strict = false;
};

void add_pair_options(CLI::App* cmd, PairOptions& o, const std::string& default_grid) {
    o.grid = default_grid;
    cmd->add_option("--a", o.a, "first ranking (.csv or .json)")->required();
    cmd->add_option("--b", o.b, "second ranking (.csv or .json)")->required();
    cmd->add_option("--score", o.score,
                    "fuji, jaccard, hamming, pog, chance_corrected, lustgarten, correlation, gamma")
        ->capture_default_str();
    cmd->add_option("--grid", o.grid, "full, geometric, or k1,k2,...")->capture_default_str();
    cmd->add_flag("--strict", o.strict, "reject tied scores, including zeros");
}

TieMode tie_mode(bool strict) {
    return strict ? TieMode::Strict : TieMode::Permissive;
}

Curve pair_curve(const PairOptions& o) {
    const ScoreKind kind = parse_score_kind(o.score);
    const KGrid grid = KGrid::parse(o.grid);
    const Ranking a = load_ranking(o.a, tie_mode(o.strict));
    const Ranking b = load_ranking(o.b, tie_mode(o.strict));
    return benchmark_curve(a, b, kind, grid);
}

void emit(const std::string& text, const std::string& path, std::ostream& out) {
    if (path.empty() || path == "-") {
        out << text;
    } else {
        write_file(path, text);
    }
}

std::size_t default_jobs() {
    if (const char* env = std::getenv("RANKFUZZ_JOBS")) {
        try {
            const long v = std::stol(env);
            if (v > 0) {
                return static_cast<std::size_t>(v);
            }
        } catch (const std::exception&) {
        }
        throw Error(ErrorCode::InvalidArgument, "RANKFUZZ_JOBS must be a positive integer");
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

int exit_for(ErrorCode code) {
    return code == ErrorCode::ItemSetMismatch ? kMismatch : kInputError;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Fuzzy Jaccard (FUJI) and companion similarity scores for scored rankings",
                 "rankfuzz"};
    app.require_subcommand(1);

    PairOptions curve_opts;
    std::string curve_out;
    std::string curve_format;
    auto* curve_cmd = app.add_subcommand("curve", "similarity curve of two rankings");
    add_pair_options(curve_cmd, curve_opts, "full");
    curve_cmd->add_option("--out", curve_out, "output file (default: standard output)");
    curve_cmd->add_option("--format", curve_format, "csv or json (default: from --out, else csv)")
        ->check(CLI::IsMember({"csv", "json"}));

    PairOptions auc_opts;
    auto* auc_cmd = app.add_subcommand("auc", "area under the similarity curve of two rankings");
    add_pair_options(auc_cmd, auc_opts, "geometric");

    std::string matrix_dir;
    std::string matrix_score = "fuji";
    std::string matrix_grid = "geometric";
    std::string matrix_out;
    std::optional<std::size_t> matrix_jobs;
    bool matrix_average = false;
    bool matrix_strict = false;
    auto* matrix_cmd = app.add_subcommand("matrix", "pairwise AUC matrix over a directory of rankings");
    matrix_cmd->add_option("--dir", matrix_dir, "directory of ranking files")->required();
    matrix_cmd->add_option("--score", matrix_score, "score kind")->capture_default_str();
    matrix_cmd->add_option("--grid", matrix_grid, "full, geometric, or k1,k2,...")
        ->capture_default_str();
    matrix_cmd->add_flag("--average", matrix_average,
                         "treat each subdirectory as a dataset and average the matrices");
    matrix_cmd->add_option("--jobs", matrix_jobs, "worker threads (default: RANKFUZZ_JOBS or cores)")
        ->check(CLI::PositiveNumber);
    matrix_cmd->add_option("--out", matrix_out, "output file (default: standard output)");
    matrix_cmd->add_flag("--strict", matrix_strict, "reject tied scores, including zeros");

    std::string synth_scenario;
    std::size_t synth_n = 10;
    double synth_delta = 1.0;
    std::string synth_out = ".";
    bool synth_curves = false;
    auto* synth_cmd = app.add_subcommand("synth", "write the synthetic scenario rankings");
    synth_cmd->add_option("scenario", synth_scenario, "reversed, correlated or two-part")->required();
    synth_cmd->add_option("--n", synth_n, "number of items")->capture_default_str();
    synth_cmd->add_option("--delta", synth_delta, "score step")->capture_default_str();
    synth_cmd->add_option("--out", synth_out, "output directory")->capture_default_str();
    synth_cmd->add_flag("--curves", synth_curves, "also write full-grid FUJI and Jaccard curves");

    std::size_t exp_n = 0;
    std::size_t exp_k = 0;
    bool exp_exact = false;
    bool exp_approx = false;
    auto* exp_cmd = app.add_subcommand("expected", "expected Jaccard between a ranking and a random reordering");
    exp_cmd->add_option("--n", exp_n, "number of items")->required();
    exp_cmd->add_option("--k", exp_k, "cut point")->required();
    auto* exact_flag = exp_cmd->add_flag("--exact", exp_exact, "hypergeometric sum (default)");
    exp_cmd->add_flag("--approx", exp_approx, "k / (2n - k)")->excludes(exact_flag);

    auto* selftest_cmd = app.add_subcommand("selftest", "run the built-in oracle checks");
    selftest_cmd->group("");

    std::vector<const char*> argv;
    for (const auto& a : args) {
        argv.push_back(a.c_str());
    }
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kInputError;
    }

    try {
        if (*curve_cmd) {
            const Curve c = pair_curve(curve_opts);
            const bool json = curve_format.empty()
                                  ? fs::path(curve_out).extension() == ".json"
                                  : curve_format == "json";
            emit(json ? curve_to_json(c) : curve_to_csv(c), curve_out, out);
        } else if (*auc_cmd) {
            out << format_fixed12(auc(pair_curve(auc_opts))) << '\n';
        } else if (*matrix_cmd) {
            const ScoreKind kind = parse_score_kind(matrix_score);
            const KGrid grid = KGrid::parse(matrix_grid);
            const std::size_t jobs = matrix_jobs ? *matrix_jobs : default_jobs();
            const TieMode mode = tie_mode(matrix_strict);
            SimilarityMatrix m;
            if (matrix_average) {
                std::vector<fs::path> datasets;
                for (const auto& entry : fs::directory_iterator(matrix_dir)) {
                    if (entry.is_directory()) {
                        datasets.push_back(entry.path());
                    }
                }
                std::sort(datasets.begin(), datasets.end());
                if (datasets.empty()) {
                    throw Error(ErrorCode::InvalidArgument,
                                "--average expects dataset subdirectories in " + matrix_dir);
                }
                std::vector<SimilarityMatrix> per_dataset;
                for (const auto& d : datasets) {
                    const auto rankings = load_ranking_dir(d, mode);
                    try {
                        per_dataset.push_back(compute_matrix(rankings, kind, grid, jobs));
                    } catch (const Error& e) {
                        throw Error(e.code(), d.filename().string() + ": " + e.message());
                    }
                }
                m = average_matrices(per_dataset);
            } else {
                m = compute_matrix(load_ranking_dir(matrix_dir, mode), kind, grid, jobs);
            }
            emit(matrix_to_csv(m), matrix_out, out);
        } else if (*synth_cmd) {
            ScenarioSpec spec{parse_scenario(synth_scenario), synth_n, synth_delta};
            const auto rankings = generate(spec);
            fs::create_directories(synth_out);
            const char* names[] = {"r", "s", "t"};
            for (std::size_t i = 0; i < rankings.size(); ++i) {
                const fs::path p = fs::path(synth_out) / (std::string(names[i]) + ".csv");
                save_ranking(rankings[i], p);
                out << p.string() << '\n';
            }
            if (synth_curves) {
                for (std::size_t i = 1; i < rankings.size(); ++i) {
                    for (const ScoreKind kind : {ScoreKind::Fuji, ScoreKind::Jaccard}) {
                        const fs::path p = fs::path(synth_out) /
                                           ("curve_r_" + std::string(names[i]) + "_" +
                                            std::string(to_string(kind)) + ".csv");
                        write_file(p, curve_to_csv(similarity_curve(rankings[0], rankings[i], kind,
                                                                    KGrid::full())));
                        out << p.string() << '\n';
                    }
                }
            }
        } else if (*exp_cmd) {
            check_k(exp_k, exp_n);
            const double v = exp_approx ? expected_jaccard_approx(exp_n, exp_k)
                                        : expected_jaccard_exact(exp_n, exp_k);
            out << format_fixed12(v) << '\n';
        } else if (*selftest_cmd) {
            return oracle::run_selftest(out) ? kOk : kInternalError;
        }
    } catch (const Error& e) {
        err << "rankfuzz: " << e.what() << '\n';
        return exit_for(e.code());
    } catch (const fs::filesystem_error& e) {
        err << "rankfuzz: " << e.what() << '\n';
        return kInputError;
    } catch (const std::exception& e) {
        err << "rankfuzz: internal error: " << e.what() << '\n';
        return kInternalError;
    }
    return kOk;
}

}  // namespace rankfuzz::cli
