#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <random>

#include "rankfuzz/error.hpp"
#include "rankfuzz/ranking_io.hpp"
#include "rankfuzz/report.hpp"
#include "rankfuzz/synthetic.hpp"
#include "support.hpp"

using namespace rankfuzz;
namespace fs = std::filesystem;

namespace {

std::vector<NamedRanking> random_named(std::size_t count, std::size_t n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<NamedRanking> out;
    for (std::size_t i = 0; i < count; ++i) {
        out.push_back({"m" + std::to_string(i),
                       rankfuzz::testing::make(rankfuzz::testing::random_scores(rng, n))});
    }
    return out;
}

struct TempDir {
    fs::path path;
    explicit TempDir(const std::string& name) : path(fs::temp_directory_path() / name) {
        fs::remove_all(path);
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
};

}  // namespace

TEST(Format, Numbers) {
    EXPECT_EQ(format_sig12(0.2), "0.2");
    EXPECT_EQ(format_sig12(10.0 / 36.0), "0.277777777778");
    EXPECT_EQ(format_sig12(1.0), "1");
    EXPECT_EQ(format_sig12(std::nan("")), "nan");
    EXPECT_EQ(format_fixed12(1.0), "1.000000000000");
    EXPECT_EQ(format_fixed12(1.0 / 3.0), "0.333333333333");
    EXPECT_EQ(format_fixed12(std::nan("")), "nan");
}

TEST(CurveIo, CsvAndJson) {
    const Curve c{ScoreKind::ChanceCorrectedOverlap, 3, {1, 2, 3}, {0.5, -0.25, std::nan("")}};
    EXPECT_EQ(curve_to_csv(c), "k,value\n1,0.5\n2,-0.25\n3,nan\n");
    const std::string json = curve_to_json(c);
    EXPECT_NE(json.find("\"score\": \"chance_corrected_overlap\""), std::string::npos) << json;
    EXPECT_NE(json.find("\"n\": 3"), std::string::npos);
    EXPECT_NE(json.find("\"value\": -0.25"), std::string::npos);
    EXPECT_NE(json.find("\"value\": null"), std::string::npos);
    const Curve back = parse_curve_csv(curve_to_csv(c));
    EXPECT_EQ(back.grid, c.grid);
    EXPECT_EQ(back.values[0], 0.5);
    EXPECT_TRUE(std::isnan(back.values[2]));
    EXPECT_THROW(parse_curve_csv("k,value\n1\n"), Error);
}

TEST(Matrix, SymmetricDeterministicUnitDiagonal) {
    const auto rankings = random_named(5, 40, 83);
    for (const ScoreKind kind : {ScoreKind::Fuji, ScoreKind::Jaccard, ScoreKind::Hamming, ScoreKind::Pog}) {
        const auto one = compute_matrix(rankings, kind, KGrid::geometric(), 1);
        const auto four = compute_matrix(rankings, kind, KGrid::geometric(), 4);
        ASSERT_EQ(one.values, four.values);
        for (std::size_t i = 0; i < 5; ++i) {
            EXPECT_EQ(one.values[i][i], 1.0);
            for (std::size_t j = 0; j < 5; ++j) {
                EXPECT_EQ(one.values[i][j], one.values[j][i]);
            }
        }
    }
}

TEST(Matrix, DiagonalIsComputedNotAssumed) {
    const auto rankings = random_named(2, 10, 89);
    const auto m = compute_matrix(rankings, ScoreKind::Lustgarten, KGrid::parse("1,2,5"), 2);
    EXPECT_LT(m.values[0][0], 1.0);
    EXPECT_EQ(m.values[0][1], m.values[1][0]);
}

TEST(Matrix, MismatchNamesPair) {
    std::vector<NamedRanking> rankings = random_named(2, 4, 97);
    rankings.push_back({"odd", Ranking::create({"a", "b", "c", "d"}, {4, 3, 2, 1})});
    try {
        compute_matrix(rankings, ScoreKind::Fuji, KGrid::full(), 2);
        FAIL() << "expected ItemSetMismatch";
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::ItemSetMismatch);
        EXPECT_NE(std::string(e.what()).find("odd"), std::string::npos);
    }
}

TEST(Matrix, AverageAndCsv) {
    SimilarityMatrix a{{"p", "q"}, {{1, 0.5}, {0.5, 1}}, ScoreKind::Fuji, "full"};
    SimilarityMatrix b{{"p", "q"}, {{1, 0.25}, {0.25, 1}}, ScoreKind::Fuji, "full"};
    const std::vector<SimilarityMatrix> both{a, b};
    const auto avg = average_matrices(both);
    EXPECT_EQ(avg.values[0][1], 0.375);
    EXPECT_EQ(matrix_to_csv(avg), ",p,q\np,1,0.375\nq,0.375,1\n");
    SimilarityMatrix c{{"p", "r"}, {{1, 0.5}, {0.5, 1}}, ScoreKind::Fuji, "full"};
    const std::vector<SimilarityMatrix> bad{a, c};
    EXPECT_THROW(average_matrices(bad), Error);
}

TEST(RankingDir, LoadsSortedByName) {
    TempDir dir("rankfuzz_test_report_dir");
    const auto [r, s] = gen_reversed(4, 1.0);
    save_ranking(s, dir.path / "zeta.csv");
    save_ranking(r, dir.path / "alpha.json");
    write_file(dir.path / "notes.txt", "ignored");
    const auto loaded = load_ranking_dir(dir.path, TieMode::Permissive);
    ASSERT_EQ(loaded.size(), 2u);
    EXPECT_EQ(loaded[0].name, "alpha");
    EXPECT_EQ(loaded[1].name, "zeta");
    EXPECT_EQ(loaded[0].ranking, r);
    EXPECT_EQ(loaded[1].ranking, s);
}
