#include <gtest/gtest.h>

#include <random>

#include "rankfuzz/error.hpp"
#include "rankfuzz/ranking.hpp"
#include "rankfuzz/ranking_io.hpp"
#include "rankfuzz/synthetic.hpp"
#include "support.hpp"

using namespace rankfuzz;
using rankfuzz::testing::make;

namespace {

ErrorCode code_of(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    ADD_FAILURE() << "no error raised";
    return ErrorCode::InvalidArgument;
}

}  // namespace

TEST(Ranking, OrdersByDecreasingScore) {
    const Ranking r = new_ranking({"a", "b", "c"}, {1.0, 0.5, 1.0 / 3.0});
    EXPECT_EQ(r.order(), (std::vector<std::size_t>{0, 1, 2}));
    EXPECT_EQ(rank_of(r, "a"), 1u);
    EXPECT_EQ(rank_of(r, "c"), 3u);

    const Ranking s = new_ranking({"a", "b", "c"}, {0.1, 3.0, 2.0});
    EXPECT_EQ(s.order(), (std::vector<std::size_t>{1, 2, 0}));
    EXPECT_DOUBLE_EQ(s.score_at_rank(1), 3.0);
}

TEST(Ranking, StrictRejectsTies) {
    EXPECT_EQ(code_of([] { new_ranking({"a", "b"}, {0.5, 0.5}); }), ErrorCode::DuplicateNonZeroScore);
    EXPECT_EQ(code_of([] { new_ranking({"a", "b", "c"}, {5, 0, 0}, TieMode::Strict); }),
              ErrorCode::DuplicateNonZeroScore);
    EXPECT_EQ(code_of([] { new_ranking({"a", "b", "c"}, {5, 2, 2}, TieMode::Permissive); }),
              ErrorCode::DuplicateNonZeroScore);
}

TEST(Ranking, PermissiveBreaksZeroTiesByPosition) {
    const Ranking r = new_ranking({"a", "b", "c"}, {5, 0, 0}, TieMode::Permissive);
    EXPECT_EQ(r.order(), (std::vector<std::size_t>{0, 1, 2}));
    EXPECT_EQ(rank_of(r, "c"), 3u);

    const Ranking s = new_ranking({"z", "y", "x", "w"}, {0, 0, 1, 0}, TieMode::Permissive);
    EXPECT_EQ(s.order(), (std::vector<std::size_t>{2, 0, 1, 3}));
}

TEST(Ranking, ValidationErrors) {
    EXPECT_EQ(code_of([] { new_ranking({"a", "b"}, {1.0}); }), ErrorCode::LengthMismatch);
    EXPECT_EQ(code_of([] { new_ranking({"a"}, {1.0}); }), ErrorCode::TooShort);
    EXPECT_EQ(code_of([] { new_ranking({"a", "b"}, {1.0, -1.0}); }),
              ErrorCode::NegativeOrNonFiniteScore);
    EXPECT_EQ(code_of([] { new_ranking({"a", "b"}, {1.0, std::nan("")}); }),
              ErrorCode::NegativeOrNonFiniteScore);
    EXPECT_EQ(code_of([] { new_ranking({"a", "b"}, {1.0, HUGE_VAL}); }),
              ErrorCode::NegativeOrNonFiniteScore);
    EXPECT_EQ(code_of([] { new_ranking({"a", "a"}, {1.0, 2.0}); }), ErrorCode::DuplicateItemId);
}

TEST(Ranking, RankOfUnknownItem) {
    const Ranking r = make({1, 2, 3});
    EXPECT_EQ(code_of([&] { (void)rank_of(r, "nope"); }), ErrorCode::UnknownItem);
}

TEST(Ranking, ReversedScenarioRanksReflect) {
    const auto [r, s] = gen_reversed(10, 1.0);
    EXPECT_EQ(rank_of(s, "x1"), 10u);
    for (const auto& id : r.items()) {
        EXPECT_EQ(rank_of(s, id), 11 - rank_of(r, id));
    }
}

TEST(Ranking, RankIsBijection) {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t n = 2 + rng() % 30;
        const Ranking r = make(rankfuzz::testing::random_zero_tail_scores(rng, n), TieMode::Permissive);
        std::vector<bool> seen(n + 1, false);
        for (const auto& id : r.items()) {
            const std::size_t k = rank_of(r, id);
            ASSERT_GE(k, 1u);
            ASSERT_LE(k, n);
            ASSERT_FALSE(seen[k]);
            seen[k] = true;
        }
        for (std::size_t i = 0; i + 1 < n; ++i) {
            ASSERT_GE(r.scores()[r.order()[i]], r.scores()[r.order()[i + 1]]);
        }
    }
}

TEST(TopSet, Prefixes) {
    const Ranking r = new_ranking({"a", "b", "c"}, {1.0, 0.5, 1.0 / 3.0});
    EXPECT_EQ(top_set(r, 2).ids(), (std::vector<std::string>{"a", "b"}));
    EXPECT_EQ(top_set(r, 3).members.size(), 3u);
    EXPECT_EQ(code_of([&] { top_set(r, 0); }), ErrorCode::KOutOfRange);
    EXPECT_EQ(code_of([&] { top_set(r, 4); }), ErrorCode::KOutOfRange);
}

TEST(TopSet, ReversedHalvesAreDisjoint) {
    const auto [r, s] = gen_reversed(10, 1.0);
    const auto a = top_set(r, 5).ids();
    const auto b = top_set(s, 5).ids();
    for (const auto& id : a) {
        EXPECT_EQ(std::find(b.begin(), b.end(), id), b.end());
    }
}

TEST(RankingIo, ParsesCsvAndJson) {
    const Ranking c = parse_ranking("item,score\na,1.0\nb,0.5", RankingFormat::Csv);
    const Ranking j = parse_ranking(R"({"a":1.0,"b":0.5})", RankingFormat::Json);
    EXPECT_EQ(c, j);
    EXPECT_EQ(c.size(), 2u);
    EXPECT_EQ(c.order(), (std::vector<std::size_t>{0, 1}));
}

TEST(RankingIo, CsvToleratesCrlfAndBlankLines) {
    const Ranking c = parse_ranking("item,score\r\na,1\r\n\r\nb,2\r\n", RankingFormat::Csv);
    EXPECT_EQ(rank_of(c, "b"), 1u);
}

TEST(RankingIo, CsvErrorsCarryLocation) {
    EXPECT_EQ(code_of([] { parse_ranking("item,score\na,-1\nb,2", RankingFormat::Csv); }),
              ErrorCode::NegativeOrNonFiniteScore);
    try {
        parse_ranking("item,score\na,1\nb,abc\n", RankingFormat::Csv);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::ParseError);
        EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos);
    }
    EXPECT_EQ(code_of([] { parse_ranking("id,value\na,1\n", RankingFormat::Csv); }),
              ErrorCode::ParseError);
    EXPECT_EQ(code_of([] { parse_ranking("item,score\na,1,2\n", RankingFormat::Csv); }),
              ErrorCode::ParseError);
    EXPECT_EQ(code_of([] { parse_ranking("", RankingFormat::Csv); }), ErrorCode::ParseError);
}

TEST(RankingIo, JsonErrors) {
    EXPECT_EQ(code_of([] { parse_ranking("[1,2]", RankingFormat::Json); }), ErrorCode::ParseError);
    EXPECT_EQ(code_of([] { parse_ranking(R"({"a":"x","b":1})", RankingFormat::Json); }),
              ErrorCode::ParseError);
    EXPECT_EQ(code_of([] { parse_ranking(R"({"a":1,"a":2})", RankingFormat::Json); }),
              ErrorCode::DuplicateItemId);
    EXPECT_EQ(code_of([] { parse_ranking("{", RankingFormat::Json); }), ErrorCode::ParseError);
}

TEST(RankingIo, JsonInsertionOrderDecidesZeroTies) {
    const Ranking r = parse_ranking(R"({"q":0,"p":0,"z":3})", RankingFormat::Json);
    EXPECT_EQ(r.items(), (std::vector<std::string>{"q", "p", "z"}));
    EXPECT_EQ(rank_of(r, "q"), 2u);
    EXPECT_EQ(rank_of(r, "p"), 3u);
}

TEST(RankingIo, StrictFlagRejectsZeroTies) {
    EXPECT_EQ(code_of([] {
                  parse_ranking("item,score\na,0\nb,0\n", RankingFormat::Csv, TieMode::Strict);
              }),
              ErrorCode::DuplicateNonZeroScore);
}

TEST(RankingIo, RoundTripBothFormats) {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t n = 2 + rng() % 40;
        auto scores = rankfuzz::testing::random_zero_tail_scores(rng, n);
        // awkward values survive the shortest round-trip form
        scores[0] = 0.1 + 0.2;
        const Ranking r = make(scores, TieMode::Permissive);
        for (const auto fmt : {RankingFormat::Csv, RankingFormat::Json}) {
            const Ranking back = parse_ranking(serialize_ranking(r, fmt), fmt);
            ASSERT_EQ(back, r);
            // same bytes, same order
            ASSERT_EQ(parse_ranking(serialize_ranking(r, fmt), fmt).order(), back.order());
        }
    }
}
