#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>

#include "rankfuzz/benchmark.hpp"
#include "rankfuzz/error.hpp"
#include "rankfuzz/fuji.hpp"
#include "rankfuzz/oracle.hpp"
#include "rankfuzz/synthetic.hpp"

using namespace rankfuzz;

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

std::vector<std::string> order_ids(const Ranking& r) {
    std::vector<std::string> out;
    for (std::size_t k = 1; k <= r.size(); ++k) {
        out.push_back(r.items()[r.order()[k - 1]]);
    }
    return out;
}

}  // namespace

TEST(Scenario, Parse) {
    EXPECT_EQ(parse_scenario("reversed"), Scenario::Reversed);
    EXPECT_EQ(parse_scenario("correlated"), Scenario::Correlated);
    EXPECT_EQ(parse_scenario("two-part"), Scenario::TwoPart);
    EXPECT_EQ(parse_scenario("two_part"), Scenario::TwoPart);
    EXPECT_EQ(code_of([] { parse_scenario("random"); }), ErrorCode::InvalidArgument);
}

TEST(GenReversed, Scores) {
    const auto [r, s] = gen_reversed(10, 1.0);
    for (std::size_t i = 0; i < 10; ++i) {
        EXPECT_EQ(r.scores()[i], 100.0 - static_cast<double>(i));
        EXPECT_EQ(s.scores()[i], 91.0 + static_cast<double>(i));
        EXPECT_EQ(rank_of(s, r.items()[i]), 11 - rank_of(r, r.items()[i]));
    }
    const auto [a, b] = gen_reversed(2, 5.0);
    EXPECT_EQ(order_ids(a), (std::vector<std::string>{"x1", "x2"}));
    EXPECT_EQ(order_ids(b), (std::vector<std::string>{"x2", "x1"}));
}

TEST(GenReversed, Errors) {
    EXPECT_EQ(code_of([] { gen_reversed(10, 11.2); }), ErrorCode::DeltaTooLarge);
    EXPECT_EQ(code_of([] { gen_reversed(10, 0.0); }), ErrorCode::InvalidArgument);
}

TEST(GenReversed, FujiApproachesOneAndIsMonotoneInDelta) {
    double prev_min = 2.0;
    for (const double delta : {0.001, 0.01, 0.1, 1.0, 5.0, 10.0}) {
        const auto [r, s] = gen_reversed(10, delta);
        const Curve c = similarity_curve(r, s, ScoreKind::Fuji, KGrid::full());
        const double lowest = *std::min_element(c.values.begin(), c.values.end());
        EXPECT_LT(lowest, prev_min);
        prev_min = lowest;
    }
    for (std::size_t k = 1; k <= 10; ++k) {
        double prev = 2.0;
        for (const double delta : {0.001, 0.01, 0.1, 1.0, 5.0, 10.0}) {
            const auto [r, s] = gen_reversed(10, delta);
            const double v = fuji_at(r, s, k);
            EXPECT_LE(v, prev);
            prev = v;
        }
    }
    const auto [r, s] = gen_reversed(10, 1e-6);
    for (std::size_t k = 1; k <= 10; ++k) {
        EXPECT_GT(fuji_at(r, s, k), 1.0 - 1e-6);
    }
}

TEST(GenCorrelated, Scores) {
    const auto [r, s] = gen_correlated(10, 1.0);
    EXPECT_EQ(r.scores(), (std::vector<double>{100, 99, 80, 79, 60, 59, 40, 39, 20, 19}));
    EXPECT_EQ(s.scores(), (std::vector<double>{99, 100, 79, 80, 59, 60, 39, 40, 19, 20}));

    const auto [a, b] = gen_correlated(4, 1.0);
    EXPECT_EQ(a.scores(), (std::vector<double>{100, 99, 80, 79}));
    EXPECT_EQ(b.scores(), (std::vector<double>{99, 100, 79, 80}));
}

TEST(GenCorrelated, BlocksDescendLinearlyToTwenty) {
    EXPECT_EQ(correlated_block_step(2), 20.0);
    EXPECT_EQ(correlated_block_step(10), 20.0);
    EXPECT_EQ(correlated_block_step(20), 80.0 / 9.0);
    const auto [r, s] = gen_correlated(20, 1.0);
    EXPECT_EQ(r.scores().front(), 100.0);
    EXPECT_NEAR(r.scores()[18], 20.0, 1e-12);
    EXPECT_NEAR(r.scores()[19], 19.0, 1e-12);
}

TEST(GenCorrelated, Errors) {
    EXPECT_EQ(code_of([] { gen_correlated(9, 1.0); }), ErrorCode::OddN);
    EXPECT_EQ(code_of([] { gen_correlated(10, 20.0); }), ErrorCode::DeltaTooLarge);
    EXPECT_EQ(code_of([] { gen_correlated(10, -1.0); }), ErrorCode::InvalidArgument);
}

TEST(GenCorrelated, JaccardOscillatesAndFujiIsMoreStable) {
    for (const std::size_t n : {4u, 10u, 20u, 50u}) {
        const auto [r, s] = gen_correlated(n, 1.0);
        const Curve j = similarity_curve(r, s, ScoreKind::Jaccard, KGrid::full());
        const Curve f = similarity_curve(r, s, ScoreKind::Fuji, KGrid::full());
        for (std::size_t k = 2; k <= n; k += 2) {
            EXPECT_EQ(j.values[k - 1], 1.0);
        }
        for (std::size_t k = 1; k < n; k += 2) {
            EXPECT_LT(j.values[k - 1], 1.0);
        }
        const auto [jlo, jhi] = std::minmax_element(j.values.begin(), j.values.end());
        const auto [flo, fhi] = std::minmax_element(f.values.begin(), f.values.end());
        EXPECT_LT(*fhi - *flo, *jhi - *jlo) << "n = " << n;
    }
    const auto [r, s] = gen_correlated(10, 1.0);
    EXPECT_EQ(jaccard_at(r, s, 1), 0.0);
    EXPECT_EQ(jaccard_at(r, s, 2), 1.0);
    EXPECT_EQ(jaccard_at(r, s, 3), 0.5);
    EXPECT_EQ(jaccard_at(r, s, 4), 1.0);
}

TEST(GenTwoPart, Orders) {
    const auto [r, s, t] = gen_two_part(4);
    EXPECT_EQ(order_ids(r), (std::vector<std::string>{"x1", "x2", "x3", "x4"}));
    EXPECT_EQ(order_ids(s), (std::vector<std::string>{"x3", "x4", "x1", "x2"}));
    EXPECT_EQ(order_ids(t), (std::vector<std::string>{"x4", "x3", "x2", "x1"}));
    EXPECT_EQ(r.score_at_rank(1), 1.0);
    EXPECT_EQ(r.score_at_rank(4), 0.25);
    EXPECT_EQ(code_of([] { gen_two_part(5); }), ErrorCode::OddN);
}

TEST(GenTwoPart, SameJaccardHigherFujiAuc) {
    for (std::size_t n = 2; n <= 64; n += 2) {
        const auto [r, s, t] = gen_two_part(n);
        for (std::size_t k = 1; k <= n; ++k) {
            ASSERT_EQ(jaccard_at(r, s, k), jaccard_at(r, t, k)) << "n=" << n << " k=" << k;
        }
        if (n >= 4) {
            const double rs = auc(similarity_curve(r, s, ScoreKind::Fuji, KGrid::full()));
            const double rt = auc(similarity_curve(r, t, ScoreKind::Fuji, KGrid::full()));
            EXPECT_GT(rs, rt) << "n = " << n;
        }
    }
}

TEST(Generate, DispatchesByScenario) {
    EXPECT_EQ(generate({Scenario::Reversed, 6, 1.0}).size(), 2u);
    EXPECT_EQ(generate({Scenario::Correlated, 6, 1.0}).size(), 2u);
    const auto three = generate({Scenario::TwoPart, 6, 1.0});
    ASSERT_EQ(three.size(), 3u);
    EXPECT_EQ(three[2], gen_two_part(6).t);
}

TEST(ExpectedJaccard, Examples) {
    EXPECT_NEAR(expected_jaccard_exact(2, 1), 0.5, 1e-15);
    EXPECT_NEAR(expected_jaccard_exact(10, 1), 0.1, 1e-14);
    EXPECT_NEAR(expected_jaccard_exact(10, 5), 0.3504, 5e-5);
    EXPECT_NEAR(expected_jaccard_exact(10, 10), 1.0, 1e-15);
    EXPECT_DOUBLE_EQ(expected_jaccard_approx(10, 5), 1.0 / 3.0);
    EXPECT_EQ(expected_jaccard_approx(7, 7), 1.0);
    EXPECT_LT(std::abs(expected_jaccard_exact(10, 5) - expected_jaccard_approx(10, 5)), 0.02);
    EXPECT_EQ(code_of([] { expected_jaccard_exact(10, 0); }), ErrorCode::KOutOfRange);
    EXPECT_EQ(code_of([] { expected_jaccard_exact(10, 11); }), ErrorCode::KOutOfRange);
}

TEST(ExpectedJaccard, MatchesEnumeration) {
    for (std::size_t n = 2; n <= 7; ++n) {
        for (std::size_t k = 1; k <= n; ++k) {
            EXPECT_NEAR(expected_jaccard_exact(n, k), oracle::enumerated_expected_jaccard(n, k), 1e-12)
                << "n=" << n << " k=" << k;
        }
    }
}

TEST(ExpectedJaccard, LargeNIsFiniteAndBounded) {
    for (const std::size_t n : {100u, 1000u, 100000u}) {
        for (const std::size_t k : {std::size_t{1}, n / 3, n / 2, n - 1, n}) {
            const double e = expected_jaccard_exact(n, k);
            EXPECT_TRUE(std::isfinite(e));
            EXPECT_GE(e, 0.0);
            EXPECT_LE(e, 1.0 + 1e-12);
            EXPECT_LT(std::abs(e - expected_jaccard_approx(n, k)), 0.02);
        }
    }
}
