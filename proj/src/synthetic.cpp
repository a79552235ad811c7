#include "rankfuzz/synthetic.hpp"

#include <algorithm>
#include <cmath>

#include "rankfuzz/error.hpp"

namespace rankfuzz {

namespace {

void require_even(std::size_t n) {
    if (n % 2 != 0) {
        throw Error(ErrorCode::OddN, "scenario needs an even item count, got " + std::to_string(n));
    }
}

void require_positive_delta(double delta) {
    if (!(delta > 0.0) || !std::isfinite(delta)) {
        throw Error(ErrorCode::InvalidArgument, "delta must be positive and finite");
    }
}

long double log_binomial(std::size_t n, std::size_t k) {
    return std::lgamma(static_cast<long double>(n) + 1.0L) -
           std::lgamma(static_cast<long double>(k) + 1.0L) -
           std::lgamma(static_cast<long double>(n - k) + 1.0L);
}

}  // namespace

Scenario parse_scenario(std::string_view name) {
    if (name == "reversed") {
        return Scenario::Reversed;
    }
    if (name == "correlated") {
        return Scenario::Correlated;
    }
    if (name == "two-part" || name == "two_part") {
        return Scenario::TwoPart;
    }
    throw Error(ErrorCode::InvalidArgument, "unknown scenario '" + std::string(name) + "'");
}

std::vector<std::string> synthetic_ids(std::size_t n) {
    std::vector<std::string> ids;
    ids.reserve(n);
    for (std::size_t i = 1; i <= n; ++i) {
        ids.push_back("x" + std::to_string(i));
    }
    return ids;
}

std::pair<Ranking, Ranking> gen_reversed(std::size_t n, double delta) {
    require_positive_delta(delta);
    if (n < 2) {
        throw Error(ErrorCode::TooShort, "scenario needs at least 2 items");
    }
    if (static_cast<double>(n - 1) * delta >= 100.0) {
        throw Error(ErrorCode::DeltaTooLarge,
                    "lowest score 100 - (n-1)*delta = " +
                        std::to_string(100.0 - static_cast<double>(n - 1) * delta) + " is not positive");
    }
    std::vector<double> r(n);
    for (std::size_t i = 0; i < n; ++i) {
        r[i] = 100.0 - static_cast<double>(i) * delta;
    }
    std::vector<double> s(r.rbegin(), r.rend());
    const auto ids = synthetic_ids(n);
    return {Ranking::create(ids, std::move(r)), Ranking::create(ids, std::move(s))};
}

double correlated_block_step(std::size_t n) {
    const std::size_t blocks = n / 2;
    if (blocks <= 1) {
        return 20.0;
    }
    return std::min(20.0, 80.0 / static_cast<double>(blocks - 1));
}

std::pair<Ranking, Ranking> gen_correlated(std::size_t n, double delta) {
    require_even(n);
    require_positive_delta(delta);
    if (n < 2) {
        throw Error(ErrorCode::TooShort, "scenario needs at least 2 items");
    }
    const double step = correlated_block_step(n);
    if (delta >= step) {
        throw Error(ErrorCode::DeltaTooLarge, "delta must stay below the block step " +
                                                  std::to_string(step));
    }
    std::vector<double> r(n);
    std::vector<double> s(n);
    for (std::size_t b = 0; b < n / 2; ++b) {
        const double top = 100.0 - static_cast<double>(b) * step;
        r[2 * b] = top;
        r[2 * b + 1] = top - delta;
        s[2 * b] = r[2 * b + 1];
        s[2 * b + 1] = r[2 * b];
    }
    const auto ids = synthetic_ids(n);
    return {Ranking::create(ids, std::move(r)), Ranking::create(ids, std::move(s))};
}

TwoPartRankings gen_two_part(std::size_t n) {
    require_even(n);
    if (n < 2) {
        throw Error(ErrorCode::TooShort, "scenario needs at least 2 items");
    }
    const auto ids = synthetic_ids(n);
    const std::size_t half = n / 2;
    // position[i] = 1-based rank of item x_{i+1}
    auto build = [&](auto rank_of_item) {
        std::vector<double> scores(n);
        for (std::size_t i = 0; i < n; ++i) {
            scores[i] = 1.0 / static_cast<double>(rank_of_item(i));
        }
        return Ranking::create(ids, std::move(scores));
    };
    return TwoPartRankings{
        build([](std::size_t i) { return i + 1; }),
        build([&](std::size_t i) { return i < half ? i + 1 + half : i + 1 - half; }),
        build([&](std::size_t i) { return n - i; }),
    };
}

std::vector<Ranking> generate(const ScenarioSpec& spec) {
    switch (spec.scenario) {
        case Scenario::Reversed: {
            auto [r, s] = gen_reversed(spec.n, spec.delta);
            return {std::move(r), std::move(s)};
        }
        case Scenario::Correlated: {
            auto [r, s] = gen_correlated(spec.n, spec.delta);
            return {std::move(r), std::move(s)};
        }
        case Scenario::TwoPart: {
            auto t = gen_two_part(spec.n);
            return {std::move(t.r), std::move(t.s), std::move(t.t)};
        }
    }
    throw Error(ErrorCode::InvalidArgument, "unhandled scenario");
}

double expected_jaccard_exact(std::size_t n, std::size_t k) {
    if (n < 2) {
        throw Error(ErrorCode::TooShort, "expected Jaccard needs n >= 2");
    }
    check_k(k, n);
    const long double log_total = log_binomial(n, k);
    long double sum = 0.0L;
    const std::size_t lo = 2 * k > n ? 2 * k - n : 0;
    for (std::size_t rho = std::max<std::size_t>(lo, 1); rho <= k; ++rho) {
        const long double log_p = log_binomial(k, rho) + log_binomial(n - k, k - rho) - log_total;
        sum += std::exp(log_p) * static_cast<long double>(rho) /
               static_cast<long double>(2 * k - rho);
    }
    return static_cast<double>(sum);
}

double expected_jaccard_approx(std::size_t n, std::size_t k) {
    return static_cast<double>(k) / (2.0 * static_cast<double>(n) - static_cast<double>(k));
}

}  // namespace rankfuzz
