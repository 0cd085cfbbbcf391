#include <doctest.h>

#include <random>
#include <stdexcept>

#include "fmds/planner.hpp"

using namespace fmds;

TEST_CASE("minimum length for rate and capability") {
    CHECK(min_length(rational(7, 8), 25) == 400);
    CHECK(min_length(rational(1, 2), 1) == 4);
    CHECK(min_length(rational(7, 9), 1) == 9);
    CHECK_THROWS_AS(min_length(rational(9, 8), 1), std::domain_error);
    CHECK_THROWS_AS(min_length(rational(0, 8), 1), std::domain_error);
    CHECK_THROWS_AS(min_length(rational(1, 2), 0), std::domain_error);
}

TEST_CASE("minimum length is tight on a grid of rates and capabilities") {
    std::mt19937_64 rng(41);
    int done = 0;
    while (done < 100) {
        const long long den = 2 + static_cast<long long>(rng() % 40);
        const long long num = 1 + static_cast<long long>(rng() % (den - 1));
        const long long t = 1 + static_cast<long long>(rng() % 60);
        const Rational r = rational(num, den);
        const long long n = min_length(r, t);
        // n (1 - R) >= 2t and (n - 1)(1 - R) < 2t, all exact
        REQUIRE(n * (r.den - r.num) >= 2 * t * r.den);
        REQUIRE((n - 1) * (r.den - r.num) < 2 * t * r.den);
        ++done;
    }
}

TEST_CASE("characteristic-2 series for rate 7/9") {
    const auto series = series_multiples(9, 7, 2, 4);
    REQUIRE(series.size() == 4);
    const std::uint64_t expect[4][3] = {{9, 7, 3}, {27, 21, 7}, {45, 35, 11}, {63, 49, 15}};
    const std::uint32_t expect_beta[4] = {6, 18, 12, 6};
    for (std::size_t i = 0; i < 4; ++i) {
        CHECK(series[i].n == expect[i][0]);
        CHECK(series[i].r == expect[i][1]);
        CHECK(series[i].d == expect[i][2]);
        CHECK(series[i].field.characteristic() == 2);
        CHECK(series[i].field.degree() == expect_beta[i]);
    }
}

TEST_CASE("characteristic-3 series for rate 7/10") {
    const auto series = series_multiples(10, 7, 3, 6);
    REQUIRE(series.size() == 6);
    const std::uint64_t expect[6][3] = {{10, 7, 4},  {20, 14, 7},  {40, 28, 13},
                                        {50, 35, 16}, {70, 49, 22}, {80, 56, 25}};
    const std::uint32_t expect_beta[6] = {4, 4, 4, 20, 12, 4};
    for (std::size_t i = 0; i < 6; ++i) {
        CHECK(series[i].n == expect[i][0]);
        CHECK(series[i].r == expect[i][1]);
        CHECK(series[i].d == expect[i][2]);
        CHECK(series[i].field.characteristic() == 3);
        CHECK(series[i].field.degree() == expect_beta[i]);
    }
}

TEST_CASE("series starts at the unit multiplier and rejects bad input") {
    const auto series = series_multiples(5, 3, 2, 1);
    REQUIRE(series.size() == 1);
    CHECK(series[0].n == 5);
    CHECK(series[0].r == 3);
    CHECK_THROWS_AS(series_multiples(10, 7, 2, 3), std::domain_error);
    CHECK_THROWS_AS(series_multiples(9, 9, 2, 3), std::domain_error);
    CHECK_THROWS_AS(series_multiples(9, 7, 4, 3), std::invalid_argument);
}

TEST_CASE("series distance ratio walks down to 1 - R exactly") {
    const auto check_series = [](const std::vector<SeriesEntry>& series, const Rational& r) {
        const Rational loss = rational(r.num - r.den, r.den);  // -(1 - R)
        for (const auto& e : series) {
            // d/n - (1 - R) = 1/n in exact rationals
            const Rational gap = rat_add(
                rational(static_cast<long long>(e.d), static_cast<long long>(e.n)), loss);
            CHECK(gap == rational(1, static_cast<long long>(e.n)));
        }
        for (std::size_t i = 1; i < series.size(); ++i) {
            CHECK(rat_less(rational(static_cast<long long>(series[i].d),
                                    static_cast<long long>(series[i].n)),
                           rational(static_cast<long long>(series[i - 1].d),
                                    static_cast<long long>(series[i - 1].n))));
        }
    };
    check_series(series_multiples(9, 7, 2, 4), rational(7, 9));
    check_series(series_multiples(10, 7, 3, 6), rational(7, 10));
}

TEST_CASE("rate approximation avoiding the characteristic in the denominator") {
    const Rational r1 = approx_rate(rational(3, 4), rational(1, 32), 2);
    CHECK(r1.den % 2 == 1);
    CHECK(rat_le(rational(3, 4), r1));
    CHECK(rat_le(r1, rational(25, 32)));
    CHECK(r1 == rational(7, 9));  // deterministic scan answer

    CHECK(approx_rate(rational(1, 3), rational(1, 10), 2) == rational(1, 3));

    const Rational r2 = approx_rate(rational(1, 2), rational(1, 10), 2);
    CHECK(r2.den % 2 == 1);
    CHECK(rat_le(rational(1, 2), r2));
    CHECK(rat_le(r2, rational(3, 5)));
    CHECK(r2 == rational(3, 5));

    CHECK_THROWS_AS(approx_rate(rational(3, 4), rational(1, 2), 2), std::domain_error);
}

TEST_CASE("prime-field series for rate 3/4 over primes congruent to 1 mod 4") {
    const std::uint64_t primes[] = {5, 13, 17, 29, 37};
    const auto series = prime_series(rational(3, 4), primes);
    REQUIRE(series.size() == 5);
    const std::uint64_t expect[5][3] = {
        {4, 3, 2}, {12, 9, 4}, {16, 12, 5}, {28, 21, 8}, {36, 27, 10}};
    for (std::size_t i = 0; i < 5; ++i) {
        CHECK(series[i].n == expect[i][0]);
        CHECK(series[i].r == expect[i][1]);
        CHECK(series[i].d == expect[i][2]);
        CHECK(series[i].field.characteristic() == primes[i]);
        CHECK(series[i].field.degree() == 1);
        CHECK(series[i].d == series[i].n - series[i].r + 1);
    }
}

TEST_CASE("prime-field series edge cases") {
    const std::uint64_t p11[] = {11};
    const auto series = prime_series(rational(1, 2), p11);
    CHECK(series[0].n == 10);
    CHECK(series[0].r == 5);
    CHECK(series[0].d == 6);

    const std::uint64_t too_small[] = {3};
    CHECK_THROWS_AS(prime_series(rational(1, 4), too_small), std::domain_error);
    const std::uint64_t composite[] = {15};
    CHECK_THROWS_AS(prime_series(rational(1, 2), composite), std::invalid_argument);
}

TEST_CASE("plan picks exact parameters and adjusts for a blocked characteristic") {
    const PlanResult exact = plan_code(rational(7, 8), 25, std::nullopt);
    CHECK(exact.n_min == 400);
    CHECK(exact.n == 400);
    CHECK(exact.r == 350);
    CHECK(exact.d == 51);
    CHECK_FALSE(exact.adjusted);

    // 2 | 400, so the length steps down to 399; full capability is kept
    const PlanResult adj = plan_code(rational(7, 8), 25, 2);
    CHECK(adj.n == 399);
    CHECK(adj.r == 349);
    CHECK(adj.d == 51);
    CHECK(adj.adjusted);
    CHECK((adj.d - 1) / 2 == 25);

    // characteristic coprime to the minimum length needs no adjustment
    const PlanResult fine = plan_code(rational(7, 8), 25, 401);
    CHECK(fine.n == 400);
    CHECK_FALSE(fine.adjusted);
}
