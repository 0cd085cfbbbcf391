#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <stdexcept>

#include "fmds/fieldsearch.hpp"
#include "fmds/mdscode.hpp"
#include "fmds/verify.hpp"
#include "helpers.hpp"

using namespace fmds;
using fmds::test::fe_vec;

namespace {

// smallest workable field of any characteristic for a length-n matrix
Field small_field_for(std::uint64_t n) {
    std::uint64_t best_p = 0, best_beta = 0;
    double best_bits = 1e9;
    for (std::uint64_t p = 2; p < 10 * n + 100; ++p) {
        if (!is_prime(p) || n % p == 0) continue;
        const std::uint64_t beta = n == 1 ? 1 : order_mod(p, n);
        const double bits = static_cast<double>(beta) * std::log2(static_cast<double>(p));
        if (bits < best_bits && bits <= 20.0) {
            best_bits = bits;
            best_p = p;
            best_beta = beta;
        }
        if (beta == 1 && best_bits <= 20.0) break;
    }
    REQUIRE(best_p != 0);
    return best_beta == 1 ? Field::prime(best_p)
                          : Field::extension(best_p, static_cast<std::uint32_t>(best_beta));
}

}  // namespace

TEST_CASE("row selection in arithmetic sequence") {
    const Fourier f12(Field::prime(13), 12, Fe{2});

    const Code k_code(f12, 6, 0, 1);
    CHECK(k_code.selected_rows() == std::vector<std::uint64_t>{0, 1, 2, 3, 4, 5});
    CHECK(k_code.distance() == 7);
    CHECK(k_code.capability() == 3);

    const Code l_code(f12, 6, 1, 5);
    CHECK(l_code.selected_rows() == std::vector<std::uint64_t>{1, 6, 11, 4, 9, 2});
    const Matrix g = l_code.generator_matrix();
    // third selected row is e_11
    for (std::size_t m = 0; m < 12; ++m) {
        CHECK(g.at(2, m) == f12.row(11)[m]);
    }

    CHECK_THROWS_AS(Code(f12, 6, 0, 4), std::invalid_argument);
    CHECK_THROWS_AS(Code(f12, 0, 0, 1), std::out_of_range);
    CHECK_THROWS_AS(Code(f12, 13, 0, 1), std::out_of_range);
}

TEST_CASE("reference-code check matrix reads (e_1^T, ..., e_{n-r}^T)") {
    const Fourier f12(Field::prime(13), 12, Fe{2});
    const Code code(f12, 6, 0, 1);
    CHECK(code.check_columns() == std::vector<std::uint64_t>{11, 10, 9, 8, 7, 6});
    const Matrix h = code.check_matrix_t();
    REQUIRE(h.rows == 12);
    REQUIRE(h.cols == 6);
    for (std::size_t c = 0; c < 6; ++c) {
        const auto row = f12.row(static_cast<std::int64_t>(c + 1));
        for (std::size_t m = 0; m < 12; ++m) CHECK(h.at(m, c) == row[m]);
    }
}

TEST_CASE("generator annihilates the check matrix and ranks are full") {
    std::mt19937_64 rng(33);
    int done = 0;
    while (done < 50) {
        const std::uint64_t n = 2 + rng() % 30;
        const Field field = small_field_for(n);
        const Fourier ctx = Fourier::make(field, n);
        const std::uint64_t r = 1 + rng() % n;
        const std::uint64_t b = rng() % n;
        std::uint64_t k = 1 + rng() % n;
        while (std::gcd(n, k) != 1) k = 1 + rng() % n;

        const Code code(ctx, r, b, k);
        const Matrix g = code.generator_matrix();
        const Matrix h = code.check_matrix_t();
        const Matrix zero = mat_mul(field, g, h);
        for (Fe v : zero.a) REQUIRE(v == Fe{0});
        REQUIRE(rank(field, g) == r);
        REQUIRE(rank(field, h) == n - r);
        ++done;
    }
}

TEST_CASE("right inverse matches the scaled paired columns") {
    const Field f13 = Field::prime(13);
    const Fourier f12(f13, 12, Fe{2});
    const Code code(f12, 6, 0, 1);
    const Matrix k = code.right_inverse();
    REQUIRE(k.rows == 12);
    REQUIRE(k.cols == 6);

    // K = (e_0, e_11, e_10, e_9, e_8, e_7)^T * 12
    const std::int64_t expect_rows[] = {0, 11, 10, 9, 8, 7};
    for (std::size_t j = 0; j < 6; ++j) {
        const auto row = f12.row(expect_rows[j]);
        for (std::size_t m = 0; m < 12; ++m) {
            CHECK(k.at(m, j) == f13.mul(row[m], Fe{12}));
        }
    }

    CHECK(mat_mul(f13, code.generator_matrix(), k) == identity(6));
}

TEST_CASE("G K = I for random codes") {
    std::mt19937_64 rng(34);
    int done = 0;
    while (done < 25) {
        const std::uint64_t n = 2 + rng() % 24;
        const Field field = small_field_for(n);
        const Fourier ctx = Fourier::make(field, n);
        const std::uint64_t r = 1 + rng() % n;
        const std::uint64_t b = rng() % n;
        std::uint64_t k = 1 + rng() % n;
        while (std::gcd(n, k) != 1) k = 1 + rng() % n;
        const Code code(ctx, r, b, k);
        REQUIRE(mat_mul(field, code.generator_matrix(), code.right_inverse()) == identity(r));
        ++done;
    }
}

TEST_CASE("selected rows and check columns partition the index set") {
    const Fourier f12(Field::prime(13), 12, Fe{2});
    for (std::uint64_t b : {0ull, 3ull, 7ull}) {
        for (std::uint64_t k : {1ull, 5ull, 7ull, 11ull}) {
            const Code code(f12, 5, b, k);
            auto sel = code.selected_rows();
            auto chk = code.check_columns();
            std::vector<bool> seen(12, false);
            for (auto i : sel) {
                CHECK_FALSE(seen[i]);
                seen[i] = true;
            }
            for (auto i : chk) {
                CHECK_FALSE(seen[i]);
                seen[i] = true;
            }
            CHECK(std::count(seen.begin(), seen.end(), true) == 12);
        }
    }
}

TEST_CASE("Vandermonde code on root powers reduces to the Fourier construction") {
    const Field f13 = Field::prime(13);
    const Fourier f12(f13, 12, Fe{2});
    std::vector<Fe> xs(12);
    for (std::size_t j = 0; j < 12; ++j) xs[j] = f12.omega_pow(static_cast<std::int64_t>(j));

    const auto vc = vandermonde_code(f13, xs, 6, 1);
    CHECK(vc.condition_holds);
    CHECK(vc.generator == Code(f12, 6, 0, 1).generator_matrix());
}

TEST_CASE("Vandermonde condition via k-th power ratios") {
    const Field f13 = Field::prime(13);

    // k = 1 with distinct points always satisfies the hypothesis
    std::vector<Fe> xs = fe_vec({1, 2, 3, 4, 5, 6});
    CHECK(vandermonde_code(f13, xs, 3, 1).condition_holds);

    // ratios of elements of order dividing 12 are always 12-th roots of unity
    std::vector<Fe> bad = fe_vec({1, 2});
    CHECK_FALSE(vandermonde_code(f13, bad, 1, 12).condition_holds);
}

TEST_CASE("Vandermonde (6,3) code over GF(13) reaches the Singleton bound") {
    const Field f13 = Field::prime(13);
    // powers of an element of order 6
    const Fe g{4};
    std::vector<Fe> xs(6);
    for (std::size_t j = 0; j < 6; ++j) xs[j] = f13.pow(g, static_cast<std::int64_t>(j));
    const auto vc = vandermonde_code(f13, xs, 3, 1);
    CHECK(vc.condition_holds);
    CHECK(min_distance(f13, vc.generator) == 4);
}

TEST_CASE("Vandermonde input validation") {
    const Field f13 = Field::prime(13);
    std::vector<Fe> with_zero = fe_vec({0, 1, 2});
    std::vector<Fe> repeated = fe_vec({1, 2, 2});
    std::vector<Fe> ok = fe_vec({1, 2, 3, 4});
    CHECK_THROWS_AS(vandermonde_code(f13, with_zero, 2, 1), std::invalid_argument);
    CHECK_THROWS_AS(vandermonde_code(f13, repeated, 2, 1), std::invalid_argument);
    // rows 0, 3 would be fine but rows 0, 3, 6 leave the matrix: no wrap-around
    CHECK_THROWS_AS(vandermonde_code(f13, ok, 3, 3), std::out_of_range);
}
