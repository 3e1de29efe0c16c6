#include <catch2/catch_amalgamated.hpp>
#include <random>

#include "congdim/qseries.hpp"

using namespace congdim;

TEST_CASE("pentagonal terms") {
    auto t = detail::pentagonal_terms(15);
    // degrees 1,2,5,7,12,15 with signs -,-,+,+,-,-
    REQUIRE(t.size() == 6);
    CHECK(t[0] == std::make_pair((i64)1, -1));
    CHECK(t[1] == std::make_pair((i64)2, -1));
    CHECK(t[2] == std::make_pair((i64)5, 1));
    CHECK(t[3] == std::make_pair((i64)7, 1));
    CHECK(t[4] == std::make_pair((i64)12, -1));
    CHECK(t[5] == std::make_pair((i64)15, -1));
}

TEST_CASE("multiply and divide by the Euler product are inverse") {
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<i128> c(60);
        for (auto& v : c) v = (i64)(rng() % 21) - 10;
        auto orig = c;
        detail::multiply_by_euler(c);
        detail::divide_by_euler(c);
        REQUIRE(c == orig);
    }
}

TEST_CASE("divide_by_euler of 1 gives the partition numbers") {
    std::vector<i128> c(13, 0);
    c[0] = 1;
    detail::divide_by_euler(c);
    // p(0..12)
    std::vector<i128> want{1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77};
    CHECK(c == want);
}

TEST_CASE("QSeries accessors and bounds") {
    QSeries s = QSeries::one(5);
    CHECK(s.order() == 5);
    CHECK(s.coeff(0) == 1);
    CHECK(s.coeff(5) == 0);
    CHECK_THROWS_AS(s.coeff(6), std::out_of_range);
    CHECK_THROWS_AS(s.coeff(-1), std::out_of_range);
    CHECK_THROWS_AS(QSeries(-1), std::invalid_argument);
}

TEST_CASE("series multiplication and inverse round trip") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 10; ++trial) {
        QSeries s(30);
        s.coefficients()[0] = (trial % 2 == 0) ? 1 : -1;
        for (i64 i = 1; i <= 30; ++i) s.coefficients()[(std::size_t)i] = (i64)(rng() % 9) - 4;
        QSeries prod = s.mul(s.inverse());
        REQUIRE(prod == QSeries::one(30));
    }
    QSeries bad(4);
    bad.coefficients()[0] = 2;
    CHECK_THROWS_AS(bad.inverse(), std::domain_error);
}

TEST_CASE("coeff_i64 rejects wide values") {
    QSeries s(2);
    s.coefficients()[1] = (i128)INT64_MAX + 5;
    CHECK_THROWS_AS(s.coeff_i64(1), std::overflow_error);
    s.coefficients()[2] = INT64_MAX;
    CHECK(s.coeff_i64(2) == INT64_MAX);
}
