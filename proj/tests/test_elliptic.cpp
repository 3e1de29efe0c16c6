#include <catch2/catch_amalgamated.hpp>
#include <map>

#include "congdim/elliptic.hpp"

using namespace congdim;

namespace {

// Independent oracle for the level 1 dimension: weight-k monomials in the
// weight-4 and weight-6 generators span the whole space, and cusp forms are
// a hyperplane of it for k >= 4.
i64 level1_monomial_oracle(i64 k) {
    if (k == 2) return 0;
    i64 monomials = 0;
    for (i64 a = 0; 4 * a <= k; ++a)
        if ((k - 4 * a) % 6 == 0) ++monomials;
    return monomials - 1;
}

}  // namespace

TEST_CASE("level 1 cusp form dimensions") {
    CHECK(dim_cusp_level1(12) == 1);
    CHECK(dim_cusp_level1(2) == 0);
    CHECK(dim_cusp_level1(10) == 0);
    CHECK(dim_cusp_level1(14) == 0);
    CHECK(dim_cusp_level1(26) == 1);
    CHECK(dim_cusp_level1(24) == 2);
    for (i64 k = 2; k <= 400; k += 2) REQUIRE(dim_cusp_level1(k) == level1_monomial_oracle(k));
    CHECK_THROWS_AS(dim_cusp_level1(3), std::invalid_argument);
    CHECK_THROWS_AS(dim_cusp_level1(0), std::invalid_argument);
}

TEST_CASE("genus of the prime-level modular curve") {
    const std::map<i64, i64> known{{2, 0},  {3, 0},  {5, 0},  {7, 0},  {11, 1}, {13, 0},
                                   {17, 1}, {19, 1}, {23, 2}, {29, 2}, {31, 2}, {37, 2},
                                   {41, 3}, {43, 3}, {47, 4}, {59, 5}, {71, 6}};
    for (const auto& [p, g] : known) CHECK(genus_gamma0(p) == g);
    CHECK_THROWS_AS(genus_gamma0(6), std::invalid_argument);
}

TEST_CASE("prime level cusp form dimensions") {
    CHECK(dim_cusp_gamma0(4, 2) == 0);
    CHECK(dim_cusp_gamma0(8, 2) == 1);
    CHECK(dim_cusp_gamma0(2, 11) == 1);
    CHECK(dim_cusp_gamma0(4, 13) == 3);
    CHECK(dim_cusp_gamma0(6, 5) == 1);
    CHECK(dim_cusp_gamma0(12, 2) == 2);
    CHECK(dim_cusp_gamma0(12, 1) == 1);  // full level
    CHECK_THROWS_AS(dim_cusp_gamma0(5, 7), std::invalid_argument);
    CHECK_THROWS_AS(dim_cusp_gamma0(4, 15), std::invalid_argument);
}

TEST_CASE("newspace dimensions") {
    CHECK(dim_newspace(2, 11) == 1);
    CHECK(dim_newspace(4, 5) == 1);
    CHECK(dim_newspace(4, 13) == 3);
    CHECK(dim_newspace(4, 29) == 7);
    CHECK(dim_newspace(12, 7) == 5);
    for (i64 p = 2; p <= 100; ++p)
        if (is_prime(p)) REQUIRE(dim_newspace(2, p) == genus_gamma0(p));
}

TEST_CASE("sign split of the newspace") {
    CHECK(dim_newspace_signed(2, 11, +1) == 1);
    CHECK(dim_newspace_signed(2, 11, -1) == 0);
    CHECK_THROWS_AS(dim_newspace_signed(2, 2, +1), std::invalid_argument);
    CHECK_THROWS_AS(dim_newspace_signed(2, 3, -1), std::invalid_argument);
    CHECK_THROWS_AS(dim_newspace_signed(5, 7, +1), std::invalid_argument);
    CHECK_THROWS_AS(dim_newspace_signed(4, 7, 2), std::invalid_argument);

    // equal halves at p = 2 when k = 4 mod 8 (no correction there)
    for (i64 k : {4, 12, 20, 28})
        CHECK(dim_newspace_signed(k, 2, +1) == dim_newspace_signed(k, 2, -1));
}

TEST_CASE("plus and minus dimensions are non-negative integers summing to the newspace") {
    // joint validation of the class numbers, b factor, and dimension formulas:
    // a fractional or negative value throws inside dim_newspace_signed
    for (i64 p = 2; p <= 500; ++p) {
        if (!is_prime(p)) continue;
        for (i64 k = 2; k <= 40; k += 2) {
            if (p <= 3 && k == 2) continue;
            i64 plus = dim_newspace_signed(k, p, +1);
            i64 minus = dim_newspace_signed(k, p, -1);
            if (plus + minus != dim_newspace(k, p)) {
                INFO("k = " << k << ", p = " << p);
                REQUIRE(plus + minus == dim_newspace(k, p));
            }
        }
    }
}

TEST_CASE("newspace parity matches the class number term") {
    for (i64 p = 5; p <= 500; ++p) {
        if (!is_prime(p)) continue;
        const i64 hb = class_number_qfield(p) * b_factor(p);
        REQUIRE(hb % 2 == 0);
        for (i64 k = 3; k <= 20; ++k) {
            if ((dim_newspace(2 * k - 2, p) - hb / 2) % 2 != 0) {
                INFO("k = " << k << ", p = " << p);
                REQUIRE((dim_newspace(2 * k - 2, p) - hb / 2) % 2 == 0);
            }
        }
    }
}

TEST_CASE("dims bundle") {
    auto d = elliptic_dims(4, 13);
    CHECK(d.total == 3);
    CHECK(d.newspace == 3);
    REQUIRE(d.plus.has_value());
    CHECK(*d.plus == 2);
    CHECK(*d.minus == 1);

    auto d2 = elliptic_dims(2, 3);  // no sign split at p = 2, 3 weight 2
    CHECK_FALSE(d2.plus.has_value());

    auto d1 = elliptic_dims(12, 1);
    CHECK(d1.total == 1);
    CHECK(d1.newspace == 1);
    CHECK_FALSE(d1.plus.has_value());
}
