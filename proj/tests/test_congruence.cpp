#include <catch2/catch_amalgamated.hpp>
#include <set>

#include "congdim/records.hpp"
#include "congdim/scan.hpp"

using namespace congdim;

TEST_CASE("canonical residues") {
    CHECK(canonical_mod(-1, 4) == 3);
    CHECK(canonical_mod(-8, 16) == 8);
    CHECK(canonical_mod(7, 4) == 3);
    CHECK(canonical_mod(0, 2) == 0);
}

TEST_CASE("newspace parity congruence: frozen instances") {
    auto r1 = check_t33(3, 11);  // dim 2 vs 0, the p = 3 mod 8 case
    CHECK(r1.pass);
    CHECK(r1.lhs == 0);
    CHECK(r1.rhs == 0);
    CHECK(r1.modulus == 2);

    auto r2 = check_t33(3, 5);  // dim 1 vs h(-20)/2 = 1
    CHECK(r2.pass);
    CHECK(r2.lhs == 1);
    CHECK(r2.rhs == 1);

    // p = 3 mod 8 forces an even right side
    for (i64 p : {11, 19, 43, 59})
        for (i64 k = 3; k <= 8; ++k) CHECK(check_t33(k, p).rhs == 0);

    CHECK_THROWS_AS(check_t33(2, 11), std::invalid_argument);
    CHECK_THROWS_AS(check_t33(3, 4), std::invalid_argument);
    CHECK_THROWS_AS(check_t33(3, 3), std::invalid_argument);
}

TEST_CASE("newspace parity congruence holds across the grid") {
    for (i64 p = 5; p <= 500; ++p) {
        if (!is_prime(p)) continue;
        for (i64 k = 3; k <= 20; ++k) {
            auto r = check_t33(k, p);
            if (!r.pass) {
                INFO("k = " << k << ", p = " << p);
                REQUIRE(r.pass);
            }
        }
    }
}

TEST_CASE("4-core parity congruence") {
    auto r = check_c42(1, 1);
    CHECK(r.pass);
    CHECK(r.lhs == 1);  // c4(1) = 1
    CHECK(r.rhs == 1);  // dim 3 newspace of weight 4 level 13
    CHECK(check_c42(1, 3).pass);
    CHECK_THROWS_AS(check_c42(1, 2), std::invalid_argument);  // 21 composite
    CHECK_THROWS_AS(check_c42(0, 1), std::invalid_argument);
}

TEST_CASE("synthesized dims from all-zero free counts") {
    SiegelDims d = synthesize_dims(4, 5, FreeCounts{});
    CHECK(d.dim_K == 0);       // s_Vb + s_VIc = 0
    CHECK(d.dim_Gamma0 == 1);  // s_P_VIb + s_Y_VIb = 1
    REQUIRE(d.dim_Klingen.has_value());
    CHECK(*d.dim_Klingen == 0);
    CHECK_THROWS_AS(synthesize_dims(4, 5, FreeCounts{-1, 0, 0, 0, 0}), std::invalid_argument);
}

TEST_CASE("difference congruence on synthetic dims, with sensitivity") {
    std::mt19937_64 rng(11);
    for (i64 p : {5, 7, 11, 13, 17, 19, 23}) {
        for (i64 k = 3; k <= 10; ++k) {
            for (int draw = 0; draw < 10; ++draw) {
                FreeCounts f = draw_free_counts(rng);
                SiegelDims dims = synthesize_dims(k, p, f);
                auto r31 = check_t31(k, p, dims, Provenance::synthetic);
                auto r32 = check_t32(k, p, dims, Provenance::synthetic);
                REQUIRE(r31.pass);
                REQUIRE(r32.pass);

                SiegelDims bumped = dims;
                bumped.dim_K += 1;
                REQUIRE_FALSE(check_t31(k, p, bumped, Provenance::synthetic).pass);
                REQUIRE_FALSE(check_t32(k, p, bumped, Provenance::synthetic).pass);
            }
        }
    }
}

TEST_CASE("case selection by p mod 8") {
    std::mt19937_64 rng(5);
    auto dims5 = synthesize_dims(4, 5, draw_free_counts(rng));
    CHECK(check_t31(4, 5, dims5).id == TheoremCase::T31i);
    CHECK(check_t31(4, 5, dims5).modulus == 16);
    auto dims7 = synthesize_dims(4, 7, draw_free_counts(rng));
    CHECK(check_t31(4, 7, dims7).id == TheoremCase::T31ii);
    CHECK(check_t31(4, 7, dims7).modulus == 4);
    auto dims11 = synthesize_dims(4, 11, draw_free_counts(rng));
    CHECK(check_t31(4, 11, dims11).id == TheoremCase::T31iii);
    CHECK(check_t32(4, 11, dims11).id == TheoremCase::T32iii);
}

TEST_CASE("left side tracks the class number parity term") {
    // h-linear term appears only for odd k
    const i64 h = class_number_qfield(13);
    std::mt19937_64 rng(3);
    auto d3 = synthesize_dims(3, 13, draw_free_counts(rng));
    auto d4 = synthesize_dims(4, 13, draw_free_counts(rng));
    CHECK(check_t31(3, 13, d3).lhs == canonical_mod(h * h - 4 * h, 16));
    CHECK(check_t31(4, 13, d4).lhs == canonical_mod(-h * h, 16));
    CHECK(check_t32(3, 13, d3).lhs == canonical_mod(-h * h, 16));
    CHECK(check_t32(4, 13, d4).lhs == canonical_mod(h * h, 16));
}

TEST_CASE("small-prime congruence covers every residue row") {
    std::mt19937_64 rng(17);
    for (i64 p : {2, 3}) {
        for (i64 k = 3; k <= 14; ++k) {
            for (int draw = 0; draw < 10; ++draw) {
                SiegelDims dims = synthesize_dims(k, p, draw_free_counts(rng));
                auto r = check_p34(k, p, dims, Provenance::synthetic);
                REQUIRE(r.pass);
                CHECK(r.id == (p == 2 ? TheoremCase::P34_2 : TheoremCase::P34_3));
                SiegelDims bumped = dims;
                bumped.dim_Gamma0 += 1;
                REQUIRE_FALSE(check_p34(k, p, bumped, Provenance::synthetic).pass);
            }
        }
    }
    CHECK_THROWS_AS(check_p34(4, 5, SiegelDims{5, 4, 0, 0, {}}), std::invalid_argument);
}

TEST_CASE("4-core square congruences at prime 8n + 5") {
    QSeries c4 = t_core_series(4, 40);
    std::mt19937_64 rng(23);
    for (i64 n : {0, 1, 3, 4, 7, 12}) {  // 8n+5 = 5, 13, 29, 37, 61, 101
        const i64 p = 8 * n + 5;
        REQUIRE(is_prime(p));
        for (i64 k = 5; k <= 9; ++k) {
            SiegelDims dims = synthesize_dims(k, p, draw_free_counts(rng));
            auto [a, b] = check_c41(k, n, dims, c4.coeff_i64(n), Provenance::synthetic);
            REQUIRE(a.pass);
            REQUIRE(b.pass);
            CHECK(a.id == TheoremCase::C41a);
            CHECK(b.id == TheoremCase::C41b);
            CHECK(a.n == n);
            CHECK(a.p == p);

            SiegelDims bumped = dims;
            bumped.dim_K += 1;
            auto [a2, b2] = check_c41(k, n, bumped, c4.coeff_i64(n), Provenance::synthetic);
            REQUIRE_FALSE(a2.pass);
            REQUIRE_FALSE(b2.pass);

            // substitution identity against the difference congruence with
            // h = 2 c4(n): the h-part of the mod 16 left side is 4x the
            // c4-part of the mod 4 left side
            auto t31 = check_t31(k, p, dims, Provenance::synthetic);
            const i64 gap = dims.dim_K - dims.dim_Gamma0;
            const i64 sgn = (k % 2 == 0) ? -1 : 1;
            const i64 c4n = c4.coeff_i64(n);
            const i64 h = 2 * c4n;
            const i64 lhs16 = sgn * h * h - (k % 2 == 1 ? 4 * h : 0);
            const i64 lhs4 = sgn * c4n * c4n - (k % 2 == 1 ? 2 * c4n : 0) - 2 * gap;
            CHECK(canonical_mod(lhs16, 16) == t31.lhs);
            CHECK(lhs16 == 4 * (lhs4 + 2 * gap));
        }
    }
    std::mt19937_64 rng2(1);
    CHECK_THROWS_AS(check_c41(4, 1, synthesize_dims(4, 13, draw_free_counts(rng2)), 1),
                    std::invalid_argument);  // k < 5
    CHECK_THROWS_AS(check_c41(5, 2, SiegelDims{21, 5, 0, 0, {}}, 2), std::invalid_argument);
}

TEST_CASE("synthetic draws are deterministic in the seed") {
    std::mt19937_64 a(99), b(99), c(100);
    auto fa = draw_free_counts(a);
    auto fb = draw_free_counts(b);
    auto fc = draw_free_counts(c);
    CHECK(fa.s_I == fb.s_I);
    CHECK(fa.s_Va == fb.s_Va);
    bool same = fa.s_I == fc.s_I && fa.s_IIb == fc.s_IIb && fa.s_IIa == fc.s_IIa &&
                fa.s_Va == fc.s_Va && fa.s_IIIaVIab == fc.s_IIIaVIab;
    CHECK_FALSE(same);
}

TEST_CASE("scan: parity family over a grid") {
    ScanConfig cfg;
    cfg.theorem = TheoremFamily::T33;
    cfg.k_min = 3;
    cfg.k_max = 12;
    cfg.p_max = 200;
    auto out = run_scan(cfg);
    CHECK(out.fail_count() == 0);
    // primes 5..199 (44 of them), 10 weights each
    CHECK(out.pass_count() == 440);
    CHECK(out.skips.size() == 20);  // p = 2, 3 rows
    // canonical order: p ascending, then k
    for (std::size_t i = 1; i < out.reports.size(); ++i) {
        auto &a = out.reports[i - 1], &b = out.reports[i];
        REQUIRE(std::make_pair(*a.p, a.k) < std::make_pair(*b.p, b.k));
    }
}

TEST_CASE("scan: 4-core parity with skip records for composite 8n + 5") {
    ScanConfig cfg;
    cfg.theorem = TheoremFamily::C42;
    cfg.k_min = 1;
    cfg.k_max = 4;
    cfg.n_max = 20;
    auto out = run_scan(cfg);
    CHECK(out.fail_count() == 0);
    std::set<i64> prime_ns;
    for (i64 n = 0; n <= 20; ++n)
        if (is_prime(8 * n + 5)) prime_ns.insert(n);
    CHECK(out.reports.size() == prime_ns.size() * 4);
    CHECK(out.skips.size() == (21 - prime_ns.size()) * 4);
    for (const auto& s : out.skips) CHECK(s.reason.find("composite") != std::string::npos);
}

TEST_CASE("scan: no dims and no synthetic means skip reports, not failures") {
    ScanConfig cfg;
    cfg.theorem = TheoremFamily::T31;
    cfg.k_min = 3;
    cfg.k_max = 4;
    cfg.p_max = 12;
    auto out = run_scan(cfg, nullptr);
    CHECK(out.reports.empty());
    CHECK(out.fail_count() == 0);
    CHECK(out.skips.size() == 10);  // (2,3,5,7,11) x (3,4)
}

TEST_CASE("scan: ingested dims are checked and gaps skipped") {
    DimStore store;
    std::mt19937_64 rng(4);
    auto dims = synthesize_dims(3, 5, draw_free_counts(rng));
    std::istringstream csv("group,p,k,dim,source\n"
                           "paramodular_K,5,3," + std::to_string(dims.dim_K) + ",synthetic:test\n"
                           "siegel_Gamma0,5,3," + std::to_string(dims.dim_Gamma0) +
                           ",synthetic:test\n");
    store.ingest_stream(csv, false);

    ScanConfig cfg;
    cfg.theorem = TheoremFamily::T31;
    cfg.k_min = 3;
    cfg.k_max = 4;
    cfg.p_max = 7;
    cfg.source = DimsSource::ingested;
    auto out = run_scan(cfg, &store);
    REQUIRE(out.reports.size() == 1);
    CHECK(out.reports[0].pass);
    CHECK(out.reports[0].provenance == Provenance::ingested);
    CHECK(out.skips.size() == 7);  // p=2,3 rows plus the three missing grid points
}

TEST_CASE("scan: synthetic multi-draw round trip across families") {
    for (auto family : {TheoremFamily::T31, TheoremFamily::T32}) {
        ScanConfig cfg;
        cfg.theorem = family;
        cfg.k_min = 3;
        cfg.k_max = 6;
        cfg.p_max = 20;
        cfg.source = DimsSource::synthetic;
        cfg.draws = 4;
        cfg.seed = 31337;
        auto out = run_scan(cfg);
        CHECK(out.fail_count() == 0);
        CHECK(out.pass_count() == 4 * 4 * 6);  // 6 primes in [5,20], 4 weights, 4 draws
    }
    ScanConfig cfg;
    cfg.theorem = TheoremFamily::P34;
    cfg.k_min = 3;
    cfg.k_max = 8;
    cfg.p_max = 3;
    cfg.source = DimsSource::synthetic;
    cfg.draws = 2;
    cfg.seed = 7;
    auto out = run_scan(cfg);
    CHECK(out.fail_count() == 0);
    CHECK(out.pass_count() == 2 * 6 * 2);
}

TEST_CASE("scans with the same config render byte-identically") {
    ScanConfig cfg;
    cfg.theorem = TheoremFamily::C41;
    cfg.k_min = 5;
    cfg.k_max = 7;
    cfg.n_max = 12;
    cfg.source = DimsSource::synthetic;
    cfg.draws = 3;
    cfg.seed = 424242;
    auto render = [&]() {
        std::string s;
        auto out = run_scan(cfg);
        for (const auto& r : out.reports) s += machine_record(r, cfg.seed) + "\n";
        for (const auto& k : out.skips) s += machine_record(k) + "\n";
        s += machine_summary(out.pass_count(), out.fail_count(), (i64)out.skips.size(),
                             out.rejected_draws);
        return s;
    };
    std::string first = render();
    CHECK(first == render());
    CHECK(!first.empty());
}

TEST_CASE("machine record shape is frozen") {
    auto r = check_t33(3, 5);
    CHECK(machine_record(r, 0) ==
          R"({"k":3,"lhs":1,"modulus":2,"n":null,"p":5,"provenance":"computed","rhs":1,)"
          R"("seed":0,"theorem_id":"T33","type":"report","verdict":"pass"})");
    SkipRecord s{TheoremFamily::T31, 3, 7, std::nullopt, "no data"};
    CHECK(machine_record(s) ==
          R"({"k":3,"n":null,"p":7,"reason":"no data","theorem_id":"T31","type":"skip"})");
}

TEST_CASE("scan rejects bad configurations") {
    ScanConfig cfg;
    cfg.theorem = TheoremFamily::T33;
    cfg.k_min = 5;
    cfg.k_max = 3;
    cfg.p_max = 100;
    CHECK_THROWS_AS(run_scan(cfg), std::invalid_argument);
    cfg.k_min = 3;
    cfg.p_max = 0;
    CHECK_THROWS_AS(run_scan(cfg), std::invalid_argument);
    ScanConfig c42;
    c42.theorem = TheoremFamily::C42;
    c42.k_min = 1;
    c42.k_max = 2;
    c42.n_max = -1;
    CHECK_THROWS_AS(run_scan(c42), std::invalid_argument);
}

TEST_CASE("theorem family names round trip") {
    for (auto f : {TheoremFamily::T31, TheoremFamily::T32, TheoremFamily::T33,
                   TheoremFamily::P34, TheoremFamily::C41, TheoremFamily::C42})
        CHECK(parse_theorem_family(to_string(f)) == f);
    CHECK_FALSE(parse_theorem_family("T35").has_value());
}
