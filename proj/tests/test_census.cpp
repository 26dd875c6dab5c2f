#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "negacirc/census.hpp"

using namespace negacirc;

TEST_CASE("index-2 formula against the restricted oracle") {
    struct Point {
        uint64_t p;
        int n;
        int64_t expected;
    };
    for (auto [p, n, expected] : {Point{3, 2, 4}, {3, 4, 56}, {5, 2, 12}, {5, 4, 552}, {7, 2, 40}}) {
        FiniteField F(p, 1);
        auto fac = factor_negacyclic(F, n);
        CHECK(formula_dn(F, n, fac) == expected);
        CHECK(oracle_count(F, n, 2, CensusMode::Restricted) == expected);
    }
}

TEST_CASE("index-3 formula against the full oracle") {
    struct Point {
        uint64_t p;
        int n;
        int64_t expected;
    };
    for (auto [p, n, expected] : {Point{5, 2, 505}, {3, 2, 57}, {3, 4, 5841}}) {
        FiniteField F(p, 1);
        auto fac = factor_negacyclic(F, n);
        CHECK(formula_3n(F, n, fac) == expected);
        CHECK(oracle_count(F, n, 3, CensusMode::Full) == expected);
    }
}

TEST_CASE("index-t two-factor formula") {
    FiniteField f5(5, 1), f3(3, 1), f7(7, 1);
    CHECK(formula_tn_two_factor(f5, 2, 3) == 505);
    CHECK(formula_tn_two_factor_corrected(f5, 2, 3) == 505);

    CHECK(formula_tn_two_factor(f3, 4, 2) == 71);
    CHECK(formula_tn_two_factor_corrected(f3, 4, 2) == 73);
    CHECK(oracle_count(f3, 4, 2, CensusMode::Full) == 73);

    CHECK(formula_tn_two_factor(f5, 2, 2) == 21);
    CHECK(formula_tn_two_factor_corrected(f5, 2, 2) == 21);
    CHECK(oracle_count(f5, 2, 2, CensusMode::Full) == 21);

    CHECK_THROWS_WITH_AS(formula_tn_two_factor(f7, 4, 2), doctest::Contains("TwoFactorHypothesisFails"),
                         DomainError);
    CHECK_THROWS_WITH_AS(formula_tn_two_factor(f3, 2, 2), doctest::Contains("TwoFactorHypothesisFails"),
                         DomainError);
}

TEST_CASE("oracle modes") {
    FiniteField f5(5, 1), f3(3, 1);
    CHECK(oracle_count(f5, 2, 2, CensusMode::Full) == 21);
    CHECK(oracle_count(f5, 2, 2, CensusMode::Restricted) == 12);
    CHECK(oracle_count(f3, 2, 2, CensusMode::Full) == 5);  // includes a = 0

    // full >= restricted wherever both are defined
    for (auto [p, n] : {std::pair<uint64_t, int>{3, 2}, {3, 4}, {5, 2}, {7, 2}}) {
        FiniteField F(p, 1);
        CHECK(oracle_count(F, n, 2, CensusMode::Full) >= oracle_count(F, n, 2, CensusMode::Restricted));
    }

    CHECK_THROWS_WITH_AS(oracle_count(f3, 2, 3, CensusMode::Restricted), doctest::Contains("UnsupportedMode"),
                         DomainError);
    CHECK_THROWS_WITH_AS(oracle_count(f5, 8, 3, CensusMode::Full, 1000), doctest::Contains("TooLargeToEnumerate"),
                         DomainError);
}

TEST_CASE("census reports") {
    FiniteField f5(5, 1);
    auto restricted = census_report(f5, 2, 2, CensusMode::Restricted);
    CHECK(restricted.family == "dn");
    CHECK(restricted.formula_corrected == 12);
    CHECK(restricted.oracle == 12);
    CHECK(restricted.agree);

    auto full = census_report(f5, 2, 2, CensusMode::Full);
    CHECK(full.formula_printed == 21);
    CHECK(full.oracle == 21);
    CHECK(full.agree);

    FiniteField f3(3, 1);
    auto printed_mismatch = census_report(f3, 4, 2, CensusMode::Full);
    CHECK(printed_mismatch.formula_printed == 71);
    CHECK(printed_mismatch.formula_corrected == 73);
    CHECK(printed_mismatch.oracle == 73);
    CHECK(printed_mismatch.agree);
    CHECK(!printed_mismatch.notes.empty());
}

TEST_CASE("x^2 + y^2 = -1") {
    struct Point {
        uint64_t p;
        unsigned k;
        int64_t expected;
    };
    for (auto [p, k, expected] : {Point{3, 1, 4}, {5, 1, 4}, {3, 2, 8}}) {
        FiniteField F(p, k);
        auto d = count_app7(F);
        CHECK(d.formula_corrected == expected);
        CHECK(d.oracle == expected);
        CHECK(d.agree);
    }
}

TEST_CASE("norm-form count over the quadratic extension") {
    struct Point {
        uint64_t p;
        unsigned k;
        int64_t expected;
    };
    for (auto [p, k, expected] : {Point{3, 1, 24}, {5, 1, 120}, {3, 2, 720}}) {
        FiniteField F(p, k);
        auto d = count_app2(F);
        CHECK(d.formula_corrected == expected);
        CHECK(d.oracle == expected);
        CHECK(d.agree);
    }

    // fiber structure: solutions with a = 0 are exactly the q+1 norm roots of -1
    FiniteField f3(3, 1);
    FiniteField f9(3, 2);
    int with_a_zero = 0;
    for (uint32_t b = 0; b < 9; ++b) with_a_zero += f9.norm_to_subfield(b, 2) == f9.neg(1);
    CHECK(with_a_zero == 3 + 1);
}

TEST_CASE("bilinear diagonal count") {
    // corrected variant equals the oracle everywhere on the grid
    for (uint64_t p : {3, 5, 7}) {
        FiniteField F(p, 1);
        for (int t : {2, 3, 4}) {
            auto d = count_app5(F, t);
            CHECK(d.agree);
            CHECK(d.formula_corrected == d.oracle);
        }
    }

    // the printed eta factor is wrong exactly for even t with q = 3 (mod 4)
    auto d32 = count_app5(FiniteField(3, 1), 2);
    CHECK(d32.formula_printed == 4);
    CHECK(d32.oracle == 2);
    CHECK(!d32.notes.empty());

    auto d72 = count_app5(FiniteField(7, 1), 2);
    CHECK(d72.formula_printed == 8);
    CHECK(d72.oracle == 6);
    CHECK(!d72.notes.empty());

    auto d52 = count_app5(FiniteField(5, 1), 2);
    CHECK(d52.formula_printed == 4);
    CHECK(d52.oracle == 4);
    CHECK(d52.notes.empty());
}

TEST_CASE("quadratic form counts") {
    FiniteField f3(3, 1);
    auto ex1 = quadratic_form_count(f3, 2, f3.from_int(-1), {f3.one(), f3.one()});
    CHECK(ex1.formula_corrected == 4);
    CHECK(ex1.oracle == 4);

    auto ex2 = quadratic_form_count(f3, 2, f3.element(0), {f3.one(), f3.from_int(-1)});
    CHECK(ex2.formula_corrected == 5);
    CHECK(ex2.oracle == 5);

    auto ex3 = quadratic_form_count(f3, 2, f3.one(), {f3.one(), f3.one()});
    CHECK(ex3.formula_corrected == 4);
    CHECK(ex3.oracle == 4);

    // grid: all b, q in {3,5}, nvars in {2,4}, all-plus and alternating signatures
    for (uint64_t p : {3, 5}) {
        FiniteField F(p, 1);
        for (int nvars : {2, 4}) {
            for (int signature = 0; signature < 2; ++signature) {
                std::vector<FieldElement> diag;
                for (int i = 0; i < nvars; ++i)
                    diag.push_back(signature && i % 2 ? F.from_int(-1) : F.one());
                for (uint64_t b = 0; b < F.order(); ++b) {
                    auto d = quadratic_form_count(F, nvars, F.element(b), diag);
                    CHECK(d.agree);
                }
            }
        }
    }

    CHECK_THROWS_WITH_AS(quadratic_form_count(f3, 3, f3.one(), {f3.one(), f3.one(), f3.one()}),
                         doctest::Contains("UnsupportedForm"), DomainError);
    CHECK_THROWS_WITH_AS(quadratic_form_count(f3, 2, f3.one(), {f3.one(), f3.element(0)}),
                         doctest::Contains("UnsupportedForm"), DomainError);
}

TEST_CASE("two-factor counts reduce to the bilinear count") {
    // oracle(q, n, t, full) = q^(n(t-1)) - app5-oracle over GF(q^(n/2))
    struct Point {
        uint64_t p;
        unsigned k;  // extension degree of GF(q^(n/2)) over the prime field
        int n;
        int t;
    };
    for (auto [p, k, n, t] : {Point{3, 2, 4, 2}, {5, 1, 2, 2}, {5, 1, 2, 3}}) {
        FiniteField Fq(p, 1);
        FiniteField Fbig(p, k);
        int64_t total = 1;
        for (int i = 0; i < n * (t - 1); ++i) total *= int64_t(Fq.order());
        auto app5 = count_app5(Fbig, t);
        CHECK(oracle_count(Fq, n, t, CensusMode::Full) == total - app5.oracle);
    }
}
