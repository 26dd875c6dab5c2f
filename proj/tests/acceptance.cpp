// Acceptance suite: one named criterion per section, each printed as a
// single PASS/FAIL line with its runtime. Exits nonzero if any criterion
// fails. Run directly or through ctest.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "negacirc/asymptotic.hpp"
#include "negacirc/census.hpp"
#include "negacirc/json_io.hpp"
#include "negacirc/search.hpp"

using namespace negacirc;

namespace {

int failures = 0;

void criterion(int idx, const std::string& name, const std::function<bool()>& body) {
    auto start = std::chrono::steady_clock::now();
    bool ok = false;
    std::string error;
    try {
        ok = body();
    } catch (const std::exception& e) {
        error = e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("[%s] criterion %2d: %-46s (%.2fs)%s%s\n", ok ? "PASS" : "FAIL", idx, name.c_str(), secs,
                error.empty() ? "" : " error: ", error.c_str());
    std::fflush(stdout);
    if (!ok) ++failures;
}

Poly poly_from_code(const FiniteField& F, int n, uint64_t code) {
    std::vector<uint32_t> c(size_t(n), 0u);
    for (int i = 0; i < n; ++i) {
        c[size_t(i)] = uint32_t(code % F.order());
        code /= F.order();
    }
    return Poly(F, std::move(c));
}

bool check(bool cond, const char* what) {
    if (!cond) std::printf("       detail: %s\n", what);
    return cond;
}

}  // namespace

int main() {
    criterion(1, "factorization closure and closed-form match", [] {
        bool ok = true;
        for (auto [p, k] : {std::pair<uint64_t, unsigned>{3, 1}, {5, 1}, {7, 1}, {3, 2}, {13, 1}}) {
            FiniteField F(p, k);
            for (int n = 1; n <= 64; ++n) {
                if (uint64_t(n) % F.characteristic() == 0) continue;
                auto fac = factor_negacyclic(F, n);
                ok &= check(fac.product() == NegacyclicRing(F, n).modulus(),
                            ("reconstruction failed at q=" + F.label() + " n=" + std::to_string(n)).c_str());
            }
        }
        for (uint64_t p : {3, 5, 13}) {
            FiniteField F(p, 1);
            for (unsigned e = 1; e <= 6; ++e)
                ok &= check(closed_form_pow2(F, e).same_factors(factor_negacyclic(F, 1 << e)),
                            "closed form mismatch");
        }
        return ok;
    });

    criterion(2, "worked power-of-two examples, byte-exact", [] {
        FiniteField f3(3, 1), f5(5, 1);
        std::string got3 = factorization_json(factor_negacyclic(f3, 4)).dump();
        std::string got5 = factorization_json(factor_negacyclic(f5, 4)).dump();
        bool ok = check(got3 == R"({"unit":1,"self_reciprocal":[],"pairs":[[[2,1,1],[2,2,1]]]})",
                        got3.c_str());
        ok &= check(got5 == R"({"unit":1,"self_reciprocal":[],"pairs":[[[2,0,1],[3,0,1]]]})", got5.c_str());
        return ok;
    });

    criterion(3, "criterion equivalence (gcd = constituent = hull)", [] {
        bool ok = true;
        for (auto [p, n] : {std::pair<uint64_t, int>{3, 2}, {3, 4}, {5, 2}, {5, 4}, {7, 2}}) {
            FiniteField F(p, 1);
            auto fac = factor_negacyclic(F, n);
            uint64_t total = 1;
            for (int i = 0; i < n; ++i) total *= F.order();
            for (uint64_t code = 0; code < total; ++code) {
                Poly a = poly_from_code(F, n, code);
                MultiNegaCode mc(F, n, {a});
                bool g = lcd_gcd_test(a, n), c = constituent_lcd(mc, fac),
                     h = is_lcd_matrix(mc.generator_matrix());
                if (g != c || c != h) return check(false, "index-2 disagreement");
            }
        }
        for (auto [p, n] : {std::pair<uint64_t, int>{3, 2}, {5, 2}}) {
            FiniteField F(p, 1);
            auto fac = factor_negacyclic(F, n);
            uint64_t total = 1;
            for (int i = 0; i < 2 * n; ++i) total *= F.order();
            for (uint64_t code = 0; code < total; ++code) {
                uint64_t half = 1;
                for (int i = 0; i < n; ++i) half *= F.order();
                MultiNegaCode mc(F, n, {poly_from_code(F, n, code % half), poly_from_code(F, n, code / half)});
                if (constituent_lcd(mc, fac) != is_lcd_matrix(mc.generator_matrix()))
                    return check(false, "index-3 disagreement");
            }
        }
        FiniteField f3(3, 1);
        auto fac34 = factor_negacyclic(f3, 4);
        std::mt19937_64 rng(1234);
        for (int trial = 0; trial < 1000; ++trial) {
            MultiNegaCode mc(f3, 4, {poly_from_code(f3, 4, rng() % 81), poly_from_code(f3, 4, rng() % 81)});
            if (constituent_lcd(mc, fac34) != is_lcd_matrix(mc.generator_matrix()))
                return check(false, "index-3 random disagreement");
        }
        return ok;
    });

    criterion(4, "index-2 census, restricted", [] {
        struct Point {
            uint64_t p;
            int n;
            int64_t expected;
        };
        bool ok = true;
        for (auto [p, n, expected] : {Point{3, 2, 4}, {3, 4, 56}, {5, 2, 12}, {5, 4, 552}, {7, 2, 40}}) {
            FiniteField F(p, 1);
            auto fac = factor_negacyclic(F, n);
            ok &= check(formula_dn(F, n, fac) == expected, "formula_dn off");
            ok &= check(oracle_count(F, n, 2, CensusMode::Restricted) == expected, "restricted oracle off");
        }
        return ok;
    });

    criterion(5, "index-3 census, full", [] {
        struct Point {
            uint64_t p;
            int n;
            int64_t expected;
        };
        bool ok = true;
        for (auto [p, n, expected] : {Point{5, 2, 505}, {3, 2, 57}, {3, 4, 5841}}) {
            FiniteField F(p, 1);
            auto fac = factor_negacyclic(F, n);
            ok &= check(formula_3n(F, n, fac) == expected, "formula_3n off");
            ok &= check(oracle_count(F, n, 3, CensusMode::Full) == expected, "full oracle off");
        }
        return ok;
    });

    criterion(6, "appendix counts adjudicated", [] {
        bool ok = true;
        for (auto [p, k] : {std::pair<uint64_t, unsigned>{3, 1}, {5, 1}, {3, 2}}) {
            FiniteField F(p, k);
            auto a7 = count_app7(F);
            auto a2 = count_app2(F);
            ok &= check(a7.agree && a7.formula_corrected == a7.oracle, "app7 mismatch");
            ok &= check(a2.agree && a2.formula_corrected == a2.oracle, "app2 mismatch");
        }
        for (uint64_t p : {3, 5, 7}) {
            FiniteField F(p, 1);
            for (int t : {2, 3, 4}) {
                auto a5 = count_app5(F, t);
                ok &= check(a5.agree, "app5 corrected variant mismatch");
            }
        }
        auto d32 = count_app5(FiniteField(3, 1), 2);
        ok &= check(d32.formula_printed == 4 && d32.oracle == 2 && !d32.notes.empty(),
                    "missing (3, t=2) discrepancy note");
        auto d72 = count_app5(FiniteField(7, 1), 2);
        ok &= check(d72.formula_printed == 8 && d72.oracle == 6 && !d72.notes.empty(),
                    "missing (7, t=2) discrepancy note");
        return ok;
    });

    criterion(7, "quadratic-form counts", [] {
        bool ok = true;
        for (uint64_t p : {3, 5}) {
            FiniteField F(p, 1);
            for (int nvars : {2, 4}) {
                for (int signature = 0; signature < 2; ++signature) {
                    std::vector<FieldElement> diag;
                    for (int i = 0; i < nvars; ++i)
                        diag.push_back(signature && i % 2 ? F.from_int(-1) : F.one());
                    for (uint64_t b = 0; b < F.order(); ++b) {
                        auto d = quadratic_form_count(F, nvars, F.element(b), diag);
                        ok &= check(d.agree, "quadratic form count mismatch");
                    }
                }
            }
        }
        return ok;
    });

    criterion(8, "published distance table at desk scale", [] {
        FiniteField f5(5, 1);
        struct Row {
            int n;
            int target;
        };
        bool ok = true;
        for (auto [n, target] : {Row{3, 4}, {4, 4}, {6, 6}, {7, 6}, {8, 7}}) {
            auto res = random_search(f5, n, 2, 2000, 42);
            ok &= check(res.best.distance >= target,
                        ("search fell short at n = " + std::to_string(n)).c_str());
        }
        return ok;
    });

    criterion(9, "covering lemma", [] {
        bool ok = true;
        FiniteField f5(5, 1);
        for (size_t pos = 0; pos < 4; ++pos)
            for (uint32_t v = 1; v < 5; ++v) {
                std::vector<uint32_t> u(4, 0);
                u[pos] = v;
                ok &= check(cover_oracle(f5, 2, 2, u) <= cover_bound(5, 2, 2), "cover bound violated");
            }
        FiniteField f3(3, 1);
        std::mt19937_64 rng(505);
        int tested = 0;
        while (tested < 50) {
            std::vector<uint32_t> u(8, 0);
            int wt = 1 + int(rng() % 3);
            for (int i = 0; i < wt; ++i) u[rng() % 8] = 1 + uint32_t(rng() % 2);
            bool nonzero = false;
            for (uint32_t x : u) nonzero |= x != 0;
            if (!nonzero) continue;
            ok &= check(cover_oracle(f3, 4, 2, u) <= cover_bound(3, 4, 2), "cover bound violated");
            ++tested;
        }
        return ok;
    });

    criterion(10, "entropy and relative-distance ingredients", [] {
        bool ok = true;
        for (unsigned q : {3u, 5u, 9u}) {
            ok &= check(std::abs(entropy(q, 0.0)) <= 1e-12, "H(0) != 0");
            ok &= check(std::abs(entropy(q, double(q - 1) / q) - 1.0) <= 1e-12, "H((q-1)/q) != 1");
        }
        for (unsigned q : {3u, 5u}) {
            double prev = 0.0;
            for (int t : {2, 3, 4}) {
                auto r = gv_relative_distance(q, t);
                ok &= check(std::abs(entropy(q, r.delta) - r.level) <= 1e-9, "defining relation violated");
                ok &= check(r.delta > prev, "delta not increasing in t");
                prev = r.delta;
            }
        }
        return ok;
    });

    if (failures) {
        std::printf("%d criterion(s) failed\n", failures);
        return 1;
    }
    std::printf("all criteria passed\n");
    return 0;
}
