#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "negacirc/poly.hpp"

using namespace negacirc;

TEST_CASE("construction and normalization") {
    FiniteField f5(5, 1);
    Poly zero(f5);
    CHECK(zero.is_zero());
    CHECK(zero.degree() == -1);
    CHECK(Poly(f5, {1, 2, 0, 0}).degree() == 1);  // trailing zeros stripped
    CHECK(Poly::parse(f5, "1,0,2").coeff(2) == 2);
    CHECK(Poly::parse(f5, "1,0,2").to_string() == "1,0,2");
    CHECK_THROWS_AS(Poly::parse(f5, "1,7"), DomainError);
}

TEST_CASE("products hit the power-of-two moduli") {
    FiniteField f3(3, 1), f5(5, 1);
    // (x^2+x+2)(x^2+2x+2) = x^4 + 1 over GF(3)
    CHECK(Poly(f3, {2, 1, 1}) * Poly(f3, {2, 2, 1}) == Poly(f3, {1, 0, 0, 0, 1}));
    // (x^2+2)(x^2+3) = x^4 + 1 over GF(5)
    CHECK(Poly(f5, {2, 0, 1}) * Poly(f5, {3, 0, 1}) == Poly(f5, {1, 0, 0, 0, 1}));
}

TEST_CASE("division with remainder") {
    FiniteField f7(7, 1);
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<uint32_t> dist(0, 6);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<uint32_t> fc(8), gc(4);
        for (auto& c : fc) c = dist(rng);
        for (auto& c : gc) c = dist(rng);
        Poly f(f7, fc), g(f7, gc);
        if (g.is_zero()) {
            CHECK_THROWS_WITH_AS(f.divmod(g), doctest::Contains("DivisionByZero"), DomainError);
            continue;
        }
        auto [q, r] = f.divmod(g);
        CHECK(q * g + r == f);
        CHECK(r.degree() < g.degree());
    }
}

TEST_CASE("gcd") {
    FiniteField f5(5, 1);
    Poly f = Poly(f5, {3, 1}) * Poly(f5, {2, 0, 1});
    CHECK(gcd(f, Poly(f5)) == f.monic());
    CHECK(gcd(Poly(f5), Poly(f5)).is_zero());
    CHECK(gcd(f, Poly(f5, {3, 1})) == Poly(f5, {3, 1}));
    CHECK(gcd(Poly(f5, {1, 1}), Poly(f5, {2, 1})).is_one());
}

TEST_CASE("reciprocal") {
    FiniteField f5(5, 1), f3(3, 1);
    CHECK(reciprocal(Poly(f5, {2, 1})) == Poly(f5, {3, 1}));      // x+2 -> x+3
    CHECK(reciprocal(Poly(f5, {1, 0, 1})) == Poly(f5, {1, 0, 1}));  // palindrome
    CHECK(reciprocal(Poly(f3, {2, 1, 1})) == Poly(f3, {2, 2, 1}));
    CHECK_THROWS_WITH_AS(reciprocal(Poly(f5, {0, 1})), doctest::Contains("NotReciprocable"), DomainError);
    CHECK_THROWS_AS(reciprocal(Poly(f5)), DomainError);
}

TEST_CASE("reciprocal is an involution on monic units") {
    for (auto [p, k] : {std::pair<uint64_t, unsigned>{3, 1}, {5, 1}}) {
        FiniteField F(p, k);
        // exhaustively all monic f with deg <= 3, f(0) != 0
        for (int deg = 1; deg <= 3; ++deg) {
            std::vector<uint32_t> c(size_t(deg) + 1, 0);
            c[size_t(deg)] = 1;
            uint64_t combos = 1;
            for (int i = 0; i < deg; ++i) combos *= F.order();
            for (uint64_t t = 0; t < combos; ++t) {
                uint64_t v = t;
                for (int i = 0; i < deg; ++i) {
                    c[size_t(i)] = uint32_t(v % F.order());
                    v /= F.order();
                }
                if (c[0] == 0) continue;
                Poly f(F, c);
                CHECK(reciprocal(reciprocal(f)) == f);
            }
        }
    }
}

TEST_CASE("star image") {
    FiniteField f5(5, 1);
    CHECK(star_image(Poly(f5, {3}), 4) == Poly(f5, {3}));              // constants fixed
    CHECK(star_image(Poly::x(f5), 2) == Poly(f5, {0, 4}));             // x -> -x
    CHECK(star_image(Poly::x(f5), 4) == Poly(f5, {0, 0, 0, 4}));       // x -> -x^3

    // star is evaluation at the ring inverse of x: star(a)*x... x * star(x) = 1 in R(n)
    NegacyclicRing ring(f5, 4);
    CHECK(ring.mul(Poly::x(f5), star_image(Poly::x(f5), 4)).is_one());

    // involution on R(n): star(star(a)) = a
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<uint32_t> dist(0, 4);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<uint32_t> c(6);
        for (auto& v : c) v = dist(rng);
        Poly a(f5, c);
        CHECK(star_image(star_image(a, 6), 6) == a);
    }
}

TEST_CASE("negacyclic ring") {
    FiniteField f3(3, 1);
    CHECK_THROWS_WITH_AS(NegacyclicRing(f3, 6), doctest::Contains("NotCoprime"), DomainError);
    NegacyclicRing ring(f3, 4);
    CHECK(ring.modulus() == Poly(f3, {1, 0, 0, 0, 1}));
    // x^4 = -1, x^5 = -x
    CHECK(ring.reduce(Poly::monomial(f3, 1, 4)) == Poly(f3, {2}));
    CHECK(ring.reduce(Poly::monomial(f3, 1, 5)) == Poly(f3, {0, 2}));

    // multiplicative star: star(ab) = star(a) star(b) in R(n)
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<uint32_t> dist(0, 2);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<uint32_t> ca(4), cb(4);
        for (auto& v : ca) v = dist(rng);
        for (auto& v : cb) v = dist(rng);
        Poly a(f3, ca), b(f3, cb);
        CHECK(star_image(ring.mul(a, b), 4) == ring.mul(star_image(a, 4), star_image(b, 4)));
    }
}
