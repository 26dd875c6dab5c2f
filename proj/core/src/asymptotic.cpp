#include "negacirc/asymptotic.hpp"

#include <cmath>

#include "negacirc/negacode.hpp"

namespace negacirc {

double entropy(unsigned q, double y) {
    if (q < 2) fail("DomainError", "entropy base must be >= 2");
    double top = double(q - 1) / q;
    if (y < 0.0 || y > top) fail("DomainError", "entropy argument outside [0, (q-1)/q]");
    if (y == 0.0) return 0.0;
    double lq = std::log(double(q));
    double h = y * std::log(double(q - 1)) / lq - y * std::log(y) / lq;
    if (y < 1.0) h -= (1.0 - y) * std::log(1.0 - y) / lq;
    return h;
}

BoundReport gv_relative_distance(unsigned q, int t, double tolerance) {
    if (t < 2) fail("DomainMismatch", "index t must be >= 2");
    double level = double(t - 1) / (2.0 * t);
    double lo = 0.0, hi = double(q - 1) / q;
    double mid = 0.0;
    for (int it = 0; it < 64; ++it) {
        mid = 0.5 * (lo + hi);
        double h = entropy(q, mid);
        if (std::abs(h - level) <= tolerance && hi - lo <= tolerance) break;
        (h < level ? lo : hi) = mid;
    }
    return {q, t, 1.0 / t, level, mid, std::abs(entropy(q, mid) - level)};
}

int64_t cover_bound(unsigned q, int n, int t) {
    if (n % 2 != 0) fail("DomainMismatch", "the covering bound requires even n");
    int64_t r = 1;
    for (int i = 0; i < (t - 1) * n / 2; ++i) {
        if (r > INT64_MAX / int64_t(q)) fail("Overflow", "bound does not fit in 64 bits");
        r *= q;
    }
    return r - 1;
}

int64_t cover_oracle(const FiniteField& F, int n, int t, const std::vector<uint32_t>& u, uint64_t cap) {
    if (!two_factor_case(F, n))
        fail("TwoFactorHypothesisFails", "x^n + 1 does not split into one reciprocal pair at n = " + std::to_string(n));
    if (u.size() != size_t(n) * size_t(t)) fail("DomainMismatch", "vector length must be t*n");

    uint64_t q = F.order();
    size_t coeffs = size_t(n) * size_t(t - 1);
    uint64_t space = 1;
    for (size_t i = 0; i < coeffs; ++i) {
        if (space > cap / q) fail("TooLargeToEnumerate", "generator space exceeds the oracle cap");
        space *= q;
    }

    Factorization fac = factor_negacyclic(F, n);
    int64_t count = 0;
    std::vector<uint32_t> digits(coeffs, 0);
    for (;;) {
        std::vector<Poly> gens;
        gens.reserve(size_t(t - 1));
        for (int b = 0; b < t - 1; ++b) {
            std::vector<uint32_t> c(digits.begin() + b * n, digits.begin() + (b + 1) * n);
            gens.emplace_back(F, std::move(c));
        }
        MultiNegaCode code(F, n, gens);
        if (constituent_lcd(code, fac) && in_row_space(code.generator_matrix(), u)) ++count;

        size_t pos = 0;
        while (pos < coeffs && digits[pos] + 1 == q) digits[pos++] = 0;
        if (pos == coeffs) break;
        ++digits[pos];
    }
    return count;
}

int64_t hamming_ball_volume(unsigned q, int len, int radius) {
    int64_t total = 0;
    for (int w = 0; w <= radius && w <= len; ++w) {
        int64_t binom = 1;
        for (int i = 0; i < w; ++i) binom = binom * (len - i) / (i + 1);
        int64_t term = binom;
        for (int i = 0; i < w; ++i) term *= int64_t(q - 1);
        total += term;
    }
    return total;
}

}  // namespace negacirc
