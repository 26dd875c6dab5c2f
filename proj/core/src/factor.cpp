#include "negacirc/factor.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include <boost/multiprecision/cpp_int.hpp>

namespace negacirc {

using boost::multiprecision::cpp_int;

namespace {

// --- splitting-field arithmetic -------------------------------------------
//
// F_q[y]/(g) with g monic irreducible of degree m over the base field. Kept
// as plain coefficient vectors of fixed length m; no tables, so it scales to
// the degree-60 splitting fields the factor grid needs.
struct SplittingField {
    const FiniteField& F;
    std::vector<uint32_t> g;  // ascending, monic, length m+1
    int m;

    using Elt = std::vector<uint32_t>;

    Elt zero() const { return Elt(size_t(m), 0); }
    Elt one() const {
        Elt e = zero();
        e[0] = 1;
        return e;
    }
    Elt from_base(uint32_t c) const {
        Elt e = zero();
        e[0] = c;
        return e;
    }
    bool is_zero(const Elt& a) const {
        return std::all_of(a.begin(), a.end(), [](uint32_t v) { return v == 0; });
    }
    bool is_one(const Elt& a) const {
        if (a[0] != 1) return false;
        return std::all_of(a.begin() + 1, a.end(), [](uint32_t v) { return v == 0; });
    }

    Elt add(const Elt& a, const Elt& b) const {
        Elt r(size_t(m), 0u);
        for (int i = 0; i < m; ++i) r[size_t(i)] = F.add(a[size_t(i)], b[size_t(i)]);
        return r;
    }
    Elt sub(const Elt& a, const Elt& b) const {
        Elt r(size_t(m), 0u);
        for (int i = 0; i < m; ++i) r[size_t(i)] = F.sub(a[size_t(i)], b[size_t(i)]);
        return r;
    }
    Elt mul(const Elt& a, const Elt& b) const {
        std::vector<uint32_t> t(size_t(2 * m - 1), 0);
        for (int i = 0; i < m; ++i) {
            if (a[size_t(i)] == 0) continue;
            for (int j = 0; j < m; ++j) {
                if (b[size_t(j)] == 0) continue;
                size_t pos = size_t(i + j);
                t[pos] = F.add(t[pos], F.mul(a[size_t(i)], b[size_t(j)]));
            }
        }
        // reduce by monic g
        for (int i = 2 * m - 2; i >= m; --i) {
            uint32_t c = t[size_t(i)];
            if (c == 0) continue;
            t[size_t(i)] = 0;
            for (int j = 0; j < m; ++j)
                t[size_t(i - m + j)] = F.sub(t[size_t(i - m + j)], F.mul(c, g[size_t(j)]));
        }
        t.resize(size_t(m));
        return t;
    }
    Elt pow(Elt a, uint64_t e) const {
        Elt r = one();
        while (e) {
            if (e & 1) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }
    Elt pow_big(const Elt& a, const cpp_int& e) const {
        if (e == 0) return one();
        Elt r = one();
        for (long i = long(boost::multiprecision::msb(e)); i >= 0; --i) {
            r = mul(r, r);
            if (boost::multiprecision::bit_test(e, unsigned(i))) r = mul(r, a);
        }
        return r;
    }
};

// Polynomials over the base field, as raw coefficient vectors (ascending,
// possibly with trailing zeros). Local helpers for the modulus search.
int vdeg(const std::vector<uint32_t>& f) {
    for (int i = int(f.size()) - 1; i >= 0; --i)
        if (f[size_t(i)] != 0) return i;
    return -1;
}

std::vector<uint32_t> vrem(std::vector<uint32_t> f, const std::vector<uint32_t>& g, const FiniteField& F) {
    int dg = vdeg(g);
    uint32_t inv_lead = F.inv(g[size_t(dg)]);
    for (int i = vdeg(f); i >= dg; i = vdeg(f)) {
        uint32_t scale = F.mul(f[size_t(i)], inv_lead);
        for (int j = 0; j <= dg; ++j)
            f[size_t(i - dg + j)] = F.sub(f[size_t(i - dg + j)], F.mul(scale, g[size_t(j)]));
    }
    f.resize(size_t(std::max(vdeg(f) + 1, 0)));
    return f;
}

std::vector<uint32_t> vgcd(std::vector<uint32_t> a, std::vector<uint32_t> b, const FiniteField& F) {
    while (vdeg(b) >= 0) {
        auto r = vrem(a, b, F);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

// Deterministic irreducibility for the splitting-field modulus: walk the
// Frobenius chain s_{i+1} = s_i^q mod f and require gcd(s_i - x, f) = 1 for
// every i <= m/2. Reducible candidates exit at their smallest factor degree.
bool irreducible_ddf(const std::vector<uint32_t>& f, const FiniteField& F) {
    int m = vdeg(f);
    if (m == 1) return true;
    SplittingField S{F, f, m};  // arithmetic mod f; f need not be irreducible here
    SplittingField::Elt s = S.zero();
    s[1] = 1;  // x
    auto x_elt = s;
    for (int i = 1; 2 * i <= m; ++i) {
        s = S.pow(s, F.order());
        auto diff = S.sub(s, x_elt);
        std::vector<uint32_t> d(diff.begin(), diff.end());
        auto g = vgcd(f, d, F);
        if (vdeg(g) != 0) return false;
    }
    return true;
}

// Lexicographically smallest monic irreducible of degree m over the base
// field, same tuple order as the FiniteField modulus choice. The scan starts
// at constant term 1: every irreducible of degree >= 2 has a nonzero constant
// term, so nothing smaller is skipped.
std::vector<uint32_t> splitting_modulus(const FiniteField& F, int m) {
    if (m == 1) return {0, 1};  // y
    std::vector<uint32_t> c(size_t(m), 0);
    c[0] = 1;
    uint64_t q = F.order();
    for (;;) {
        std::vector<uint32_t> f(c.begin(), c.end());
        f.push_back(1);
        if (irreducible_ddf(f, F)) return f;
        int i = m - 1;
        while (i >= 0 && c[size_t(i)] == q - 1) c[size_t(i--)] = 0;
        if (i < 0) fail("InternalError", "no splitting modulus found");
        ++c[size_t(i)];
    }
}

std::vector<uint64_t> prime_factors_u64(uint64_t n) {
    std::vector<uint64_t> out;
    for (uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

// Deterministic primitive 2n-th root of unity in the splitting field: scan
// candidates in canonical-code order and keep the first theta whose
// ((q^m - 1)/2n)-th power has order exactly 2n.
SplittingField::Elt find_root_of_unity(const SplittingField& S, uint64_t two_n) {
    cpp_int big_q = S.F.order();
    cpp_int group = boost::multiprecision::pow(big_q, unsigned(S.m)) - 1;
    cpp_int e = group / two_n;
    auto rprimes = prime_factors_u64(two_n);
    for (uint64_t code = 1;; ++code) {
        SplittingField::Elt theta = S.zero();
        uint64_t v = code;
        for (int i = 0; i < S.m && v; ++i) {
            theta[size_t(i)] = uint32_t(v % S.F.order());
            v /= S.F.order();
        }
        if (v != 0) fail("InternalError", "exhausted splitting field without a primitive root");
        auto psi = S.pow_big(theta, e);
        if (S.is_zero(psi)) continue;
        bool full_order = true;
        for (uint64_t r : rprimes) {
            if (S.is_one(S.pow(psi, two_n / r))) {
                full_order = false;
                break;
            }
        }
        if (full_order) return psi;
    }
}

// Classify a complete list of monic irreducible factors into the
// self-reciprocal / reciprocal-pair shape and sort canonically.
Factorization classify_factors(const FiniteField& F, int n, std::vector<Poly> factors) {
    Factorization fac{&F, n, 1, {}, {}};
    std::vector<bool> used(factors.size(), false);
    for (size_t i = 0; i < factors.size(); ++i) {
        if (used[i]) continue;
        Poly r = reciprocal(factors[i]);
        if (r == factors[i]) {
            int deg = factors[i].degree();
            if (deg > 1 && deg % 2 != 0)
                fail("InternalError", "odd-degree self-reciprocal factor of degree > 1");
            fac.self_reciprocal.push_back({factors[i], deg / 2});
            used[i] = true;
            continue;
        }
        size_t partner = factors.size();
        for (size_t j = i + 1; j < factors.size(); ++j) {
            if (!used[j] && factors[j] == r) {
                partner = j;
                break;
            }
        }
        if (partner == factors.size()) fail("InternalError", "factor without reciprocal partner");
        used[i] = used[partner] = true;
        Poly a = factors[i], b = factors[partner];
        if (canonical_less(b, a)) std::swap(a, b);
        fac.pairs.push_back({a, b, a.degree()});
    }
    std::sort(fac.self_reciprocal.begin(), fac.self_reciprocal.end(),
              [](const auto& a, const auto& b) { return canonical_less(a.g, b.g); });
    std::sort(fac.pairs.begin(), fac.pairs.end(),
              [](const auto& a, const auto& b) { return canonical_less(a.h, b.h); });
    return fac;
}

}  // namespace

Poly Factorization::product() const {
    Poly acc = Poly::constant(*field, unit);
    for (const auto& s : self_reciprocal) acc = acc * s.g;
    for (const auto& p : pairs) acc = acc * p.h * p.h_star;
    return acc;
}

std::vector<Poly> Factorization::all_factors() const {
    std::vector<Poly> out;
    for (const auto& s : self_reciprocal) out.push_back(s.g);
    for (const auto& p : pairs) {
        out.push_back(p.h);
        out.push_back(p.h_star);
    }
    std::sort(out.begin(), out.end(), canonical_less);
    return out;
}

bool Factorization::same_factors(const Factorization& other) const {
    auto a = all_factors(), b = other.all_factors();
    return a == b;
}

Factorization factor_negacyclic(const FiniteField& F, int n) {
    if (n < 1) fail("DomainMismatch", "coindex must be >= 1");
    if (uint64_t(n) % F.characteristic() == 0)
        fail("NotCoprime", "gcd(n, q) != 1 for n = " + std::to_string(n));

    uint64_t two_n = 2 * uint64_t(n);
    uint64_t q_mod = F.order() % two_n;
    // m = multiplicative order of q modulo 2n
    int m = 1;
    uint64_t acc = q_mod;
    while (acc != 1) {
        acc = acc * q_mod % two_n;
        ++m;
    }

    SplittingField S{F, splitting_modulus(F, m), m};
    auto xi = find_root_of_unity(S, two_n);

    // power table xi^e, e in [0, 2n)
    std::vector<SplittingField::Elt> xi_pow(two_n, S.one());
    for (uint64_t e = 1; e < two_n; ++e) xi_pow[e] = S.mul(xi_pow[e - 1], xi);

    // q-cyclotomic cosets over the odd residues modulo 2n
    std::vector<Poly> factors;
    std::vector<bool> seen(two_n, false);
    for (uint64_t u = 1; u < two_n; u += 2) {
        if (seen[u]) continue;
        std::vector<uint64_t> coset;
        uint64_t v = u;
        do {
            seen[v] = true;
            coset.push_back(v);
            v = v * q_mod % two_n;
        } while (v != u);

        // minimal polynomial prod (x - xi^v), coefficients in S
        std::vector<SplittingField::Elt> mp{S.one()};
        for (uint64_t expo : coset) {
            std::vector<SplittingField::Elt> next(mp.size() + 1, S.zero());
            const auto& root = xi_pow[expo];
            for (size_t i = 0; i < mp.size(); ++i) {
                next[i + 1] = S.add(next[i + 1], mp[i]);
                next[i] = S.sub(next[i], S.mul(mp[i], root));
            }
            mp = std::move(next);
        }
        std::vector<uint32_t> coeffs;
        coeffs.reserve(mp.size());
        for (const auto& c : mp) {
            for (size_t i = 1; i < c.size(); ++i)
                if (c[i] != 0) fail("InternalError", "minimal polynomial coefficient escaped the base field");
            coeffs.push_back(c[0]);
        }
        factors.emplace_back(F, std::move(coeffs));
    }

    Factorization fac = classify_factors(F, n, std::move(factors));
    if (!(fac.product() == NegacyclicRing(F, n).modulus()))
        fail("InternalError", "factor product does not reconstruct x^n + 1");
    return fac;
}

bool two_factor_case(const FiniteField& F, int n) {
    Factorization fac = factor_negacyclic(F, n);
    return fac.self_reciprocal.empty() && fac.pairs.size() == 1;
}

Poly dickson(unsigned m, FieldElement alpha) {
    const FiniteField& F = alpha.field();
    if (m == 0) return Poly::constant(F, F.from_int(2).code());
    std::vector<uint32_t> c(size_t(m) + 1, 0);
    cpp_int p_char = F.characteristic();
    for (unsigned p = 0; 2 * p <= m; ++p) {
        // exact integer m/(m-p) * C(m-p, p)
        cpp_int binom = 1;
        for (unsigned i = 0; i < p; ++i) {
            binom *= (m - p - i);
            binom /= (i + 1);
        }
        cpp_int coeff_int = binom * m / (m - p);
        cpp_int rem = coeff_int % p_char;
        uint32_t reduced = rem.convert_to<uint32_t>();
        uint32_t val = F.mul(reduced, F.pow(F.neg(alpha.code()), p));
        c[size_t(m - 2 * p)] = val;
    }
    return Poly(F, std::move(c));
}

unsigned pow2_split_parameter(const FiniteField& F) {
    uint64_t q = F.order();
    auto v2 = [](uint64_t x) {
        unsigned v = 0;
        while (x % 2 == 0) {
            x /= 2;
            ++v;
        }
        return v;
    };
    if (q % 4 == 3) return v2(q + 1);
    return v2(q - 1) - 1;
}

Factorization closed_form_pow2(const FiniteField& F, unsigned e) {
    if (e < 1) fail("DomainMismatch", "exponent must be >= 1");
    uint64_t q = F.order();
    unsigned A = pow2_split_parameter(F);
    std::vector<Poly> raw;

    auto roots_of = [&](const Poly& f) {
        std::vector<uint32_t> roots;
        for (uint64_t c = 0; c < q; ++c)
            if (f.eval(F.element(c)).is_zero()) roots.push_back(uint32_t(c));
        return roots;
    };

    if (q % 4 == 3) {
        if (e < A) {
            // x^2 + gamma x + 1 over the roots of D_{2^(e-1)}(x, 1)
            auto gamma_set = roots_of(dickson(1u << (e - 1), F.one()));
            for (uint32_t g : gamma_set) raw.push_back(Poly(F, {1, g, 1}));
        } else {
            // x^(2^(e-A+1)) + delta x^(2^(e-A)) - 1 over the roots of D_{2^(A-1)}(x, -1)
            auto delta_set = roots_of(dickson(1u << (A - 1), F.from_int(-1)));
            size_t hi = size_t(1) << (e - A + 1), mid = size_t(1) << (e - A);
            for (uint32_t d : delta_set) {
                std::vector<uint32_t> c(hi + 1, 0);
                c[0] = F.neg(1);
                c[mid] = d;
                c[hi] = 1;
                raw.push_back(Poly(F, std::move(c)));
            }
        }
    } else {
        // U_k: primitive 2^k-th roots of unity in F_q
        auto primitive_2k_roots = [&](unsigned k) {
            std::vector<uint32_t> out;
            for (uint64_t c = 1; c < q; ++c)
                if (F.element_order(uint32_t(c)) == (uint64_t(1) << k)) out.push_back(uint32_t(c));
            return out;
        };
        if (e <= A) {
            for (uint32_t u : primitive_2k_roots(e + 1)) raw.push_back(Poly(F, {u, 1}));
        } else {
            size_t deg = size_t(1) << (e - A);
            for (uint32_t u : primitive_2k_roots(A + 1)) {
                std::vector<uint32_t> c(deg + 1, 0);
                c[0] = u;
                c[deg] = 1;
                raw.push_back(Poly(F, std::move(c)));
            }
        }
    }

    Factorization generic = factor_negacyclic(F, 1 << e);
    std::vector<Poly> sorted_raw = raw;
    std::sort(sorted_raw.begin(), sorted_raw.end(), canonical_less);
    if (sorted_raw != generic.all_factors()) {
        // assemble what we can of the closed form for the error payload
        Factorization closed{&F, 1 << e, 1, {}, {}};
        for (auto& f : sorted_raw) closed.self_reciprocal.push_back({f, std::max(f.degree() / 2, 0)});
        throw ClosedFormMismatch(std::move(closed), std::move(generic),
                                 "closed-form factors disagree with the generic factorization at q = " +
                                     std::to_string(q) + ", e = " + std::to_string(e));
    }
    return generic;
}

}  // namespace negacirc
