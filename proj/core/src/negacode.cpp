#include "negacirc/negacode.hpp"

#include <algorithm>

namespace negacirc {

MultiNegaCode::MultiNegaCode(const FiniteField& field, int n, std::vector<Poly> generators)
    : field_(&field), n_(n), gens_(std::move(generators)) {
    NegacyclicRing ring(field, n);  // validates gcd(n, q) = 1
    if (gens_.empty()) fail("DomainMismatch", "index t must be >= 2");
    for (const auto& a : gens_)
        if (a.degree() >= n) fail("DomainMismatch", "generator polynomial degree must be < n");
}

CodeMatrix MultiNegaCode::generator_matrix() const {
    return build_generator(*field_, n_, gens_);
}

bool lcd_gcd_test(const Poly& a, int n) {
    const FiniteField& F = a.field();
    NegacyclicRing ring(F, n);
    Poly prod = ring.mul(a, star_image(a, n));
    Poly lhs = prod + Poly::constant(F, 1);
    return gcd(lhs, ring.modulus()).degree() == 0;
}

ResidueField::ResidueField(const FiniteField& base, Poly modulus) : base_(&base), f_(std::move(modulus)) {
    if (f_.degree() < 1) fail("DomainMismatch", "residue modulus must have degree >= 1");
}

Poly ResidueField::inv(const Poly& a) const {
    Poly r = reduce(a);
    if (r.is_zero()) fail("DivisionByZero", "inverse of zero residue");
    // extended Euclid on (f, r)
    Poly old_r = f_, cur_r = r;
    Poly old_t = Poly(*base_), cur_t = one();
    while (!cur_r.is_zero()) {
        auto [q, rem] = old_r.divmod(cur_r);
        Poly next_t = old_t - q * cur_t;
        old_r = std::move(cur_r);
        cur_r = std::move(rem);
        old_t = std::move(cur_t);
        cur_t = std::move(next_t);
    }
    // old_r is a unit constant (f irreducible, a nonzero)
    FieldElement scale = FieldElement(*base_, base_->inv(old_r.coeff(0)));
    return reduce(old_t * scale);
}

Poly ResidueField::pow(Poly a, uint64_t e) const {
    Poly r = one();
    a = reduce(a);
    while (e) {
        if (e & 1) r = mul(r, a);
        a = mul(a, a);
        e >>= 1;
    }
    return r;
}

Poly ResidueField::frobenius(Poly a, unsigned j) const {
    for (unsigned i = 0; i < j; ++i) a = pow(a, base_->order());
    return a;
}

std::vector<Constituent> constituents(const MultiNegaCode& code, const Factorization& fac) {
    const FiniteField& F = code.field();
    if (!F.same_field(*fac.field) || fac.n != code.coindex())
        fail("DomainMismatch", "factorization does not match the code's ring");

    int n = code.coindex();
    const auto& gens = code.generators();
    std::vector<Poly> star_gens;
    star_gens.reserve(gens.size());
    for (const auto& a : gens) star_gens.push_back(star_image(a, n));

    std::vector<Constituent> out;

    for (const auto& s : fac.self_reciprocal) {
        ResidueField K(F, s.g);
        Constituent c{s.g, ConstituentKind::Hermitian, s.d, -1, {}, true};
        Poly acc = K.one();
        for (const auto& a : gens) {
            Poly abar = K.reduce(a);
            c.span.push_back(abar);
            acc = K.add(acc, K.mul(abar, K.frobenius(abar, unsigned(s.d))));
        }
        c.lcd_ok = !acc.is_zero();
        out.push_back(std::move(c));
    }

    for (const auto& p : fac.pairs) {
        // the pair condition, evaluated in F_q[x]/<h>: partner coordinates
        // arrive through the star image (evaluation at -xi^((n-1)v))
        ResidueField K(F, p.h);
        Poly acc = K.one();
        for (size_t i = 0; i < gens.size(); ++i)
            acc = K.add(acc, K.mul(K.reduce(gens[i]), K.reduce(star_gens[i])));
        bool ok = !acc.is_zero();

        Constituent at_h{p.h, ConstituentKind::PairHalf, 0, int(out.size()) + 1, {}, ok};
        for (const auto& a : gens) at_h.span.push_back(K.reduce(a));
        ResidueField Kstar(F, p.h_star);
        Constituent at_hstar{p.h_star, ConstituentKind::PairHalf, 0, int(out.size()), {}, ok};
        for (const auto& a : gens) at_hstar.span.push_back(Kstar.reduce(a));
        out.push_back(std::move(at_h));
        out.push_back(std::move(at_hstar));
    }
    return out;
}

bool constituent_lcd(const MultiNegaCode& code, const Factorization& fac) {
    auto cs = constituents(code, fac);
    return std::all_of(cs.begin(), cs.end(), [](const Constituent& c) { return c.lcd_ok; });
}

namespace {

// Rank of a matrix with entries in a residue field, by Gaussian elimination.
size_t residue_rank(const ResidueField& K, std::vector<std::vector<Poly>> m) {
    size_t rows = m.size();
    if (rows == 0) return 0;
    size_t cols = m[0].size();
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t piv = r;
        while (piv < rows && m[piv][c].is_zero()) ++piv;
        if (piv == rows) continue;
        std::swap(m[piv], m[r]);
        Poly inv = K.inv(m[r][c]);
        for (size_t j = c; j < cols; ++j) m[r][j] = K.mul(m[r][j], inv);
        for (size_t i = r + 1; i < rows; ++i) {
            if (m[i][c].is_zero()) continue;
            Poly f = m[i][c];
            for (size_t j = c; j < cols; ++j) m[i][j] = K.sub(m[i][j], K.mul(f, m[r][j]));
        }
        ++r;
    }
    return r;
}

// Project an ambient row (t blocks of length n) into (F_q[x]/<f>)^t.
std::vector<Poly> project_row(const FiniteField& F, const std::vector<uint32_t>& row, int n, int t,
                              const ResidueField& K) {
    std::vector<Poly> out;
    out.reserve(size_t(t));
    for (int b = 0; b < t; ++b) {
        std::vector<uint32_t> c(row.begin() + b * n, row.begin() + (b + 1) * n);
        out.push_back(K.reduce(Poly(F, std::move(c))));
    }
    return out;
}

}  // namespace

bool dual_decomposition_check(const MultiNegaCode& code, const Factorization& fac) {
    const FiniteField& F = code.field();
    int n = code.coindex(), t = code.index();
    CodeMatrix g = code.generator_matrix();
    CodeMatrix dual = dual_basis(g);

    if (!is_invariant_under(dual, t, F.from_int(-1))) return false;

    const auto& gens = code.generators();
    std::vector<Poly> star_gens;
    for (const auto& a : gens) star_gens.push_back(star_image(a, n));

    // At every factor f, the transported primal generator reads
    // (1, star(a_1) mod f, ..., star(a_{t-1}) mod f); the dual component must
    // be exactly its dual: Hermitian at self-reciprocal factors, Euclidean at
    // pair halves. Orthogonality of every projected dual row plus a rank count
    // of t-1 pins the subspace.
    auto check_at = [&](const Poly& f, bool hermitian, int conj_d) {
        ResidueField K(F, f);
        std::vector<Poly> w;
        w.push_back(K.one());
        for (const auto& sa : star_gens) w.push_back(K.reduce(sa));
        if (hermitian) {
            // conj(a mod g) equals star(a) mod g; express the pairing on the
            // primal coordinates directly
            w.clear();
            w.push_back(K.one());
            for (const auto& a : gens) w.push_back(K.frobenius(K.reduce(a), unsigned(conj_d)));
        }
        std::vector<std::vector<Poly>> projected;
        for (size_t i = 0; i < dual.rows(); ++i) {
            auto r = project_row(F, dual.row(i), n, t, K);
            Poly acc = Poly(F);
            for (int b = 0; b < t; ++b) acc = K.add(acc, K.mul(r[size_t(b)], w[size_t(b)]));
            if (!acc.is_zero()) return false;
            projected.push_back(std::move(r));
        }
        return residue_rank(K, std::move(projected)) == size_t(t - 1);
    };

    for (const auto& s : fac.self_reciprocal)
        if (!check_at(s.g, true, s.d)) return false;
    for (const auto& p : fac.pairs) {
        if (!check_at(p.h, false, 0)) return false;
        if (!check_at(p.h_star, false, 0)) return false;
    }
    return true;
}

}  // namespace negacirc
