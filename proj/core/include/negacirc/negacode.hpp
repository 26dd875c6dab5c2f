#ifndef NEGACIRC_NEGACODE_HPP
#define NEGACIRC_NEGACODE_HPP

#include <cstdint>
#include <vector>

#include "negacirc/codematrix.hpp"
#include "negacirc/factor.hpp"

namespace negacirc {

/// Index-t multinegacirculant code <[1, a_1, ..., a_{t-1}]> over R(n, F_q):
/// the [tn, n] code generated by (I | A_1 | ... | A_{t-1}) with negacirculant
/// blocks. Requires t >= 2, gcd(n, q) = 1 and deg a_i < n.
struct MultiNegaCode {
    MultiNegaCode(const FiniteField& field, int n, std::vector<Poly> generators);

    const FiniteField& field() const { return *field_; }
    int coindex() const noexcept { return n_; }
    int index() const noexcept { return int(gens_.size()) + 1; }
    const std::vector<Poly>& generators() const noexcept { return gens_; }

    CodeMatrix generator_matrix() const;

   private:
    const FiniteField* field_;
    int n_;
    std::vector<Poly> gens_;
};

/// Index-2 LCD criterion: gcd(1 + a(x) a(-x^(n-1)), x^n + 1) = 1.
bool lcd_gcd_test(const Poly& a, int n);

enum class ConstituentKind { Hermitian, PairHalf };

/// The CRT component of a code at one irreducible factor f of x^n + 1:
/// the span of (1, a_1 mod f, ..., a_{t-1} mod f) over F_q[x]/<f>.
struct Constituent {
    Poly factor;
    ConstituentKind kind;
    int conj_power;          // Hermitian: d with deg f = 2d (0 for x + 1); PairHalf: unused
    int partner;             // PairHalf: index of the partner constituent; -1 otherwise
    std::vector<Poly> span;  // a_i mod factor; the leading 1 is implicit
    bool lcd_ok;             // this constituent passes its LCD condition
};

/// One constituent per irreducible factor, with per-constituent LCD verdicts:
/// a Hermitian constituent at g (deg 2d) passes iff
///   1 + sum_i abar_i * abar_i^(q^d) != 0 in F_q[x]/<g>,
/// and a reciprocal pair (h, h*) passes iff
///   1 + sum_i (a_i mod h)(a_i(-x^(n-1)) mod h) != 0,
/// the partner coordinates being matched through the root correspondence
/// xi^v <-> -xi^((n-1)v).
std::vector<Constituent> constituents(const MultiNegaCode& code, const Factorization& fac);

/// True iff every constituent passes.
bool constituent_lcd(const MultiNegaCode& code, const Factorization& fac);

/// Verifies the CRT shape of the Euclidean dual by explicit spanning sets:
/// the ambient dual must be invariant under T_{-1}^t, its component at each
/// pair factor h must equal the Euclidean dual of the primal constituent
/// transported from h*, and its component at each self-reciprocal factor must
/// equal the Hermitian dual of the primal constituent there.
bool dual_decomposition_check(const MultiNegaCode& code, const Factorization& fac);

/// Arithmetic in the residue field F_q[x]/<f>, f monic irreducible.
/// Elements are reduced Polys.
class ResidueField {
   public:
    ResidueField(const FiniteField& base, Poly modulus);

    const FiniteField& base() const { return *base_; }
    const Poly& modulus() const { return f_; }
    int extension_degree() const { return f_.degree(); }

    Poly reduce(const Poly& a) const { return a % f_; }
    Poly add(const Poly& a, const Poly& b) const { return a + b; }
    Poly sub(const Poly& a, const Poly& b) const { return a - b; }
    Poly mul(const Poly& a, const Poly& b) const { return (a * b) % f_; }
    Poly inv(const Poly& a) const;  // throws DivisionByZero at zero
    Poly pow(Poly a, uint64_t e) const;
    /// y -> y^(q^j), iterated Frobenius over the base field.
    Poly frobenius(Poly a, unsigned j) const;
    Poly one() const { return Poly::constant(*base_, 1); }

   private:
    const FiniteField* base_;
    Poly f_;
};

}  // namespace negacirc

#endif
