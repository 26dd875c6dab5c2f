#ifndef NEGACIRC_FACTOR_HPP
#define NEGACIRC_FACTOR_HPP

#include <cstdint>
#include <vector>

#include "negacirc/poly.hpp"

namespace negacirc {

/// One monic irreducible self-reciprocal factor g of x^n + 1. Non-linear
/// self-reciprocal irreducibles have even degree 2d; the only possible linear
/// one is x + 1 (present exactly when n is odd), recorded with d = 0.
struct SelfReciprocalFactor {
    Poly g;
    int d;  // deg g / 2, or 0 for x + 1
};

/// A reciprocal pair (h, h*) of monic irreducible factors, deg h = e.
/// h is the canonically smaller partner.
struct ReciprocalPair {
    Poly h;
    Poly h_star;
    int e;
};

/// The full factor inventory of x^n + 1 over F_q:
///   x^n + 1 = unit * prod g_i * prod h_j h_j*
/// with every listed factor monic irreducible. Lists are canonically sorted
/// (degree, then coefficient codes ascending), so the value is byte-stable.
struct Factorization {
    const FiniteField* field;
    int n;
    uint32_t unit;  // always 1 here: x^n + 1 and all factors are monic
    std::vector<SelfReciprocalFactor> self_reciprocal;
    std::vector<ReciprocalPair> pairs;

    Poly product() const;
    size_t factor_count() const { return self_reciprocal.size() + 2 * pairs.size(); }
    std::vector<Poly> all_factors() const;  // canonical order, pairs flattened
    bool same_factors(const Factorization& other) const;
};

/// Factor x^n + 1 over the given field by the root/coset method: the roots
/// are the odd powers of a primitive 2n-th root of unity xi in the splitting
/// field GF(q^m), m = ord_{2n}(q); exponents are grouped into q-cyclotomic
/// cosets modulo 2n and each minimal polynomial is assembled as
/// prod_j (x - xi^(u q^j)). Requires gcd(n, q) = 1 (NotCoprime otherwise).
Factorization factor_negacyclic(const FiniteField& field, int n);

/// True iff x^n + 1 = h h* with h irreducible and (h, h*) a genuine
/// reciprocal pair.
bool two_factor_case(const FiniteField& field, int n);

/// Dickson polynomial of the first kind, D_0 = 2 and for m > 0
///   D_m(x, alpha) = sum_{p=0}^{floor(m/2)} m/(m-p) C(m-p, p) (-alpha)^p x^(m-2p),
/// each rational coefficient evaluated exactly in integers before reduction.
Poly dickson(unsigned m, FieldElement alpha);

/// Raised by closed_form_pow2 when the closed-form factor set disagrees with
/// the generic factorization; both are attached for inspection.
class ClosedFormMismatch : public DomainError {
   public:
    ClosedFormMismatch(Factorization closed, Factorization generic, const std::string& detail)
        : DomainError("ClosedFormMismatch", detail),
          closed_form(std::move(closed)),
          generic(std::move(generic)) {}

    Factorization closed_form;
    Factorization generic;
};

/// Closed-form factorization of x^(2^e) + 1, dispatching on q mod 4:
/// quadratic trinomials / Dickson-root trinomials for q = 3 (mod 4), linear
/// factors / binomials over 2-power roots of unity for q = 1 (mod 4). The
/// result is always validated against factor_negacyclic and a mismatch
/// raises ClosedFormMismatch rather than returning unverified factors.
Factorization closed_form_pow2(const FiniteField& field, unsigned e);

/// 2-adic valuation split parameter used by the closed forms: v2(q+1) for
/// q = 3 (mod 4) and v2(q-1) - 1 for q = 1 (mod 4).
unsigned pow2_split_parameter(const FiniteField& field);

}  // namespace negacirc

#endif
