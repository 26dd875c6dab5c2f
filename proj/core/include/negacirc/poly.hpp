#ifndef NEGACIRC_POLY_HPP
#define NEGACIRC_POLY_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "negacirc/galois.hpp"

namespace negacirc {

/// Univariate polynomial over a FiniteField. Coefficients are stored as
/// canonical codes, ascending in degree, with no trailing zeros; the zero
/// polynomial is the empty sequence (degree -1).
class Poly {
   public:
    explicit Poly(const FiniteField& field) : field_(&field) {}
    Poly(const FiniteField& field, std::vector<uint32_t> coeffs);

    static Poly x(const FiniteField& field);
    static Poly constant(const FiniteField& field, uint32_t code);
    /// x^n + (c scaled): convenience for sparse construction.
    static Poly monomial(const FiniteField& field, uint32_t coeff, size_t deg);
    /// Parse "1,0,2" (= 1 + 2x^2).
    static Poly parse(const FiniteField& field, const std::string& text);

    const FiniteField& field() const { return *field_; }
    int degree() const noexcept { return int(c_.size()) - 1; }
    bool is_zero() const noexcept { return c_.empty(); }
    bool is_one() const noexcept { return c_.size() == 1 && c_[0] == 1; }
    bool is_monic() const noexcept { return !c_.empty() && c_.back() == 1; }
    uint32_t coeff(size_t i) const noexcept { return i < c_.size() ? c_[i] : 0; }
    uint32_t leading() const noexcept { return c_.empty() ? 0 : c_.back(); }
    const std::vector<uint32_t>& coeffs() const noexcept { return c_; }

    Poly operator+(const Poly& rhs) const;
    Poly operator-(const Poly& rhs) const;
    Poly operator*(const Poly& rhs) const;
    Poly operator*(FieldElement s) const;
    Poly operator-() const;
    /// Division with remainder: f = q*g + r, deg r < deg g. Throws
    /// DivisionByZero when g = 0.
    std::pair<Poly, Poly> divmod(const Poly& g) const;
    Poly operator/(const Poly& g) const { return divmod(g).first; }
    Poly operator%(const Poly& g) const { return divmod(g).second; }

    Poly monic() const;  // zero stays zero
    FieldElement eval(FieldElement at) const;

    bool operator==(const Poly& rhs) const;
    bool operator!=(const Poly& rhs) const { return !(*this == rhs); }

    std::string to_string() const;  // "1,0,2"

   private:
    const FiniteField* field_;
    std::vector<uint32_t> c_;

    void normalize();
};

/// Monic gcd; gcd(0,0) = 0.
Poly gcd(Poly a, Poly b);

/// Monic normalization of x^deg(f) * f(1/x). Requires f(0) != 0
/// (NotReciprocable otherwise).
Poly reciprocal(const Poly& f);

/// Canonical order on polynomials: by degree, then by coefficient codes
/// compared from the constant term upward.
bool canonical_less(const Poly& a, const Poly& b);

/// The ring R(n, F_q) = F_q[x]/<x^n - alpha>; alpha defaults to -1, the
/// negacyclic case. Requires gcd(n, q) = 1 (NotCoprime otherwise).
class NegacyclicRing {
   public:
    NegacyclicRing(const FiniteField& field, int n);
    NegacyclicRing(const FiniteField& field, int n, FieldElement alpha);

    const FiniteField& field() const { return *field_; }
    int coindex() const noexcept { return n_; }
    FieldElement shift_constant() const { return FieldElement(*field_, alpha_); }
    Poly modulus() const;  // x^n - alpha

    /// Reduce mod x^n - alpha by folding x^(n+i) -> alpha x^i.
    Poly reduce(const Poly& f) const;
    Poly mul(const Poly& a, const Poly& b) const { return reduce(a * b); }

   private:
    const FiniteField* field_;
    int n_;
    uint32_t alpha_;
};

/// a(-x^(n-1)) reduced modulo x^n + 1; equals a(x^-1) in R(n, F_q).
Poly star_image(const Poly& a, int n);

}  // namespace negacirc

#endif
