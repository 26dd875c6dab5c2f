#ifndef NEGACIRC_GALOIS_HPP
#define NEGACIRC_GALOIS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "negacirc/errors.hpp"

namespace negacirc {

class FieldElement;

/// GF(p^k) for an odd prime p, with exact table-backed arithmetic.
///
/// Elements are identified by their canonical code in [0, q): the coefficient
/// tuple (c_0,...,c_{k-1}) of the residue-class representative encoded as
/// sum c_i p^i. Code 0 is zero, code 1 is one. The extension modulus is the
/// lexicographically smallest monic irreducible polynomial of degree k over
/// GF(p), comparing coefficient tuples from the constant term upward; for k=1
/// the modulus is x. Fields are immutable after construction.
class FiniteField {
   public:
    static constexpr uint64_t kDefaultOrderCap = uint64_t(1) << 20;

    FiniteField(uint64_t p, unsigned k, uint64_t order_cap = kDefaultOrderCap);

    FiniteField(const FiniteField&) = delete;
    FiniteField& operator=(const FiniteField&) = delete;

    uint64_t characteristic() const noexcept { return p_; }
    unsigned degree() const noexcept { return k_; }
    uint64_t order() const noexcept { return q_; }
    /// Modulus coefficients ascending, length k+1, monic.
    const std::vector<uint32_t>& modulus() const noexcept { return modulus_; }
    /// "p^k"
    std::string label() const;

    bool same_field(const FiniteField& other) const noexcept;

    // Code-level arithmetic. No argument checking beyond what is stated;
    // callers own the invariant code < q.
    uint32_t add(uint32_t a, uint32_t b) const;
    uint32_t sub(uint32_t a, uint32_t b) const;
    uint32_t neg(uint32_t a) const;
    uint32_t mul(uint32_t a, uint32_t b) const;
    uint32_t inv(uint32_t a) const;  // throws DivisionByZero on a = 0
    uint32_t div(uint32_t a, uint32_t b) const;
    uint32_t pow(uint32_t a, uint64_t e) const;  // 0^0 = 1

    /// +1 nonzero square, -1 nonsquare, 0 at zero.
    int quadratic_character(uint32_t a) const;

    /// a^(p^(j*subfield_degree)): the j-th power of the Frobenius of the
    /// GF(p^subfield_degree)-subfield lattice. frobenius(a, 0) = a.
    uint32_t frobenius(uint32_t a, unsigned j, unsigned subfield_degree = 1) const;

    /// Relative norm onto the index-ext_degree subfield: a^((q-1)/(q0-1))
    /// with q0 = p^(k/ext_degree). The result lies in that subfield and is
    /// returned as an element of this field. Requires ext_degree | k.
    uint32_t norm_to_subfield(uint32_t a, unsigned ext_degree) const;

    /// True iff a lies in the GF(p^d)-subfield, i.e. a^(p^d) = a. Requires d | k.
    bool in_subfield(uint32_t a, unsigned d) const;

    FieldElement element(uint64_t code) const;
    FieldElement zero() const;
    FieldElement one() const;
    FieldElement from_int(int64_t v) const;  // v mod p as a constant

    /// All q elements in ascending canonical-code order.
    std::vector<FieldElement> elements() const;

    /// Multiplicative order of a nonzero element.
    uint64_t element_order(uint32_t a) const;
    uint32_t generator() const noexcept { return generator_; }

   private:
    uint64_t p_;
    unsigned k_;
    uint64_t q_;
    std::vector<uint32_t> modulus_;
    uint32_t generator_;
    std::vector<uint32_t> exp_;  // exp_[i] = g^i for i in [0, 2(q-1))
    std::vector<uint32_t> log_;  // log_[a] for a in [1, q)

    uint32_t raw_mul(uint32_t a, uint32_t b) const;  // polynomial mul mod modulus
};

/// A value of a FiniteField. Carries a pointer to its (immutable, caller-owned)
/// field; mixing elements of distinct fields raises DomainMismatch.
class FieldElement {
   public:
    FieldElement() : field_(nullptr), code_(0) {}
    FieldElement(const FiniteField& field, uint32_t code) : field_(&field), code_(code) {}

    uint32_t code() const noexcept { return code_; }
    const FiniteField& field() const { return *field_; }

    bool is_zero() const noexcept { return code_ == 0; }
    bool is_one() const noexcept { return code_ == 1; }

    FieldElement operator+(const FieldElement& rhs) const;
    FieldElement operator-(const FieldElement& rhs) const;
    FieldElement operator*(const FieldElement& rhs) const;
    FieldElement operator/(const FieldElement& rhs) const;
    FieldElement operator-() const;
    FieldElement inverse() const;
    FieldElement pow(uint64_t e) const;

    bool operator==(const FieldElement& rhs) const;
    bool operator!=(const FieldElement& rhs) const { return !(*this == rhs); }

    std::string to_string() const { return std::to_string(code_); }

   private:
    const FiniteField* field_;
    uint32_t code_;

    static const FiniteField& common(const FieldElement& a, const FieldElement& b);
};

int quadratic_character(const FieldElement& a);
FieldElement norm(const FieldElement& a, unsigned ext_degree);
FieldElement frobenius(const FieldElement& a, unsigned j, unsigned subfield_degree = 1);

}  // namespace negacirc

#endif
