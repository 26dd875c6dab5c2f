#include "negacirc/galois.hpp"

#include <algorithm>
#include <numeric>

namespace negacirc {

namespace {

bool is_prime(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// Dense GF(p) polynomial helpers used only during field construction
// (before the element tables exist). Coefficients ascending, not normalized.
using PPoly = std::vector<uint32_t>;

int pdeg(const PPoly& f) {
    for (int i = int(f.size()) - 1; i >= 0; --i)
        if (f[i] != 0) return i;
    return -1;
}

PPoly pmul(const PPoly& a, const PPoly& b, uint64_t p) {
    int da = pdeg(a), db = pdeg(b);
    if (da < 0 || db < 0) return {};
    PPoly r(size_t(da + db + 1), 0);
    for (int i = 0; i <= da; ++i) {
        if (a[i] == 0) continue;
        for (int j = 0; j <= db; ++j)
            r[size_t(i + j)] = uint32_t((r[size_t(i + j)] + uint64_t(a[i]) * b[j]) % p);
    }
    return r;
}

// Remainder of f by monic g.
PPoly prem(PPoly f, const PPoly& g, uint64_t p) {
    int dg = pdeg(g);
    for (int i = pdeg(f); i >= dg && i >= 0; i = pdeg(f)) {
        uint64_t c = f[size_t(i)];
        if (c == 0) continue;
        for (int j = 0; j <= dg; ++j) {
            uint64_t sub = (c * g[size_t(j)]) % p;
            uint64_t cur = f[size_t(i - dg + j)];
            f[size_t(i - dg + j)] = uint32_t((cur + p - sub) % p);
        }
    }
    f.resize(size_t(std::max(pdeg(f) + 1, 0)));
    return f;
}

// Trial division by every monic polynomial of degree in [1, deg(f)/2].
bool irreducible_trial_division(const PPoly& f, uint64_t p) {
    int n = pdeg(f);
    if (n <= 1) return n == 1;
    if (f[0] == 0) return false;  // divisible by x
    for (int d = 1; 2 * d <= n; ++d) {
        // enumerate monic g = x^d + sum c_i x^i over all coefficient tuples
        uint64_t count = 1;
        for (int i = 0; i < d; ++i) count *= p;
        for (uint64_t t = 0; t < count; ++t) {
            PPoly g(size_t(d + 1), 0);
            uint64_t v = t;
            for (int i = 0; i < d; ++i) {
                g[size_t(i)] = uint32_t(v % p);
                v /= p;
            }
            g[size_t(d)] = 1;
            if (pdeg(prem(f, g, p)) < 0) return false;
        }
    }
    return true;
}

// Lexicographically smallest monic irreducible of degree k over GF(p),
// comparing coefficient tuples from the constant term upward.
PPoly smallest_irreducible(uint64_t p, unsigned k) {
    if (k == 1) return PPoly{0, 1};  // x
    std::vector<uint32_t> c(k, 0);
    for (;;) {
        PPoly f(c.begin(), c.end());
        f.push_back(1);
        if (irreducible_trial_division(f, p)) return f;
        // successor in (c_0, c_1, ...) lex order: the last index varies fastest
        int i = int(k) - 1;
        while (i >= 0 && c[size_t(i)] == p - 1) c[size_t(i--)] = 0;
        if (i < 0) fail("InternalError", "no irreducible modulus found");
        ++c[size_t(i)];
    }
}

std::vector<uint64_t> prime_factors(uint64_t n) {
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

}  // namespace

FiniteField::FiniteField(uint64_t p, unsigned k, uint64_t order_cap) : p_(p), k_(k) {
    if (p % 2 == 0) fail("EvenCharacteristic", "characteristic must be odd, got " + std::to_string(p));
    if (!is_prime(p)) fail("NotPrime", std::to_string(p) + " is not prime");
    if (k == 0) fail("DomainMismatch", "extension degree must be >= 1");

    q_ = 1;
    for (unsigned i = 0; i < k; ++i) {
        if (q_ > order_cap / p) fail("FieldTooLarge", "p^k exceeds the order cap " + std::to_string(order_cap));
        q_ *= p;
    }

    modulus_ = smallest_irreducible(p, k);

    // exp/log tables from a multiplicative generator, found by testing
    // candidates in canonical-code order against the prime factors of q-1.
    auto factors = prime_factors(q_ - 1);
    generator_ = 0;
    for (uint32_t g = 1; g < q_; ++g) {
        bool ok = true;
        for (uint64_t r : factors) {
            // g^((q-1)/r) via square-and-multiply on raw codes
            uint64_t e = (q_ - 1) / r;
            uint32_t acc = 1, base = g;
            while (e) {
                if (e & 1) acc = raw_mul(acc, base);
                base = raw_mul(base, base);
                e >>= 1;
            }
            if (acc == 1) {
                ok = false;
                break;
            }
        }
        if (ok) {
            generator_ = g;
            break;
        }
    }

    exp_.resize(2 * (q_ - 1));
    log_.assign(q_, 0);
    uint32_t v = 1;
    for (uint64_t i = 0; i < q_ - 1; ++i) {
        exp_[i] = v;
        exp_[i + (q_ - 1)] = v;
        log_[v] = uint32_t(i);
        v = raw_mul(v, generator_);
    }
}

uint32_t FiniteField::raw_mul(uint32_t a, uint32_t b) const {
    if (k_ == 1) return uint32_t((uint64_t(a) * b) % p_);
    PPoly fa(k_), fb(k_);
    uint64_t va = a, vb = b;
    for (unsigned i = 0; i < k_; ++i) {
        fa[i] = uint32_t(va % p_);
        va /= p_;
        fb[i] = uint32_t(vb % p_);
        vb /= p_;
    }
    PPoly r = prem(pmul(fa, fb, p_), modulus_, p_);
    uint64_t code = 0;
    for (int i = int(r.size()) - 1; i >= 0; --i) code = code * p_ + r[size_t(i)];
    return uint32_t(code);
}

std::string FiniteField::label() const {
    return std::to_string(p_) + "^" + std::to_string(k_);
}

bool FiniteField::same_field(const FiniteField& other) const noexcept {
    return this == &other || (p_ == other.p_ && k_ == other.k_ && modulus_ == other.modulus_);
}

uint32_t FiniteField::add(uint32_t a, uint32_t b) const {
    if (k_ == 1) {
        uint64_t s = uint64_t(a) + b;
        return uint32_t(s >= p_ ? s - p_ : s);
    }
    uint64_t code = 0, mult = 1;
    for (unsigned i = 0; i < k_; ++i) {
        uint64_t s = a % p_ + b % p_;
        if (s >= p_) s -= p_;
        code += s * mult;
        mult *= p_;
        a = uint32_t(a / p_);
        b = uint32_t(b / p_);
    }
    return uint32_t(code);
}

uint32_t FiniteField::neg(uint32_t a) const {
    if (k_ == 1) return a == 0 ? 0 : uint32_t(p_ - a);
    uint64_t code = 0, mult = 1;
    for (unsigned i = 0; i < k_; ++i) {
        uint64_t d = a % p_;
        code += (d == 0 ? 0 : p_ - d) * mult;
        mult *= p_;
        a = uint32_t(a / p_);
    }
    return uint32_t(code);
}

uint32_t FiniteField::sub(uint32_t a, uint32_t b) const { return add(a, neg(b)); }

uint32_t FiniteField::mul(uint32_t a, uint32_t b) const {
    if (a == 0 || b == 0) return 0;
    return exp_[uint64_t(log_[a]) + log_[b]];
}

uint32_t FiniteField::inv(uint32_t a) const {
    if (a == 0) fail("DivisionByZero", "inverse of zero in GF(" + std::to_string(q_) + ")");
    return exp_[(q_ - 1) - log_[a]];
}

uint32_t FiniteField::div(uint32_t a, uint32_t b) const { return mul(a, inv(b)); }

uint32_t FiniteField::pow(uint32_t a, uint64_t e) const {
    if (a == 0) return e == 0 ? 1 : 0;
    uint64_t le = (uint64_t(log_[a]) % (q_ - 1)) * (e % (q_ - 1)) % (q_ - 1);
    return exp_[le];
}

int FiniteField::quadratic_character(uint32_t a) const {
    if (a == 0) return 0;
    return log_[a] % 2 == 0 ? 1 : -1;
}

uint32_t FiniteField::frobenius(uint32_t a, unsigned j, unsigned subfield_degree) const {
    if (a == 0) return 0;
    // exponent p^(j*subfield_degree) mod (q-1)
    uint64_t e = 1;
    for (uint64_t i = 0; i < uint64_t(j) * subfield_degree; ++i) e = (e * p_) % (q_ - 1);
    return pow(a, e);
}

uint32_t FiniteField::norm_to_subfield(uint32_t a, unsigned ext_degree) const {
    if (ext_degree == 0 || k_ % ext_degree != 0)
        fail("DomainMismatch", "extension degree " + std::to_string(ext_degree) + " does not divide " + std::to_string(k_));
    unsigned k0 = k_ / ext_degree;
    uint64_t q0 = 1;
    for (unsigned i = 0; i < k0; ++i) q0 *= p_;
    return pow(a, (q_ - 1) / (q0 - 1));
}

bool FiniteField::in_subfield(uint32_t a, unsigned d) const {
    if (d == 0 || k_ % d != 0) fail("DomainMismatch", "subfield degree must divide " + std::to_string(k_));
    return frobenius(a, 1, d) == a;
}

FieldElement FiniteField::element(uint64_t code) const {
    if (code >= q_) fail("DomainMismatch", "element code " + std::to_string(code) + " out of range for GF(" + std::to_string(q_) + ")");
    return FieldElement(*this, uint32_t(code));
}

FieldElement FiniteField::zero() const { return FieldElement(*this, 0); }
FieldElement FiniteField::one() const { return FieldElement(*this, 1); }

FieldElement FiniteField::from_int(int64_t v) const {
    int64_t m = v % int64_t(p_);
    if (m < 0) m += int64_t(p_);
    return FieldElement(*this, uint32_t(m));
}

std::vector<FieldElement> FiniteField::elements() const {
    std::vector<FieldElement> out;
    out.reserve(q_);
    for (uint64_t c = 0; c < q_; ++c) out.emplace_back(*this, uint32_t(c));
    return out;
}

uint64_t FiniteField::element_order(uint32_t a) const {
    if (a == 0) fail("DivisionByZero", "zero has no multiplicative order");
    return (q_ - 1) / std::gcd(q_ - 1, uint64_t(log_[a]));
}

const FiniteField& FieldElement::common(const FieldElement& a, const FieldElement& b) {
    if (!a.field_ || !b.field_ || !a.field_->same_field(*b.field_))
        fail("DomainMismatch", "elements of distinct fields");
    return *a.field_;
}

FieldElement FieldElement::operator+(const FieldElement& rhs) const {
    const FiniteField& F = common(*this, rhs);
    return FieldElement(F, F.add(code_, rhs.code_));
}
FieldElement FieldElement::operator-(const FieldElement& rhs) const {
    const FiniteField& F = common(*this, rhs);
    return FieldElement(F, F.sub(code_, rhs.code_));
}
FieldElement FieldElement::operator*(const FieldElement& rhs) const {
    const FiniteField& F = common(*this, rhs);
    return FieldElement(F, F.mul(code_, rhs.code_));
}
FieldElement FieldElement::operator/(const FieldElement& rhs) const {
    const FiniteField& F = common(*this, rhs);
    return FieldElement(F, F.div(code_, rhs.code_));
}
FieldElement FieldElement::operator-() const { return FieldElement(*field_, field_->neg(code_)); }
FieldElement FieldElement::inverse() const { return FieldElement(*field_, field_->inv(code_)); }
FieldElement FieldElement::pow(uint64_t e) const { return FieldElement(*field_, field_->pow(code_, e)); }

bool FieldElement::operator==(const FieldElement& rhs) const {
    return common(*this, rhs), code_ == rhs.code_;
}

int quadratic_character(const FieldElement& a) { return a.field().quadratic_character(a.code()); }

FieldElement norm(const FieldElement& a, unsigned ext_degree) {
    return FieldElement(a.field(), a.field().norm_to_subfield(a.code(), ext_degree));
}

FieldElement frobenius(const FieldElement& a, unsigned j, unsigned subfield_degree) {
    return FieldElement(a.field(), a.field().frobenius(a.code(), j, subfield_degree));
}

}  // namespace negacirc
