#include "negacirc/poly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace negacirc {

Poly::Poly(const FiniteField& field, std::vector<uint32_t> coeffs) : field_(&field), c_(std::move(coeffs)) {
    normalize();
}

void Poly::normalize() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Poly Poly::x(const FiniteField& field) { return Poly(field, {0, 1}); }

Poly Poly::constant(const FiniteField& field, uint32_t code) { return Poly(field, {code}); }

Poly Poly::monomial(const FiniteField& field, uint32_t coeff, size_t deg) {
    std::vector<uint32_t> c(deg + 1, 0);
    c[deg] = coeff;
    return Poly(field, std::move(c));
}

Poly Poly::parse(const FiniteField& field, const std::string& text) {
    std::vector<uint32_t> c;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        long long v = std::stoll(item);
        if (v < 0 || uint64_t(v) >= field.order())
            fail("DomainMismatch", "coefficient code " + item + " out of range for GF(" + std::to_string(field.order()) + ")");
        c.push_back(uint32_t(v));
    }
    return Poly(field, std::move(c));
}

Poly Poly::operator+(const Poly& rhs) const {
    std::vector<uint32_t> c(std::max(c_.size(), rhs.c_.size()), 0);
    for (size_t i = 0; i < c.size(); ++i) c[i] = field_->add(coeff(i), rhs.coeff(i));
    return Poly(*field_, std::move(c));
}

Poly Poly::operator-(const Poly& rhs) const {
    std::vector<uint32_t> c(std::max(c_.size(), rhs.c_.size()), 0);
    for (size_t i = 0; i < c.size(); ++i) c[i] = field_->sub(coeff(i), rhs.coeff(i));
    return Poly(*field_, std::move(c));
}

Poly Poly::operator*(const Poly& rhs) const {
    if (is_zero() || rhs.is_zero()) return Poly(*field_);
    std::vector<uint32_t> c(c_.size() + rhs.c_.size() - 1, 0);
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (size_t j = 0; j < rhs.c_.size(); ++j)
            c[i + j] = field_->add(c[i + j], field_->mul(c_[i], rhs.c_[j]));
    }
    return Poly(*field_, std::move(c));
}

Poly Poly::operator*(FieldElement s) const {
    std::vector<uint32_t> c(c_);
    for (auto& v : c) v = field_->mul(v, s.code());
    return Poly(*field_, std::move(c));
}

Poly Poly::operator-() const {
    std::vector<uint32_t> c(c_);
    for (auto& v : c) v = field_->neg(v);
    return Poly(*field_, std::move(c));
}

std::pair<Poly, Poly> Poly::divmod(const Poly& g) const {
    if (g.is_zero()) fail("DivisionByZero", "polynomial division by zero");
    Poly r = *this;
    int dg = g.degree();
    if (r.degree() < dg) return {Poly(*field_), r};
    std::vector<uint32_t> q(size_t(r.degree() - dg + 1), 0);
    uint32_t lg_inv = field_->inv(g.leading());
    for (int i = r.degree(); i >= dg; --i) {
        uint32_t lead = r.coeff(size_t(i));
        if (lead == 0) continue;
        uint32_t scale = field_->mul(lead, lg_inv);
        q[size_t(i - dg)] = scale;
        for (int j = 0; j <= dg; ++j) {
            size_t pos = size_t(i - dg + j);
            r.c_[pos] = field_->sub(r.c_[pos], field_->mul(scale, g.coeff(size_t(j))));
        }
    }
    r.normalize();
    return {Poly(*field_, std::move(q)), r};
}

Poly Poly::monic() const {
    if (is_zero() || is_monic()) return *this;
    return *this * FieldElement(*field_, field_->inv(leading()));
}

FieldElement Poly::eval(FieldElement at) const {
    uint32_t acc = 0;
    for (size_t i = c_.size(); i-- > 0;) acc = field_->add(field_->mul(acc, at.code()), c_[i]);
    return FieldElement(*field_, acc);
}

bool Poly::operator==(const Poly& rhs) const {
    return field_->same_field(*rhs.field_) && c_ == rhs.c_;
}

std::string Poly::to_string() const {
    std::string out;
    for (size_t i = 0; i < c_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(c_[i]);
    }
    return out;
}

Poly gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

Poly reciprocal(const Poly& f) {
    if (f.is_zero() || f.coeff(0) == 0) fail("NotReciprocable", "polynomial has a zero constant term");
    std::vector<uint32_t> c(f.coeffs().rbegin(), f.coeffs().rend());
    return Poly(f.field(), std::move(c)).monic();
}

bool canonical_less(const Poly& a, const Poly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return a.coeffs() < b.coeffs();
}

NegacyclicRing::NegacyclicRing(const FiniteField& field, int n)
    : NegacyclicRing(field, n, field.from_int(-1)) {}

NegacyclicRing::NegacyclicRing(const FiniteField& field, int n, FieldElement alpha)
    : field_(&field), n_(n), alpha_(alpha.code()) {
    if (n < 1) fail("DomainMismatch", "coindex must be >= 1");
    if (uint64_t(n) % field.characteristic() == 0)
        fail("NotCoprime", "coindex " + std::to_string(n) + " shares the characteristic " + std::to_string(field.characteristic()));
    if (alpha_ == 0) fail("DomainMismatch", "shift constant must be a unit");
}

Poly NegacyclicRing::modulus() const {
    std::vector<uint32_t> c(size_t(n_) + 1, 0);
    c[0] = field_->neg(alpha_);
    c[size_t(n_)] = 1;
    return Poly(*field_, std::move(c));
}

Poly NegacyclicRing::reduce(const Poly& f) const {
    if (f.degree() < n_) return f;
    std::vector<uint32_t> c(size_t(n_), 0);
    for (size_t i = 0; i <= size_t(f.degree()); ++i) {
        uint32_t v = f.coeff(i);
        if (v == 0) continue;
        size_t wraps = i / size_t(n_);
        uint32_t scaled = v;
        for (size_t w = 0; w < wraps; ++w) scaled = field_->mul(scaled, alpha_);
        size_t pos = i % size_t(n_);
        c[pos] = field_->add(c[pos], scaled);
    }
    return Poly(*field_, std::move(c));
}

Poly star_image(const Poly& a, int n) {
    const FiniteField& F = a.field();
    NegacyclicRing ring(F, n);
    Poly reduced = ring.reduce(a);
    // substitute x -> -x^(n-1): term a_i x^i maps to a_i (-1)^i x^(i(n-1)),
    // folded through x^n = -1.
    std::vector<uint32_t> c(size_t(n), 0);
    for (size_t i = 0; i <= size_t(std::max(reduced.degree(), 0)); ++i) {
        uint32_t v = reduced.coeff(i);
        if (v == 0) continue;
        size_t e = i * size_t(n - 1);
        uint32_t sign_flips = uint32_t(i + e / size_t(n));  // (-1)^i and folding signs
        uint32_t val = (sign_flips % 2 == 0) ? v : F.neg(v);
        size_t pos = e % size_t(n);
        c[pos] = F.add(c[pos], val);
    }
    return Poly(F, std::move(c));
}

}  // namespace negacirc
