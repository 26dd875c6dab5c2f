#include "negacirc/codematrix.hpp"

#include <algorithm>

namespace negacirc {

CodeMatrix::CodeMatrix(const FiniteField& field, size_t rows, size_t cols, std::vector<uint32_t> entries)
    : field_(&field), rows_(rows), cols_(cols), a_(std::move(entries)) {
    if (a_.size() != rows * cols) fail("DomainMismatch", "entry count does not match the matrix shape");
}

std::vector<uint32_t> CodeMatrix::row(size_t i) const {
    return std::vector<uint32_t>(a_.begin() + long(i * cols_), a_.begin() + long((i + 1) * cols_));
}

bool CodeMatrix::operator==(const CodeMatrix& rhs) const {
    return field_->same_field(*rhs.field_) && rows_ == rhs.rows_ && cols_ == rhs.cols_ && a_ == rhs.a_;
}

std::vector<uint32_t> constashift(const FiniteField& F, const std::vector<uint32_t>& v, uint32_t alpha) {
    if (v.empty()) return v;
    std::vector<uint32_t> out(v.size());
    out[0] = F.mul(alpha, v.back());
    std::copy(v.begin(), v.end() - 1, out.begin() + 1);
    return out;
}

std::vector<uint32_t> negashift(const FiniteField& F, const std::vector<uint32_t>& v) {
    return constashift(F, v, F.neg(1));
}

CodeMatrix negacirculant(const FiniteField& F, const std::vector<uint32_t>& first_row) {
    size_t n = first_row.size();
    CodeMatrix m(F, n, n);
    std::vector<uint32_t> r = first_row;
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) m.at(i, j) = r[j];
        r = negashift(F, r);
    }
    return m;
}

CodeMatrix build_generator(const FiniteField& F, int n, const std::vector<Poly>& gens) {
    size_t un = size_t(n);
    size_t t = gens.size() + 1;
    CodeMatrix g(F, un, t * un);
    for (size_t i = 0; i < un; ++i) g.at(i, i) = 1;
    for (size_t b = 0; b < gens.size(); ++b) {
        if (gens[b].degree() >= n) fail("DomainMismatch", "generator polynomial degree must be < n");
        std::vector<uint32_t> first(un, 0);
        for (size_t j = 0; j < un; ++j) first[j] = gens[b].coeff(j);
        CodeMatrix blk = negacirculant(F, first);
        for (size_t i = 0; i < un; ++i)
            for (size_t j = 0; j < un; ++j) g.at(i, (b + 1) * un + j) = blk.at(i, j);
    }
    return g;
}

namespace {

// Row echelon form in place; returns pivot columns. Exact arithmetic, no
// pivot-tolerance questions arise.
std::vector<size_t> echelonize(CodeMatrix& m) {
    const FiniteField& F = m.field();
    std::vector<size_t> pivots;
    size_t r = 0;
    for (size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        size_t piv = r;
        while (piv < m.rows() && m.at(piv, c) == 0) ++piv;
        if (piv == m.rows()) continue;
        if (piv != r)
            for (size_t j = 0; j < m.cols(); ++j) std::swap(m.at(r, j), m.at(piv, j));
        uint32_t inv = F.inv(m.at(r, c));
        for (size_t j = c; j < m.cols(); ++j) m.at(r, j) = F.mul(m.at(r, j), inv);
        for (size_t i = 0; i < m.rows(); ++i) {
            if (i == r || m.at(i, c) == 0) continue;
            uint32_t f = m.at(i, c);
            for (size_t j = c; j < m.cols(); ++j)
                m.at(i, j) = F.sub(m.at(i, j), F.mul(f, m.at(r, j)));
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

}  // namespace

size_t rank(const CodeMatrix& m) {
    CodeMatrix work = m;
    return echelonize(work).size();
}

CodeMatrix dual_basis(const CodeMatrix& g) {
    const FiniteField& F = g.field();
    CodeMatrix rref = g;
    auto pivots = echelonize(rref);
    if (pivots.size() != g.rows()) fail("DomainMismatch", "generator matrix is not full rank");
    size_t n = g.cols(), k = g.rows();
    std::vector<bool> is_pivot(n, false);
    for (size_t c : pivots) is_pivot[c] = true;

    CodeMatrix d(F, n - k, n);
    size_t out = 0;
    for (size_t c = 0; c < n; ++c) {
        if (is_pivot[c]) continue;
        d.at(out, c) = 1;
        for (size_t i = 0; i < k; ++i) d.at(out, pivots[i]) = F.neg(rref.at(i, c));
        ++out;
    }
    return d;
}

int hull_dimension(const CodeMatrix& g) {
    const FiniteField& F = g.field();
    size_t k = g.rows();
    CodeMatrix gram(F, k, k);
    for (size_t i = 0; i < k; ++i)
        for (size_t j = 0; j < k; ++j) {
            uint32_t s = 0;
            for (size_t c = 0; c < g.cols(); ++c) s = F.add(s, F.mul(g.at(i, c), g.at(j, c)));
            gram.at(i, j) = s;
        }
    return int(k - rank(gram));
}

bool is_lcd_matrix(const CodeMatrix& g) { return hull_dimension(g) == 0; }

namespace {

// Reduce v against an echelonized matrix; zero residual = membership.
bool reduces_to_zero(const CodeMatrix& rref, const std::vector<size_t>& pivots, std::vector<uint32_t> v) {
    const FiniteField& F = rref.field();
    for (size_t i = 0; i < pivots.size(); ++i) {
        uint32_t c = v[pivots[i]];
        if (c == 0) continue;
        for (size_t j = 0; j < v.size(); ++j) v[j] = F.sub(v[j], F.mul(c, rref.at(i, j)));
    }
    return std::all_of(v.begin(), v.end(), [](uint32_t x) { return x == 0; });
}

}  // namespace

bool in_row_space(const CodeMatrix& g, const std::vector<uint32_t>& v) {
    if (v.size() != g.cols()) fail("DomainMismatch", "vector length does not match the code length");
    CodeMatrix rref = g;
    auto pivots = echelonize(rref);
    return reduces_to_zero(rref, pivots, v);
}

bool is_invariant_under(const CodeMatrix& g, int ell, FieldElement alpha) {
    if (ell <= 0 || g.cols() % size_t(ell) != 0) fail("DomainMismatch", "shift power must divide the length");
    CodeMatrix rref = g;
    auto pivots = echelonize(rref);
    for (size_t i = 0; i < g.rows(); ++i) {
        std::vector<uint32_t> v = g.row(i);
        for (int s = 0; s < ell; ++s) v = constashift(g.field(), v, alpha.code());
        if (!reduces_to_zero(rref, pivots, v)) return false;
    }
    return true;
}

DistanceResult min_distance_search(const CodeMatrix& g, uint64_t cap, int abort_if_at_most) {
    const FiniteField& F = g.field();
    size_t k = g.rows(), ncols = g.cols();
    uint64_t q = F.order();

    uint64_t messages = 1;
    for (size_t i = 0; i < k; ++i) {
        if (messages > cap / q) fail("TooLargeToEnumerate", "message space exceeds the enumeration cap");
        messages *= q;
    }

    int best = int(ncols) + 1;
    std::vector<uint32_t> best_witness;

    auto weight_of = [&](const std::vector<uint32_t>& w) {
        int wt = 0;
        for (uint32_t v : w) wt += (v != 0);
        return wt;
    };

    // Scan messages with their first nonzero coordinate fixed to one, in
    // ascending lexicographic order (first-support position descending, then
    // odometer order on the free suffix). A strict improvement is then
    // automatically the lexicographically first witness of its weight.
    std::vector<uint32_t> msg(k, 0);
    for (size_t j0 = k; j0-- > 0;) {
        size_t free_lo = j0 + 1;
        // partial[i] = codeword of the message coordinates in [j0, i)
        std::vector<std::vector<uint32_t>> partial(k + 1, g.row(j0));

        std::fill(msg.begin(), msg.end(), 0);
        msg[j0] = 1;

        for (;;) {
            const auto& cw = partial[k];
            int wt = weight_of(cw);
            if (wt < best) {
                best = wt;
                best_witness = msg;
                if (abort_if_at_most > 0 && best <= abort_if_at_most)
                    return {best, best_witness};
            }
            // odometer over coordinates [free_lo, k)
            size_t pos = k;
            while (pos-- > free_lo) {
                if (msg[pos] + 1 < q) break;
                msg[pos] = 0;
            }
            if (pos < free_lo || pos >= k) break;
            ++msg[pos];
            // one more copy of row[pos] on top of the prefix through pos
            auto& level = partial[pos + 1];
            const uint32_t* row = &g.entries()[pos * ncols];
            for (size_t c = 0; c < ncols; ++c)
                if (row[c]) level[c] = F.add(level[c], row[c]);
            for (size_t i = pos + 2; i <= k; ++i) partial[i] = partial[i - 1];
        }
    }
    return {best, best_witness};
}

int min_distance(const CodeMatrix& g, uint64_t cap) { return min_distance_search(g, cap).distance; }

}  // namespace negacirc
