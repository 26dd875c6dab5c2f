#ifndef NEGACIRC_CODEMATRIX_HPP
#define NEGACIRC_CODEMATRIX_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "negacirc/poly.hpp"

namespace negacirc {

/// Dense row-major matrix over a FiniteField, holding canonical codes.
class CodeMatrix {
   public:
    CodeMatrix(const FiniteField& field, size_t rows, size_t cols)
        : field_(&field), rows_(rows), cols_(cols), a_(rows * cols, 0) {}
    CodeMatrix(const FiniteField& field, size_t rows, size_t cols, std::vector<uint32_t> entries);

    const FiniteField& field() const { return *field_; }
    size_t rows() const noexcept { return rows_; }
    size_t cols() const noexcept { return cols_; }
    uint32_t at(size_t i, size_t j) const { return a_[i * cols_ + j]; }
    uint32_t& at(size_t i, size_t j) { return a_[i * cols_ + j]; }
    const std::vector<uint32_t>& entries() const noexcept { return a_; }

    std::vector<uint32_t> row(size_t i) const;

    bool operator==(const CodeMatrix& rhs) const;

   private:
    const FiniteField* field_;
    size_t rows_, cols_;
    std::vector<uint32_t> a_;
};

/// T_alpha: (x_0,...,x_{N-1}) -> (alpha x_{N-1}, x_0,...,x_{N-2}).
/// alpha = -1 is the negashift.
std::vector<uint32_t> constashift(const FiniteField& field, const std::vector<uint32_t>& v, uint32_t alpha);
std::vector<uint32_t> negashift(const FiniteField& field, const std::vector<uint32_t>& v);

/// n x n matrix whose rows are successive negashifts of first_row.
CodeMatrix negacirculant(const FiniteField& field, const std::vector<uint32_t>& first_row);

/// (I | A_1 | ... | A_{t-1}) with A_i the negacirculant of gens[i]'s
/// coefficient vector; n x tn, rank n by construction. Each deg gens[i] < n.
CodeMatrix build_generator(const FiniteField& field, int n, const std::vector<Poly>& gens);

size_t rank(const CodeMatrix& m);

/// Basis of the Euclidean null space, (N-k) x N with G D^T = 0.
/// Requires rank(G) = k.
CodeMatrix dual_basis(const CodeMatrix& g);

/// dim(C intersect C-perp) = k - rank(G G^T). Requires rank(G) = k.
int hull_dimension(const CodeMatrix& g);

bool is_lcd_matrix(const CodeMatrix& g);

/// True iff applying T_alpha^ell to every basis row lands back in the row
/// space. Requires ell | N.
bool is_invariant_under(const CodeMatrix& g, int ell, FieldElement alpha);

/// True iff v lies in the row space of g.
bool in_row_space(const CodeMatrix& g, const std::vector<uint32_t>& v);

struct DistanceResult {
    int distance;
    std::vector<uint32_t> witness;  // lexicographically first minimal-weight message
};

inline constexpr uint64_t kDefaultDistanceCap = 100'000'000;

/// Exhaustive minimum Hamming weight over all q^k - 1 nonzero codewords mG.
/// Messages are scanned projectively (first nonzero coordinate fixed to one),
/// which covers every weight class and yields the lexicographically first
/// minimal-weight witness. Throws TooLargeToEnumerate past the cap.
///
/// abort_if_at_most: stop early once some codeword of weight <= the bound is
/// seen and report that weight; 0 disables (full scan).
DistanceResult min_distance_search(const CodeMatrix& g, uint64_t cap = kDefaultDistanceCap,
                                   int abort_if_at_most = 0);
int min_distance(const CodeMatrix& g, uint64_t cap = kDefaultDistanceCap);

}  // namespace negacirc

#endif
