#ifndef NEGACIRC_ASYMPTOTIC_HPP
#define NEGACIRC_ASYMPTOTIC_HPP

#include <cstdint>
#include <vector>

#include "negacirc/galois.hpp"

namespace negacirc {

/// q-ary entropy H_q(y) = y log_q(q-1) - y log_q y - (1-y) log_q(1-y) on
/// [0, (q-1)/q], with H_q(0) = 0 and H_q((q-1)/q) = 1. Strictly increasing
/// on the interior. Throws DomainError outside the domain.
double entropy(unsigned q, double y);

struct BoundReport {
    unsigned q;
    int t;
    double rate;   // 1/t
    double level;  // (t-1)/(2t)
    double delta;  // root of H_q(delta) = level
    double tol;    // |H_q(delta) - level| achieved
};

/// Unique delta in (0, (q-1)/q) with H_q(delta) = (t-1)/(2t), by bisection to
/// absolute tolerance 1e-9 (at most 64 iterations).
BoundReport gv_relative_distance(unsigned q, int t, double tolerance = 1e-9);

/// Covering bound q^((t-1)n/2) - 1 on the number of generator tuples whose
/// LCD code contains a fixed low-weight vector. Requires n even.
int64_t cover_bound(unsigned q, int n, int t);

/// Exhaustive count of generator tuples (a_1,...,a_{t-1}) whose code is LCD
/// and contains u. Requires the two-irreducible-factor hypothesis on (q, n).
int64_t cover_oracle(const FiniteField& field, int n, int t, const std::vector<uint32_t>& u,
                     uint64_t cap = 10'000'000);

/// Number of length-len vectors over F_q of Hamming weight <= radius.
int64_t hamming_ball_volume(unsigned q, int len, int radius);

}  // namespace negacirc

#endif
