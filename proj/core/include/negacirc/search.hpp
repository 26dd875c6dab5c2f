#ifndef NEGACIRC_SEARCH_HPP
#define NEGACIRC_SEARCH_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "negacirc/negacode.hpp"

namespace negacirc {

/// SplitMix64 finalizer: the bijective 64-bit mixer
///   z ^= z >> 30; z *= 0xBF58476D1CE4E5B9;
///   z ^= z >> 27; z *= 0x94D049BB133111EB;
///   z ^= z >> 31.
uint64_t splitmix_mix(uint64_t z);

/// Counter-based draw: value index `idx` of trial `trial` under `seed`,
///   draw = M(M(seed + (trial+1) * GAMMA) + (idx+1) * GAMMA),
/// with M the mixer above and GAMMA = 0x9E3779B97F4A7C15. Trials are
/// independent of each other and of the total budget by construction.
uint64_t splitmix_draw(uint64_t seed, uint64_t trial, uint64_t idx);

/// One evaluated candidate from a seeded search run. Reproducible: the same
/// (q, n, t, seed, trial) always regenerates the same generators, flag and
/// distance.
struct SearchRecord {
    std::string q_label;
    int n = 0;
    int t = 0;
    uint64_t seed = 0;
    uint64_t trial = 0;
    std::vector<Poly> generators;
    bool lcd = false;
    int distance = 0;
    std::string timestamp;  // filled by the CLI layer; empty inside the library
};

struct SearchResult {
    SearchRecord best;                  // maximum distance, ties to the lowest trial index
    std::vector<SearchRecord> records;  // every LCD-passing trial, in trial order
};

/// Draw `trials` generator tuples (uniform coefficients via rejection
/// sampling of splitmix draws), keep those passing the LCD test (gcd test at
/// t = 2, constituent test otherwise), compute the exact minimum distance of
/// each, and return the best. Throws NoLCDFound when no trial passes.
SearchResult random_search(const FiniteField& field, int n, int t, uint64_t trials, uint64_t seed,
                           uint64_t distance_cap = kDefaultDistanceCap);

/// Same accounting over the full generator space instead of random draws;
/// the trial index is the enumeration index.
SearchResult exhaustive_search(const FiniteField& field, int n, int t,
                               uint64_t distance_cap = kDefaultDistanceCap,
                               uint64_t space_cap = 10'000'000);

/// Regenerate the generators trial `trial` would draw. Exposed so that
/// record streams can be replayed.
std::vector<Poly> trial_generators(const FiniteField& field, int n, int t, uint64_t seed, uint64_t trial);

struct TableRow {
    int n;
    bool skipped = false;            // gcd(n, q) != 1
    bool out_of_scope = false;       // distance exhaustion infeasible at desk scale
    int best_distance = 0;
    uint64_t best_trial = 0;
    std::optional<int> reference_distance;  // published best where known (q = 5)
};

/// One row per coindex in [2, n_max]: seeded search results annotated with
/// the published q = 5 reference distances for n in {3,4,6,7,8}. Rows with
/// n > 8 are marked out of scope.
std::vector<TableRow> distance_table(const FiniteField& field, int n_max, uint64_t trials, uint64_t seed,
                                     uint64_t distance_cap = kDefaultDistanceCap);

}  // namespace negacirc

#endif
