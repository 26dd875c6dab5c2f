#include "negacirc/search.hpp"

#include <algorithm>
#include <map>

namespace negacirc {

namespace {
constexpr uint64_t kGamma = 0x9E3779B97F4A7C15ull;
}

uint64_t splitmix_mix(uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

uint64_t splitmix_draw(uint64_t seed, uint64_t trial, uint64_t idx) {
    uint64_t state = splitmix_mix(seed + (trial + 1) * kGamma);
    return splitmix_mix(state + (idx + 1) * kGamma);
}

namespace {

// Unbiased code in [0, q): draws below 2^64 mod q are rejected.
uint32_t draw_code(uint64_t seed, uint64_t trial, uint64_t& idx, uint64_t q) {
    uint64_t reject_below = (0 - q) % q;  // 2^64 mod q
    for (;;) {
        uint64_t x = splitmix_draw(seed, trial, idx++);
        if (x >= reject_below) return uint32_t(x % q);
    }
}

SearchRecord evaluate(const FiniteField& F, int n, int t, uint64_t seed, uint64_t trial,
                      std::vector<Poly> gens, const Factorization& fac, uint64_t distance_cap) {
    SearchRecord rec;
    rec.q_label = F.label();
    rec.n = n;
    rec.t = t;
    rec.seed = seed;
    rec.trial = trial;
    rec.generators = std::move(gens);

    MultiNegaCode code(F, n, rec.generators);
    rec.lcd = (t == 2) ? lcd_gcd_test(rec.generators[0], n) : constituent_lcd(code, fac);
    if (rec.lcd) rec.distance = min_distance(code.generator_matrix(), distance_cap);
    return rec;
}

SearchResult collect(std::vector<SearchRecord> lcd_records) {
    if (lcd_records.empty()) fail("NoLCDFound", "no LCD code found within the trial budget");
    size_t best = 0;
    for (size_t i = 1; i < lcd_records.size(); ++i)
        if (lcd_records[i].distance > lcd_records[best].distance) best = i;
    return {lcd_records[best], std::move(lcd_records)};
}

}  // namespace

std::vector<Poly> trial_generators(const FiniteField& F, int n, int t, uint64_t seed, uint64_t trial) {
    uint64_t idx = 0;
    std::vector<Poly> gens;
    gens.reserve(size_t(t - 1));
    for (int b = 0; b < t - 1; ++b) {
        std::vector<uint32_t> c(size_t(n), 0u);
        for (int i = 0; i < n; ++i) c[size_t(i)] = draw_code(seed, trial, idx, F.order());
        gens.emplace_back(F, std::move(c));
    }
    return gens;
}

SearchResult random_search(const FiniteField& F, int n, int t, uint64_t trials, uint64_t seed,
                           uint64_t distance_cap) {
    if (t < 2) fail("DomainMismatch", "index t must be >= 2");
    Factorization fac = factor_negacyclic(F, n);
    std::vector<SearchRecord> lcd_records;
    for (uint64_t trial = 0; trial < trials; ++trial) {
        SearchRecord rec = evaluate(F, n, t, seed, trial, trial_generators(F, n, t, seed, trial), fac,
                                    distance_cap);
        if (rec.lcd) lcd_records.push_back(std::move(rec));
    }
    return collect(std::move(lcd_records));
}

SearchResult exhaustive_search(const FiniteField& F, int n, int t, uint64_t distance_cap,
                               uint64_t space_cap) {
    if (t < 2) fail("DomainMismatch", "index t must be >= 2");
    uint64_t q = F.order();
    size_t coeffs = size_t(n) * size_t(t - 1);
    uint64_t space = 1;
    for (size_t i = 0; i < coeffs; ++i) {
        if (space > space_cap / q) fail("TooLargeToEnumerate", "generator space exceeds the cap");
        space *= q;
    }

    Factorization fac = factor_negacyclic(F, n);
    std::vector<SearchRecord> lcd_records;
    std::vector<uint32_t> digits(coeffs, 0);
    for (uint64_t trial = 0;; ++trial) {
        std::vector<Poly> gens;
        gens.reserve(size_t(t - 1));
        for (int b = 0; b < t - 1; ++b) {
            std::vector<uint32_t> c(digits.begin() + b * n, digits.begin() + (b + 1) * n);
            gens.emplace_back(F, std::move(c));
        }
        SearchRecord rec = evaluate(F, n, t, 0, trial, std::move(gens), fac, distance_cap);
        if (rec.lcd) lcd_records.push_back(std::move(rec));

        size_t pos = 0;
        while (pos < coeffs && digits[pos] + 1 == q) digits[pos++] = 0;
        if (pos == coeffs) break;
        ++digits[pos];
    }
    return collect(std::move(lcd_records));
}

std::vector<TableRow> distance_table(const FiniteField& F, int n_max, uint64_t trials, uint64_t seed,
                                     uint64_t distance_cap) {
    // published best distances for q = 5 double negacirculant LCD codes at
    // desk-scale coindices
    static const std::map<int, int> kReference{{3, 4}, {4, 4}, {6, 6}, {7, 6}, {8, 7}};
    constexpr int kMaxExhaustibleN = 8;

    std::vector<TableRow> rows;
    for (int n = 2; n <= n_max; ++n) {
        TableRow row;
        row.n = n;
        if (F.order() == 5) {
            auto it = kReference.find(n);
            if (it != kReference.end()) row.reference_distance = it->second;
        }
        if (uint64_t(n) % F.characteristic() == 0) {
            row.skipped = true;
        } else if (n > kMaxExhaustibleN) {
            row.out_of_scope = true;
        } else {
            SearchResult res = random_search(F, n, 2, trials, seed, distance_cap);
            row.best_distance = res.best.distance;
            row.best_trial = res.best.trial;
        }
        rows.push_back(row);
    }
    return rows;
}

}  // namespace negacirc
