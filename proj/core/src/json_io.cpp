#include "negacirc/json_io.hpp"

namespace negacirc {

json field_json(const FiniteField& field) {
    std::string mod;
    for (size_t i = 0; i < field.modulus().size(); ++i) {
        if (i) mod += ',';
        mod += std::to_string(field.modulus()[i]);
    }
    return json{{"q", field.label()}, {"modulus", mod}};
}

json poly_json(const Poly& p) { return json(p.coeffs()); }

json matrix_json(const CodeMatrix& m) {
    return json{{"q", m.field().label()},
                {"rows", m.rows()},
                {"cols", m.cols()},
                {"entries", m.entries()}};
}

json factorization_json(const Factorization& fac) {
    json self = json::array();
    for (const auto& s : fac.self_reciprocal) self.push_back(poly_json(s.g));
    json pairs = json::array();
    for (const auto& p : fac.pairs) pairs.push_back(json::array({poly_json(p.h), poly_json(p.h_star)}));
    return json{{"unit", fac.unit}, {"self_reciprocal", self}, {"pairs", pairs}};
}

json code_json(const MultiNegaCode& code) {
    json gens = json::array();
    for (const auto& g : code.generators()) gens.push_back(poly_json(g));
    return json{{"q", code.field().label()},
                {"n", code.coindex()},
                {"t", code.index()},
                {"generators", gens}};
}

json constituents_json(const MultiNegaCode& code, const Factorization& fac) {
    auto cs = constituents(code, fac);
    json arr = json::array();
    bool all_ok = true;
    for (const auto& c : cs) {
        json span = json::array();
        span.push_back(json::array({1}));  // the implicit leading coordinate
        for (const auto& s : c.span) span.push_back(poly_json(s));
        json entry{{"factor", poly_json(c.factor)},
                   {"kind", c.kind == ConstituentKind::Hermitian ? "hermitian" : "pair_half"},
                   {"span", span},
                   {"pass", c.lcd_ok}};
        if (c.kind == ConstituentKind::PairHalf) entry["partner"] = c.partner;
        arr.push_back(std::move(entry));
        all_ok = all_ok && c.lcd_ok;
    }
    json out = code_json(code);
    out["constituents"] = arr;
    out["lcd"] = all_ok;
    return out;
}

namespace {

json opt_int(const std::optional<int64_t>& v) { return v ? json(*v) : json(nullptr); }

}  // namespace

json census_json(const CensusReport& r) {
    return json{{"params", json{{"q", r.q_label}, {"n", r.n}, {"t", r.t}, {"mode", r.mode}}},
                {"formula_printed", opt_int(r.formula_printed)},
                {"formula_corrected", opt_int(r.formula_corrected)},
                {"oracle", r.oracle},
                {"agree", r.agree},
                {"notes", r.notes}};
}

json diagonal_json(const DiagonalCount& d) {
    json params{{"q", d.q_label}};
    for (const auto& [k, v] : d.params) params[k] = v;
    return json{{"family", d.family},
                {"params", params},
                {"formula_printed", d.formula_printed},
                {"formula_corrected", d.formula_corrected},
                {"oracle", d.oracle},
                {"agree", d.agree},
                {"notes", d.notes}};
}

json bound_json(const BoundReport& r) {
    return json{{"q", r.q}, {"t", r.t}, {"rate", r.rate}, {"level", r.level},
                {"delta", r.delta}, {"tol", r.tol}};
}

json search_record_json(const SearchRecord& r, bool with_timestamp) {
    json gens = json::array();
    for (const auto& g : r.generators) gens.push_back(poly_json(g));
    json out{{"q", r.q_label}, {"n", r.n}, {"t", r.t},
             {"seed", r.seed}, {"trial", r.trial},
             {"generators", gens}, {"lcd", r.lcd}, {"distance", r.distance}};
    if (with_timestamp && !r.timestamp.empty()) out["timestamp"] = r.timestamp;
    return out;
}

json table_rows_json(const std::vector<TableRow>& rows) {
    json arr = json::array();
    for (const auto& row : rows) {
        json entry{{"n", row.n}};
        if (row.skipped) {
            entry["skipped"] = "coindex shares a factor with q";
        } else if (row.out_of_scope) {
            entry["out_of_scope"] = "exhaustive distance computation infeasible past n = 8";
        } else {
            entry["best_distance"] = row.best_distance;
            entry["best_trial"] = row.best_trial;
        }
        if (row.reference_distance) entry["reference_distance"] = *row.reference_distance;
        arr.push_back(std::move(entry));
    }
    return arr;
}

}  // namespace negacirc
