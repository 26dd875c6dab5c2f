// Command-line front end: every subcommand maps onto one library operation
// and prints JSON on standard output. Exit codes: 0 success, 1 usage error,
// 2 domain error (the error name is part of the JSON payload).

#include <chrono>
#include <ctime>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "negacirc/json_io.hpp"

using namespace negacirc;

namespace {

// Resolve a prime-power order given as "9", "25" or "3^2".
std::pair<uint64_t, unsigned> parse_order(const std::string& text) {
    auto caret = text.find('^');
    if (caret != std::string::npos) {
        uint64_t p = std::stoull(text.substr(0, caret));
        unsigned k = unsigned(std::stoul(text.substr(caret + 1)));
        return {p, k};
    }
    uint64_t q = std::stoull(text);
    if (q < 2) fail("NotPrime", "field order must be at least 3");
    uint64_t p = q;
    for (uint64_t d = 2; d * d <= q; ++d) {
        if (q % d == 0) {
            p = d;
            break;
        }
    }
    unsigned k = 0;
    uint64_t acc = 1;
    while (acc < q) {
        acc *= p;
        ++k;
    }
    if (acc != q) fail("NotPrime", text + " is not a prime power");
    return {p, k};
}

std::string iso_timestamp() {
    auto now = std::chrono::system_clock::now();
    std::time_t tt = std::chrono::system_clock::to_time_t(now);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&tt));
    return buf;
}

void emit(const json& j) { std::cout << j.dump() << "\n"; }

struct CommonOpts {
    std::string q = "5";
    int n = 2;
    int t = 2;
    std::vector<std::string> gens;
    std::string mode = "full";
    uint64_t trials = 1000;
    uint64_t seed = 1;
    std::string out;
    uint64_t cap = 0;  // 0 = module default
    bool no_timestamp = false;
};

std::vector<Poly> parse_gens(const FiniteField& F, const CommonOpts& o) {
    if (int(o.gens.size()) != o.t - 1)
        fail("DomainMismatch", "expected " + std::to_string(o.t - 1) + " generator polynomial(s)");
    std::vector<Poly> gens;
    for (const auto& g : o.gens) gens.push_back(Poly::parse(F, g));
    return gens;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"LCD multinegacirculant code toolkit"};
    app.require_subcommand(1);

    CommonOpts o;

    auto add_common = [&](CLI::App* cmd, bool with_n = true, bool with_t = false, bool with_gen = false) {
        cmd->add_option("--q", o.q, "field order, e.g. 5 or 3^2");
        if (with_n) cmd->add_option("--n", o.n, "coindex");
        if (with_t) cmd->add_option("--t", o.t, "index (>= 2)");
        if (with_gen) cmd->add_option("--gen", o.gens, "generator polynomial, ascending comma list (repeat for t > 2)");
        cmd->add_option("--cap", o.cap, "enumeration cap override");
        return cmd;
    };

    auto* c_field = app.add_subcommand("field", "construct GF(p^k) and print its modulus");
    add_common(c_field, false);

    auto* c_factor = app.add_subcommand("factor", "factor x^n + 1 into the self-reciprocal/pair inventory");
    add_common(c_factor);

    auto* c_dickson = app.add_subcommand("dickson", "Dickson polynomial of the first kind");
    unsigned dickson_m = 0;
    std::string dickson_alpha = "1";
    add_common(c_dickson, false);
    c_dickson->add_option("--m", dickson_m, "Dickson index");
    c_dickson->add_option("--alpha", dickson_alpha, "parameter (element code)");

    auto* c_lcd = app.add_subcommand("lcd", "test a multinegacirculant code for complementary duality");
    add_common(c_lcd, true, true, true);

    auto* c_constituents = app.add_subcommand("constituents", "CRT constituents with per-factor verdicts");
    add_common(c_constituents, true, true, true);

    auto* c_census = app.add_subcommand("census", "count LCD codes: closed formulas against the exhaustive oracle");
    add_common(c_census, true, true);
    c_census->add_option("--mode", o.mode, "full | restricted | both");

    auto* c_diag = app.add_subcommand("diag", "diagonal-equation solution counts, formula vs oracle");
    std::string diag_family = "app7";
    int diag_nvars = 2;
    std::string diag_b = "0";
    std::string diag_coeffs;
    add_common(c_diag, false, true);
    c_diag->add_option("--family", diag_family, "app2 | app5 | app7 | quadform");
    c_diag->add_option("--nvars", diag_nvars, "quadform: number of variables (even)");
    c_diag->add_option("--b", diag_b, "quadform: target value (element code)");
    c_diag->add_option("--coeffs", diag_coeffs, "quadform: diagonal coefficients, comma list");

    auto* c_distance = app.add_subcommand("distance", "exhaustive minimum distance of a code");
    add_common(c_distance, true, true, true);

    auto* c_search = app.add_subcommand("search", "seeded random search for high-distance LCD codes");
    bool exhaustive = false;
    add_common(c_search, true, true);
    c_search->add_option("--trials", o.trials, "trial budget");
    c_search->add_option("--seed", o.seed, "master seed");
    c_search->add_option("--out", o.out, "append one JSON record per LCD trial to this file");
    c_search->add_flag("--exhaustive", exhaustive, "enumerate the full generator space instead of sampling");
    c_search->add_flag("--no-timestamp", o.no_timestamp, "omit timestamps for byte-stable output");

    auto* c_table = app.add_subcommand("table", "best found distances per coindex, with published references");
    add_common(c_table, true, false);
    c_table->add_option("--trials", o.trials, "trial budget per row");
    c_table->add_option("--seed", o.seed, "master seed");

    auto* c_bound = app.add_subcommand("bound", "relative-distance level of the modified Varshamov-Gilbert bound");
    add_common(c_bound, false, true);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        auto [p, k] = parse_order(o.q);
        FiniteField F(p, k);

        if (*c_field) {
            emit(field_json(F));
        } else if (*c_factor) {
            emit(factorization_json(factor_negacyclic(F, o.n)));
        } else if (*c_dickson) {
            emit(poly_json(dickson(dickson_m, F.element(std::stoull(dickson_alpha)))));
        } else if (*c_lcd) {
            auto gens = parse_gens(F, o);
            bool flag;
            if (o.t == 2) {
                flag = lcd_gcd_test(gens[0], o.n);
            } else {
                MultiNegaCode code(F, o.n, gens);
                flag = constituent_lcd(code, factor_negacyclic(F, o.n));
            }
            emit(json{{"lcd", flag}});
        } else if (*c_constituents) {
            MultiNegaCode code(F, o.n, parse_gens(F, o));
            emit(constituents_json(code, factor_negacyclic(F, o.n)));
        } else if (*c_census) {
            uint64_t cap = o.cap ? o.cap : kDefaultOracleCap;
            if (o.mode == "both") {
                emit(json{{"restricted", census_json(census_report(F, o.n, o.t, CensusMode::Restricted, cap))},
                          {"full", census_json(census_report(F, o.n, o.t, CensusMode::Full, cap))}});
            } else if (o.mode == "restricted") {
                emit(census_json(census_report(F, o.n, o.t, CensusMode::Restricted, cap)));
            } else {
                emit(census_json(census_report(F, o.n, o.t, CensusMode::Full, cap)));
            }
        } else if (*c_diag) {
            uint64_t cap = o.cap ? o.cap : kDefaultOracleCap;
            if (diag_family == "app7") {
                emit(diagonal_json(count_app7(F)));
            } else if (diag_family == "app2") {
                emit(diagonal_json(count_app2(F)));
            } else if (diag_family == "app5") {
                emit(diagonal_json(count_app5(F, o.t, cap)));
            } else if (diag_family == "quadform") {
                std::vector<FieldElement> coeffs;
                std::stringstream ss(diag_coeffs);
                std::string item;
                while (std::getline(ss, item, ',')) coeffs.push_back(F.element(std::stoull(item)));
                emit(diagonal_json(quadratic_form_count(F, diag_nvars, F.element(std::stoull(diag_b)), coeffs, cap)));
            } else {
                fail("UnsupportedForm", "unknown diagonal family " + diag_family);
            }
        } else if (*c_distance) {
            MultiNegaCode code(F, o.n, parse_gens(F, o));
            uint64_t cap = o.cap ? o.cap : kDefaultDistanceCap;
            auto res = min_distance_search(code.generator_matrix(), cap);
            json out = code_json(code);
            out["distance"] = res.distance;
            out["witness"] = res.witness;
            emit(out);
        } else if (*c_search) {
            uint64_t cap = o.cap ? o.cap : kDefaultDistanceCap;
            SearchResult res = exhaustive ? exhaustive_search(F, o.n, o.t, cap)
                                          : random_search(F, o.n, o.t, o.trials, o.seed, cap);
            std::string stamp = o.no_timestamp ? "" : iso_timestamp();
            if (!o.out.empty()) {
                std::ofstream stream(o.out, std::ios::app);
                if (!stream) fail("DomainError", "cannot open " + o.out);
                for (auto& rec : res.records) {
                    rec.timestamp = stamp;
                    stream << search_record_json(rec, !o.no_timestamp).dump() << "\n";
                }
            }
            res.best.timestamp = stamp;
            emit(search_record_json(res.best, !o.no_timestamp));
        } else if (*c_table) {
            uint64_t cap = o.cap ? o.cap : kDefaultDistanceCap;
            auto rows = distance_table(F, o.n, o.trials, o.seed, cap);
            emit(json{{"q", F.label()}, {"trials", o.trials}, {"seed", o.seed}, {"rows", table_rows_json(rows)}});
        } else if (*c_bound) {
            emit(bound_json(gv_relative_distance(unsigned(F.order()), o.t)));
        }
    } catch (const DomainError& e) {
        emit(json{{"error", e.name()}, {"detail", e.what()}});
        return 2;
    } catch (const std::exception& e) {
        emit(json{{"error", "InternalError"}, {"detail", e.what()}});
        return 2;
    }
    return 0;
}
