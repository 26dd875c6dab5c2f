#ifndef NEGACIRC_JSON_IO_HPP
#define NEGACIRC_JSON_IO_HPP

#include <json.hpp>

#include "negacirc/asymptotic.hpp"
#include "negacirc/census.hpp"
#include "negacirc/search.hpp"

namespace negacirc {

// Wire formats. ordered_json keeps insertion order so identical invocations
// serialize byte-identically.
using json = nlohmann::ordered_json;

json field_json(const FiniteField& field);
json poly_json(const Poly& p);  // coefficient codes ascending
json matrix_json(const CodeMatrix& m);
json factorization_json(const Factorization& fac);
json code_json(const MultiNegaCode& code);
json constituents_json(const MultiNegaCode& code, const Factorization& fac);
json census_json(const CensusReport& r);
json diagonal_json(const DiagonalCount& d);
json bound_json(const BoundReport& r);
json search_record_json(const SearchRecord& r, bool with_timestamp = true);
json table_rows_json(const std::vector<TableRow>& rows);

}  // namespace negacirc

#endif
