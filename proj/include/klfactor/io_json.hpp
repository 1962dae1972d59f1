#ifndef KLFACTOR_IO_JSON_HPP
#define KLFACTOR_IO_JSON_HPP

#include <json.hpp>

#include "klfactor/factorization.hpp"
#include "klfactor/heap.hpp"
#include "klfactor/patterns.hpp"

namespace klfactor {

using Json = nlohmann::ordered_json;

// {"n": 4, "blocks": [[2],[1,3],[2]]}
Json factorization_to_json(const Factorization& j);
Factorization factorization_from_json(const Json& js);

// {"leading": "3 4 1 2", "polys": {"1 2 3 4": "1 + q", ...}}, polynomials in q.
Json defect_family_to_json(const DefectFamily& fam);

// [{"perm": "3 4 1 2", "coeff": "v^-4 + v^-2"}, ...] sorted by length then window.
Json hecke_to_json(const HeckeElt& h);

// [{"i": 2, "j": 3, "level": 1, "steps": {"+u1": idx, ...}}, ...];
// absent steps omitted.
Json heap_to_json(const Heap& h);

Json directedness_to_json(const Permutation& w);
Json intervals_to_json(const std::vector<DescentInterval>& ivs);

// Polynomial rendering for reports: q when all v-exponents are even,
// otherwise v.
std::string poly_report_string(const LaurentPoly& p);

}  // namespace klfactor

#endif
