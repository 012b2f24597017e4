#ifndef CORFUN_JSON_IO_HPP
#define CORFUN_JSON_IO_HPP

#include <string>

#include <json.hpp>

#include "corfun/lattice.hpp"
#include "corfun/poset.hpp"
#include "corfun/relation.hpp"

namespace corfun {

// Poset JSON: {"elements": [labels...], "relation": [[a, b], ...]} with
// each pair meaning a <= b; entries may be labels or indices.  The
// reflexive closure is added on load; missing transitivity is rejected.
Poset poset_from_json(const nlohmann::json& j);
nlohmann::json poset_to_json(const Poset& P);

// Relation JSON: {"source": [...], "target": [...],
// "pairs": [[y, x], ...]} (target label first).
Relation relation_from_json(const nlohmann::json& j);
nlohmann::json relation_to_json(const Relation& R);

nlohmann::json lattice_to_json(const MarkedLattice& M);

Poset load_poset(const std::string& path);
Relation load_relation(const std::string& path);
nlohmann::json load_json(const std::string& path);

}  // namespace corfun

#endif
