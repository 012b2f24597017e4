#include "corfun/json_io.hpp"

#include <fstream>

#include "corfun/errors.hpp"

namespace corfun {

namespace {

GroundSet ground_set_from_json(const nlohmann::json& j, const char* key) {
    check_input(j.is_array(), std::string(key) + " must be an array");
    std::vector<std::string> labels;
    labels.reserve(j.size());
    for (const auto& v : j) {
        check_input(v.is_string(),
                    std::string(key) + " entries must be strings");
        labels.push_back(v.get<std::string>());
    }
    return GroundSet(labels);
}

int element_index(const nlohmann::json& v, const GroundSet& X,
                  const char* what) {
    if (v.is_string()) {
        int i = X.index_of(v.get<std::string>());
        check_input(i >= 0, std::string(what) + ": unknown label \"" +
                                v.get<std::string>() + "\"");
        return i;
    }
    check_input(v.is_number_integer(),
                std::string(what) + " entries must be labels or indices");
    long long i = v.get<long long>();
    check_input(0 <= i && i < X.size(),
                std::string(what) + ": index out of range");
    return (int)i;
}

std::vector<std::pair<int, int>> pair_list(const nlohmann::json& j,
                                           const GroundSet& A,
                                           const GroundSet& B,
                                           const char* key) {
    check_input(j.is_array(), std::string(key) + " must be an array");
    std::vector<std::pair<int, int>> out;
    out.reserve(j.size());
    for (const auto& p : j) {
        check_input(p.is_array() && p.size() == 2,
                    std::string(key) + " entries must be pairs");
        out.emplace_back(element_index(p[0], A, key),
                         element_index(p[1], B, key));
    }
    return out;
}

}  // namespace

Poset poset_from_json(const nlohmann::json& j) {
    check_input(j.is_object() && j.contains("elements") &&
                    j.contains("relation"),
                "poset JSON needs \"elements\" and \"relation\"");
    GroundSet X = ground_set_from_json(j["elements"], "elements");
    int n = X.size();
    check_input(n <= 64, "poset JSON limited to 64 elements");
    std::vector<std::pair<int, int>> pairs =
        pair_list(j["relation"], X, X, "relation");
    // Reflexive closure is implied; anything the transitive closure would
    // add beyond that is rejected rather than silently completed.
    std::vector<std::uint64_t> given(n, 0);
    for (int a = 0; a < n; ++a) given[a] |= std::uint64_t(1) << a;
    for (auto [a, b] : pairs) given[a] |= std::uint64_t(1) << b;
    for (int a = 0; a < n; ++a)
        mask_for_each(given[a], [&](int b) {
            mask_for_each(given[b], [&](int c) {
                check_input((given[a] >> c) & 1,
                            "relation is not transitive: " + X.label(a) +
                                " <= " + X.label(b) + " <= " + X.label(c) +
                                " but the pair (" + X.label(a) + ", " +
                                X.label(c) + ") is missing");
            });
        });
    return Poset(n, pairs, X);
}

nlohmann::json poset_to_json(const Poset& P) {
    nlohmann::json j;
    j["elements"] = P.elements().labels();
    nlohmann::json rel = nlohmann::json::array();
    for (int a = 0; a < P.size(); ++a)
        for (int b = 0; b < P.size(); ++b)
            if (a != b && P.leq(a, b))
                rel.push_back({P.elements().label(a), P.elements().label(b)});
    j["relation"] = rel;
    return j;
}

Relation relation_from_json(const nlohmann::json& j) {
    check_input(j.is_object() && j.contains("source") &&
                    j.contains("target") && j.contains("pairs"),
                "relation JSON needs \"source\", \"target\" and \"pairs\"");
    GroundSet src = ground_set_from_json(j["source"], "source");
    GroundSet tgt = ground_set_from_json(j["target"], "target");
    Relation R(src, tgt);
    for (auto [y, x] : pair_list(j["pairs"], tgt, src, "pairs")) R.add(y, x);
    return R;
}

nlohmann::json relation_to_json(const Relation& R) {
    nlohmann::json j;
    j["source"] = R.source().labels();
    j["target"] = R.target().labels();
    nlohmann::json pairs = nlohmann::json::array();
    for (auto [y, x] : R.pairs())
        pairs.push_back({R.target().label(y), R.source().label(x)});
    j["pairs"] = pairs;
    return j;
}

nlohmann::json lattice_to_json(const MarkedLattice& M) {
    const Lattice& T = M.T;
    nlohmann::json j;
    j["n"] = T.size();
    j["names"] = T.names();
    j["bottom"] = T.bottom();
    j["top"] = T.top();
    nlohmann::json covers = nlohmann::json::array();
    Poset order = Poset::from_relation([&] {
        Relation r(T.size(), T.size());
        for (int a = 0; a < T.size(); ++a)
            for (int b = 0; b < T.size(); ++b)
                if (T.leq(a, b)) r.add(a, b);
        return r;
    }());
    for (auto [a, b] : order.covers()) covers.push_back({a, b});
    j["covers"] = covers;
    j["irreducibles"] = M.embed;
    GPartition gp = g_partition(T);
    j["meet_closure"] = gp.meetE;
    j["bulbs"] = gp.bulbs;
    j["G"] = gp.G;
    j["Gamma"] = gp.Gamma;
    j["distributive"] = T.is_distributive();
    return j;
}

nlohmann::json load_json(const std::string& path) {
    std::ifstream in(path);
    check_input(in.good(), "cannot open file: " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw validation_error("cannot parse " + path + ": " + e.what());
    }
    return j;
}

Poset load_poset(const std::string& path) {
    return poset_from_json(load_json(path));
}

Relation load_relation(const std::string& path) {
    return relation_from_json(load_json(path));
}

}  // namespace corfun
