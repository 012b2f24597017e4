#ifndef CORFUN_TESTS_FIXTURES_HPP
#define CORFUN_TESTS_FIXTURES_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "corfun/lattice.hpp"
#include "corfun/poset.hpp"

namespace corfun::fixtures {

// The small posets used throughout the tests, by conventional name.
inline std::map<std::string, Poset> posets() {
    std::map<std::string, Poset> P;
    P.emplace("pt", Poset(1));
    P.emplace("antichain2", Poset(2));
    P.emplace("antichain3", Poset(3));
    P.emplace("antichain4", Poset(4));
    P.emplace("chain2", Poset(2, {{0, 1}}));
    P.emplace("chain3", Poset(3, {{0, 1}, {1, 2}}));
    P.emplace("v", Poset(3, {{0, 1}, {0, 2}}));
    P.emplace("lambda", Poset(3, {{1, 0}, {2, 0}}));
    P.emplace("chain2_pt", Poset(3, {{0, 1}}));
    P.emplace("n4", Poset(4, {{0, 2}, {1, 2}, {1, 3}}));
    P.emplace("forest4", Poset(4, {{0, 1}, {0, 2}}));
    P.emplace("chain2_chain2", Poset(4, {{0, 1}, {2, 3}}));
    return P;
}

// The order of a lattice as a Poset on the same indices.
inline Poset poset_of(const Lattice& T) {
    std::vector<std::pair<int, int>> pairs;
    for (int a = 0; a < T.size(); ++a)
        for (int b = 0; b < T.size(); ++b)
            if (a != b && T.leq(a, b)) pairs.emplace_back(a, b);
    return Poset(T.size(), pairs);
}

}  // namespace corfun::fixtures

#endif
