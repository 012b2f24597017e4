#ifndef CORFUN_DOT_EXPORT_HPP
#define CORFUN_DOT_EXPORT_HPP

#include <string>
#include <vector>

#include "corfun/forest.hpp"
#include "corfun/lattice.hpp"

namespace corfun {

// Hasse diagram of the lattice, bottom-up.  Join-irreducible elements
// are drawn as open circles, bulbs as double circles, everything else
// filled.  Deterministic node and edge order.
std::string lattice_dot(const MarkedLattice& M);

// The forest with edges child -> parent; highlighted vertices (the
// starting set Gamma for lattice graphs) are drawn bold.
std::string forest_dot(const Forest& F,
                       const std::vector<std::string>& names,
                       const std::vector<int>& highlight);

}  // namespace corfun

#endif
