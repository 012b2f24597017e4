#ifndef CORFUN_FOREST_HPP
#define CORFUN_FOREST_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "corfun/lattice.hpp"
#include "corfun/map_algebra.hpp"

namespace corfun {

// Forest on vertices {0..n-1}: a partial parent map (parent[i] = -1 for
// roots), validated acyclic.  Every edge is (child, parent[child]), so
// edge subsets are encoded as masks over the child vertices.
struct Forest {
    int n = 0;
    std::vector<int> parent;

    Forest() = default;
    Forest(int n, std::vector<int> parent);

    std::vector<int> roots() const;
    // Non-root vertices that are nobody's parent.
    std::vector<int> leaves() const;
    std::uint64_t leaf_mask() const;
    std::uint64_t nonroot_mask() const;
    // x, its parent, ..., up to the root of x.
    std::vector<int> geodesic(int x) const;
};

// The edge family over a set B of starting vertices (mask): the edge
// subsets obtained by picking, for every x in B, a prefix of the
// geodesic of x (possibly empty) and taking the union.  The ring
// variant forces every x in B to contribute at least its first edge.
// Members are edge masks, sorted ascending without duplicates.
std::vector<std::uint64_t> s_family(const Forest& F, std::uint64_t B,
                                    bool ring = false);

// The same family computed by the edge-subset predicate: A belongs iff
// every edge (y, parent(y)) of A has y in B or some edge of A ending at
// y; the ring variant also requires the first edge of every x in B.
std::vector<std::uint64_t> s_family_predicate(const Forest& F,
                                              std::uint64_t B,
                                              bool ring = false);

// tau_A: the one-step endomap of {0..n-1} along the edges of A:
// x -> parent(x) when the edge out of x lies in A, else x -> x.
EndoMap tau_map(const Forest& F, std::uint64_t A);

// v_B = sum over the family of B of (-1)^|A| tau_A, and
// u_B = sum over the ring family of (-1)^(|B| + |A|) tau_A.
// B must consist of leaves (validated); the product rules
// v_B = prod v_x and u_B = prod u_x over x in B hold in that case.
FormalMapSum v_sum(const Forest& F, std::uint64_t B);
FormalMapSum u_sum(const Forest& F, std::uint64_t B);

struct GeodesicIdempotents {
    std::vector<int> B;                 // ascending vertex list
    std::vector<FormalMapSum> h_x;      // h of the geodesic of each x
    std::vector<FormalMapSum> v_x, u_x; // per-vertex idempotents
    FormalMapSum v_B, u_B;
};
GeodesicIdempotents geodesic_idempotents(const Forest& F,
                                         const std::vector<int>& B);

// ---- The graph of a lattice ----

// Reduction sequence of a lattice element a: iterate s until the value
// leaves the irreducibles or stalls, splicing in r_inf on a stall.  The
// result starts at a, is strictly increasing, has all interior points
// irreducible, and ends at r_inf(s_inf(a)) (all validated; violations
// are invariant errors).
std::vector<int> reduction_sequence(const Lattice& T, int a);

// The forest on the elements of T whose edges are the consecutive pairs
// of the reduction sequences of the elements of Gamma.  Validates that
// the leaves of the result are exactly Gamma.
Forest graph_of_lattice(const Lattice& T);

// u_a = kappa of the reduction sequence of a;
// u_T = the composition of u_a over a in Gamma ascending (an idempotent
// supported on maps into G).
FormalMapSum u_a_sum(const Lattice& T, int a);
FormalMapSum u_T_sum(const Lattice& T);

// Uniform random parent function (possible parent or root for every
// vertex independently, drawn over a topological list).
Forest random_forest(std::mt19937& rng, int n);

// Every forest on n vertices (all acyclic parent maps); n <= 6 guarded.
std::vector<Forest> all_forests(int n);

}  // namespace corfun

#endif
