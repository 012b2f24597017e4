#ifndef CORFUN_CLOSURE_HPP
#define CORFUN_CLOSURE_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "corfun/lattice.hpp"
#include "corfun/poset.hpp"

namespace corfun {

// The two canonical closures on lower ideals of a poset (E, R):
//   l_close(A) = Lb(Ub(A)), lower bounds of the upper bounds;
//   k_close(A) = l_close(A), with the top generator removed when the
//   result is a principal ideal down(a) whose generator a was not in A.
std::uint64_t l_close(const Poset& P, std::uint64_t A);
std::uint64_t k_close(const Poset& P, std::uint64_t A);

// A closure operation on the lower ideals of a poset.  Must be
// extensive, idempotent, monotone, and the identity on principal ideals;
// validate() checks all four over every ideal and throws
// validation_error on failure.
struct ClosureOperation {
    Poset P;
    std::function<std::uint64_t(const Poset&, std::uint64_t)> close;
    std::string name;

    void validate() const;
};

// A join-preserving map between lattices, stored by images.  validate()
// checks f(join A) = join f(A) over all subsets when the source has at
// most 16 elements, otherwise over all pairs plus the bottom.
struct JoinMorphism {
    Lattice source, target;
    std::vector<int> images;

    void validate() const;
    int operator()(int t) const { return images[t]; }
    bool surjective() const;
    // Right adjoint: adjoint(t2) = join of {t1 : f(t1) <= t2}; satisfies
    // the Galois equivalence f(t1) <= t2 iff t1 <= adjoint(t2).
    int adjoint(int t2) const;
};

// Quotient of the ideal lattice by a closure operation: elements are the
// closed ideals, meet is intersection, join is the closure of the union.
// pi maps each ideal to (the index of) its closure and preserves joins.
struct QuotientLattice {
    MarkedLattice M;          // the closed ideals as a marked lattice
    std::vector<int> embed_P; // P-element -> index of its principal ideal
    JoinMorphism pi;          // ideal lattice ->> M.T
};

QuotientLattice lattice_of_closed(const ClosureOperation& cl);
QuotientLattice L_of(const Poset& P);  // via l_close
QuotientLattice K_of(const Poset& P);  // via k_close

// Projection from the ideal lattice of the irreducible poset of T onto
// T itself, sending an ideal of irreducibles to its join.  Preserves
// joins; each fiber has a greatest element, the ideal {e : e <= t}.
JoinMorphism pi_T(const MarkedLattice& M);

// Fibers of a morphism, listed per target element in source order.
std::vector<std::vector<int>> fibers(const JoinMorphism& f);

// For each t of M.T, the position in ideal_lattice(M.irr) of the
// greatest ideal mapping to t under pi_T.
std::vector<int> pi_fiber_greatest(const MarkedLattice& M);

// Comparison maps for a lattice T generated by a poset (E, R) embedded
// via embed (every element of T a join of embedded elements):
//   phi : T -> L(E, R), t -> l_close of {e : embed[e] <= t};
//   psi : T -> K(E, R), same formula with k_close, defined only when the
//   embedded image is exactly the irreducibles of T (else absent, with
//   the reason recorded).
// Both are join-preserving, surjective, and the identity on E.
struct ComparisonMaps {
    QuotientLattice L, K;
    JoinMorphism phi;
    std::optional<JoinMorphism> psi;
    std::string psi_reason;  // set when psi is absent
};
ComparisonMaps comparison_maps(const Lattice& T, const Poset& P,
                               const std::vector<int>& embed);
ComparisonMaps comparison_maps(const MarkedLattice& M);

}  // namespace corfun

#endif
