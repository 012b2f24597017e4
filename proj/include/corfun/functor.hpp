#ifndef CORFUN_FUNCTOR_HPP
#define CORFUN_FUNCTOR_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "corfun/lattice.hpp"
#include "corfun/map_algebra.hpp"
#include "corfun/matrix.hpp"
#include "corfun/relation.hpp"

namespace corfun {

// A map X -> T is its image vector (lattice elements indexed by X); an
// integer combination of such maps reuses the FormalMapSum container.
using LatticeMap = std::vector<int>;
using MapVector = FormalMapSum;

// All maps from an x-element set into {0..n_values-1}, in lexicographic
// order with the rightmost coordinate varying fastest.
std::vector<LatticeMap> all_maps(int n_values, int x);

// Index-tuple odometer: all tuples in {0..base-1}^x, rightmost fastest.
std::vector<std::vector<int>> index_tuples(int base, int x);

// The action of a correspondence on maps: given S from X to Y (pairs
// (y, x)) and phi : X -> T, the image (S phi)(y) is the join of phi(x)
// over (y, x) in S; an empty join is the bottom.
LatticeMap act_join(const Lattice& T,
                    const std::vector<std::pair<int, int>>& S,
                    const LatticeMap& phi, int ysize);
LatticeMap act_join(const Lattice& T, const Relation& S,
                    const LatticeMap& phi);
MapVector act(const Lattice& T, const Relation& S, const MapVector& v);

// gamma(phi): the correspondence from E to X with (x, e) present iff
// embed[e] <= phi(x).
Relation gamma_of(const MarkedLattice& M, const LatticeMap& phi);
// Inverse for T the ideal lattice of (E, R): requires S . R^op = S
// (rows of S are lower ideals); throws validation_error otherwise.
LatticeMap gamma_inv(const MarkedLattice& M, const Relation& S);

// Context for the linked-pair conditions between phi : X -> T and
// psi : X -> (upper ideals of E).  ne <= 8 so pair sets fit in 64 bits.
struct VdashContext {
    explicit VdashContext(const MarkedLattice& M);

    const MarkedLattice& M;
    int ne;
    Poset P;                             // irreducible poset (E, R)
    std::vector<std::uint64_t> upsets;   // upper ideals of P, ascending
    std::vector<std::uint64_t> upsetE;   // principal upper ideal per e
    std::uint64_t rop;                   // pairs (e, f) with f <= e

    // Pair set {(e, f) : some x has e in psi[x] and embed[f] <= phi[x]},
    // packed as bits e * ne + f.
    std::uint64_t gamma_product(const std::vector<std::uint64_t>& psi,
                                const LatticeMap& phi) const;

    bool cond_a(const std::vector<std::uint64_t>& psi,
                const LatticeMap& phi) const;
    bool cond_b(const std::vector<std::uint64_t>& psi,
                const LatticeMap& phi) const;
    bool cond_c(const std::vector<std::uint64_t>& psi,
                const LatticeMap& phi) const;
    bool cond_d(const std::vector<std::uint64_t>& psi,
                const LatticeMap& phi) const;
    bool cond_e(const std::vector<std::uint64_t>& psi,
                const LatticeMap& phi) const;
    bool cond_f(const std::vector<std::uint64_t>& psi,
                const LatticeMap& phi) const;
};

// vdash(phi, psi) evaluates the product condition (the transpose of the
// graph of psi composed with the graph of phi equals R^op).  With
// debug = true the independent forms are evaluated too and any
// disagreement is an invariant error.
bool vdash(const VdashContext& ctx, const std::vector<std::uint64_t>& psi,
           const LatticeMap& phi, bool debug = false);

// The linked-pair matrix: rows indexed by tuples of upper ideals of E,
// columns by maps X -> T, entry 1 where the pair is linked.  Both
// enumerations are budget-checked.
struct MatrixN {
    IntegerMatrix N;
    std::vector<std::vector<std::uint64_t>> row_psi;
    std::vector<LatticeMap> col_phi;
};
MatrixN matrix_N(const MarkedLattice& M, int x);

// Counting by inclusion-exclusion.  hit_count(x, e, g): maps from an
// x-set to a g-set whose image contains a fixed e-subset;
// surj_count(x, e): surjections from an x-set onto an e-set.
mpz_class hit_count(int x, int e, long long g);
mpz_class surj_count(int x, int e);

// |E| and |G| of the ideal lattice of P.
std::pair<int, long long> poset_eg(const Poset& P);

// The rank of the evaluation at an x-set of the functor attached to P:
// hit_count(x, |E|, |G|) for the ideal lattice of P.
mpz_class rank_formula(const Poset& P, int x);

// The basis maps at an x-set: maps X -> T whose image contains E and
// lies inside G, in all_maps order.  Budget-checked.
std::vector<LatticeMap> basis_BX(const MarkedLattice& M, int x);

// Projection to the quotient by maps missing part of E: keeps exactly
// the terms whose image contains every irreducible.
MapVector project_HT(const MarkedLattice& M, const MapVector& v);

// ---- Duality ----

// star(phi) = sum over rho <= phi (pointwise) of
// prod_x mobius(rho(x), phi(x)) rho, a vector in the dual basis.
MapVector star(const Lattice& T, const LatticeMap& phi);

// Pairing of a map lambda against a vector of maps viewed in the
// opposite lattice: the coefficient sum over terms with lambda <= term
// pointwise.
mpz_class pairing(const Lattice& T, const LatticeMap& lam,
                  const MapVector& v);

// gamma_T = sum over subsets A of E of (-1)^|A| eta_A, where
// eta_A(e) = r(embed[e]) if e in A else embed[e]; equals star(embed).
MapVector gamma_T(const MarkedLattice& M);

// Meet-variance action on maps E -> T: (Q * psi)(y) is the meet of
// psi(x) over (y, x) in Q; an empty meet is the top.
LatticeMap meet_act(const Lattice& T,
                    const std::vector<std::pair<int, int>>& Q,
                    const LatticeMap& psi, int ysize);
MapVector meet_act(const Lattice& T,
                   const std::vector<std::pair<int, int>>& Q,
                   const MapVector& v, int ysize);

// Rank of the span of the meet-translates S * gamma_T over all
// correspondences S from E to X; T must be an ideal lattice (enforced)
// and the result equals rank_formula of the opposite poset.
int span_rank_gamma(const MarkedLattice& M, int x);
int span_rank_gamma(const Poset& P, int x);

// Pairing matrix of all maps at x against themselves viewed in the
// opposite lattice: entry (i, j) = 1 iff map_i <= map_j pointwise.
// Unitriangular in any linear extension, hence of determinant +-1.
IntegerMatrix pairing_matrix(const Lattice& T, int x);

// ---- The fundamental action on the basis ----

// Matrix of the action of U (a correspondence from X to Y) from the
// basis at X to the basis at Y: column j holds the coordinates of
// project_HT(u_T o (U phi_j)).  Functorial, and the identity
// correspondence acts as the identity matrix.
struct FunctorAction {
    std::vector<LatticeMap> basis_X, basis_Y;
    IntegerMatrix mat;  // |basis_Y| rows, |basis_X| columns
};
FunctorAction fundamental_action(const MarkedLattice& M, const Relation& U);

// Coordinates over the Y-basis of the action of U on one X-basis map
// (which must belong to basis_BX; validated).
std::vector<mpz_class> fundamental_action_on(const MarkedLattice& M,
                                             const Relation& U,
                                             const LatticeMap& phi);

// Dimension of the simple quotient attached to (P, V): dimV / autOrder
// times the rank formula of the opposite poset.  autOrder must equal
// the automorphism count of P (validated when computable) and the
// division must be exact (invariant error otherwise).
mpz_class dim_simple(const Poset& P, int x, const mpz_class& dimV,
                     long long autOrder);

}  // namespace corfun

#endif
