#ifndef CORFUN_LATTICE_HPP
#define CORFUN_LATTICE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "corfun/bits.hpp"
#include "corfun/poset.hpp"

namespace corfun {

// Finite lattice given by its order.  dn[i] is the set of elements <= i.
// Construction validates unique bottom, unique top, and the existence of
// unique least upper / greatest lower bounds for every pair, reporting a
// witness pair otherwise.  Join and meet tables are built eagerly.
class Lattice {
public:
    Lattice() = default;
    explicit Lattice(std::vector<Bits> dn,
                     std::vector<std::string> names = {});

    int size() const { return n_; }
    const std::vector<std::string>& names() const { return names_; }
    const std::string& name(int t) const { return names_[t]; }

    bool leq(int a, int b) const { return dn_[b].test(a); }
    const Bits& down(int t) const { return dn_[t]; }
    const Bits& up(int t) const { return up_[t]; }

    int join(int a, int b) const { return joinT_[(std::size_t)a * n_ + b]; }
    int meet(int a, int b) const { return meetT_[(std::size_t)a * n_ + b]; }
    int bottom() const { return bot_; }
    int top() const { return top_; }

    int join_set(const Bits& m) const;  // empty set joins to bottom
    int meet_set(const Bits& m) const;  // empty set meets to top

    // r(t): join of the elements strictly below t (bottom if none).
    int r(int t) const;
    // s(t): meet of the irreducibles strictly above t (top if none).
    int s(int t) const;
    int r_inf(int t) const;  // iterate r to a fixed point
    int s_inf(int t) const;  // iterate s to a fixed point

    // Join-irreducible elements (r(t) != t), ascending.
    const std::vector<int>& irr() const;
    const Bits& irr_mask() const;

    // Meets of subsets of the irreducibles (the empty meet is the top),
    // ascending.
    std::vector<int> meet_closure_irr() const;
    // Elements with r_inf(s_inf(t)) == t, ascending.
    std::vector<int> g_sharp() const;
    // G: union of the irreducibles and g_sharp, ascending.
    std::vector<int> g_set() const;
    // Gamma: the complement of G, ascending.
    std::vector<int> gamma_set() const;
    // Bulbs: t not a meet of irreducibles such that t = r_inf(e) and
    // s(e) = e for some irreducible e.
    std::vector<int> bulbs() const;

    bool is_distributive() const;

    // The irreducibles as an induced subposet; element i of the result
    // is irr()[i].
    Poset irr_poset() const;

    Lattice opposite() const;

    long long mobius(int a, int b) const;  // 0 unless a <= b

    // Lattices built from a family of subset-masks remember them.
    bool has_sets() const { return has_sets_; }
    const std::vector<std::uint64_t>& sets() const { return sets_; }
    int index_of_set(std::uint64_t m) const;  // -1 if absent

    bool operator==(const Lattice& o) const {
        return n_ == o.n_ && dn_ == o.dn_;
    }

private:
    friend Lattice lattice_from_sets(std::vector<std::uint64_t>,
                                     std::vector<std::string>);

    int n_ = 0;
    std::vector<Bits> dn_, up_;
    std::vector<std::string> names_;
    std::vector<int> joinT_, meetT_;
    int bot_ = -1, top_ = -1;
    mutable std::vector<int> irr_;
    mutable bool irr_built_ = false;
    mutable Bits irrm_;
    mutable std::vector<long long> mobius_table_;
    mutable bool mobius_built_ = false;
    bool has_sets_ = false;
    std::vector<std::uint64_t> sets_;
};

// Lattice of an inclusion-ordered family of subset-masks.  The family is
// sorted ascending as integers; names default to "{i,j,...}".
Lattice lattice_from_sets(std::vector<std::uint64_t> sets,
                          std::vector<std::string> names = {});

// Lattice from covering pairs (a, b): a covered by b.
Lattice lattice_from_cover(int n,
                           const std::vector<std::pair<int, int>>& covers,
                           std::vector<std::string> names = {});

Lattice chain_lattice(int k);  // k elements 0 < 1 < ... < k-1
Lattice total_order(int n);    // the chain 0 < 1 < ... < n (n+1 elements)
Lattice subset_lattice(int n); // all subsets of an n-set
Lattice product_lattice(const Lattice& A, const Lattice& B);  // componentwise

// Validates that the given relation is an order admitting all joins and
// meets; throws validation_error with a witness pair otherwise.
Lattice build_lattice(const Relation& order);
Lattice build_lattice(const Poset& order);

// A lattice together with its poset of join-irreducibles (E, R) and the
// embedding E -> T.  The embedding image is exactly the set of
// join-irreducible elements and the order on E is induced from T.
struct MarkedLattice {
    Lattice T;
    Poset irr;               // element i corresponds to embed[i]
    std::vector<int> embed;  // ascending lattice elements
};

MarkedLattice mark(Lattice T);

// Lattice of lower ideals of P, ordered by inclusion, with its
// irreducibles marked.  The irreducible poset is isomorphic to P via the
// principal-ideal map (an invariant checked here).
MarkedLattice ideal_lattice(const Poset& P);

// Generation data of T: meetE (meets of subsets of the irreducibles),
// bulbs, G = meetE + bulbs (disjointly), and Gamma = the complement of
// G.  Cross-checks G against the irr + g_sharp characterization and
// throws invariant_error on mismatch.
struct GPartition {
    std::vector<int> meetE, bulbs, G, Gamma;  // ascending
};
GPartition g_partition(const Lattice& T);

// Named fixtures, plus the families "chainN" (the total order 0..N) and
// "booleanN" (subsets of an N-set).  Throws validation_error for unknown
// names.
MarkedLattice catalog_lattice(const std::string& name);
std::vector<std::string> catalog_names();

}  // namespace corfun

#endif
