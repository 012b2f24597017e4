#ifndef CORFUN_POSET_HPP
#define CORFUN_POSET_HPP

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "corfun/relation.hpp"

namespace corfun {

// Partial order on {0..n-1} with n <= 64, so subsets are 64-bit masks.
// Constructed from generating pairs (a, b) meaning a <= b; the reflexive
// transitive closure is taken and antisymmetry is validated.
class Poset {
public:
    Poset() = default;
    explicit Poset(int n, const std::vector<std::pair<int, int>>& pairs = {},
                   GroundSet elements = GroundSet());

    // From a square relation; validates that it is an order.
    static Poset from_relation(const Relation& order);

    int size() const { return n_; }
    const GroundSet& elements() const { return elements_; }
    bool leq(int a, int b) const { return (up_[a] >> b) & 1; }
    std::uint64_t up_mask(int a) const { return up_[a]; }
    std::uint64_t down_mask(int a) const { return dn_[a]; }
    std::uint64_t universe() const {
        return n_ == 64 ? ~std::uint64_t(0) : ((std::uint64_t(1) << n_) - 1);
    }

    Poset opposite() const;

    // The order as a correspondence on the elements: (a, b) present
    // iff a <= b (row index a, column index b).
    Relation order_relation() const;

    // Cover pairs (a, b): a < b with nothing strictly between.
    std::vector<std::pair<int, int>> covers() const;

    // All down-closed subsets, as masks sorted ascending as integers.
    std::vector<std::uint64_t> lower_ideals() const;
    // All up-closed subsets, ascending.
    std::vector<std::uint64_t> upper_ideals() const;
    // Position of each principal ideal down(e) within lower_ideals().
    std::vector<int> principal_positions(
        const std::vector<std::uint64_t>& ideals) const;

    std::uint64_t upper_bounds(std::uint64_t A) const;  // Ub(A); Ub(0) = all
    std::uint64_t lower_bounds(std::uint64_t A) const;  // Lb(A); Lb(0) = all

    // Moebius function of the order; 0 unless a <= b.
    long long mobius(int a, int b) const;

    // Order automorphisms.  Throws validation_error when n exceeds the
    // bound.  Backtracking with comparability-degree pruning; the brute
    // variant filters all n! permutations (kept as a test oracle).
    std::vector<Permutation> automorphisms(int bound = 8) const;
    std::vector<Permutation> automorphisms_brute(int bound = 8) const;

    bool isomorphic(const Poset& other) const;  // brute force, small n

    bool operator==(const Poset& o) const {
        return n_ == o.n_ && up_ == o.up_;
    }

private:
    void finalize();  // closure + antisymmetry validation + masks

    int n_ = 0;
    GroundSet elements_;
    std::vector<std::uint64_t> up_, dn_;
    mutable std::map<std::pair<int, int>, long long> mobius_memo_;
};

}  // namespace corfun

#endif
