#ifndef CORFUN_RELATION_HPP
#define CORFUN_RELATION_HPP

#include <string>
#include <utility>
#include <vector>

#include "corfun/bits.hpp"

namespace corfun {

// Finite labelled ground set.  Labels must be pairwise distinct.
class GroundSet {
public:
    GroundSet() = default;
    explicit GroundSet(std::vector<std::string> labels);
    static GroundSet standard(int n);  // labels "0", "1", ...

    int size() const { return (int)labels_.size(); }
    const std::string& label(int i) const { return labels_[i]; }
    const std::vector<std::string>& labels() const { return labels_; }
    int index_of(const std::string& label) const;  // -1 if absent
    bool operator==(const GroundSet& o) const { return labels_ == o.labels_; }

private:
    std::vector<std::string> labels_;
};

// Correspondence from X to Y: a subset of Y x X, stored target-first as
// incidence rows over the source.  has(y, x) reads "y receives x".
class Relation {
public:
    Relation() = default;
    Relation(GroundSet source, GroundSet target);
    Relation(int src_n, int tgt_n);  // standard ground sets

    static Relation delta(const GroundSet& X);
    static Relation delta(int n);
    static Relation full(int n);
    static Relation from_pairs(int src_n, int tgt_n,
                               const std::vector<std::pair<int, int>>& yx_pairs);

    const GroundSet& source() const { return source_; }
    const GroundSet& target() const { return target_; }
    int src_size() const { return source_.size(); }
    int tgt_size() const { return target_.size(); }

    bool has(int y, int x) const { return rows_[y].test(x); }
    void add(int y, int x) { rows_[y].set(x); }
    const Bits& row(int y) const { return rows_[y]; }

    // Pairs (y, x), sorted.
    std::vector<std::pair<int, int>> pairs() const;
    int pair_count() const;

    bool operator==(const Relation& o) const { return rows_ == o.rows_; }

    struct Flags {
        bool reflexive, transitive, antisymmetric, is_preorder, is_order;
    };
    Flags classify() const;  // requires source == target size

private:
    GroundSet source_, target_;
    std::vector<Bits> rows_;  // rows_[y] over the source
};

// Composite: R from Y to Z, S from X to Y gives RS from X to Z,
// (z, x) present iff some y has (z, y) in R and (y, x) in S.
Relation compose(const Relation& R, const Relation& S);

// Transpose: pairs (x, y) for each (y, x) of R.
Relation opposite(const Relation& R);

class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<int> images);  // validates bijection

    static Permutation identity(int n);

    int size() const { return (int)img_.size(); }
    int operator()(int i) const { return img_[i]; }
    const std::vector<int>& images() const { return img_; }
    Permutation inverse() const;
    // (this o other)(i) = this(other(i)).
    Permutation after(const Permutation& other) const;
    bool operator==(const Permutation& o) const { return img_ == o.img_; }

private:
    std::vector<int> img_;
};

// All permutations of {0..n-1} in lexicographic order of image vectors.
std::vector<Permutation> all_permutations(int n);

// Graph of a permutation: pairs (sigma(x), x).
Relation delta(const Permutation& sigma);

// Conjugate delta(sigma) . R . delta(sigma^{-1}).
Relation conjugate(const Permutation& sigma, const Relation& R);

// Quotient of a preorder by mutual comparability.  Returns the induced
// order on the classes (classes numbered by smallest member, ascending)
// and the projection element -> class.
std::pair<Relation, std::vector<int>> preorder_quotient(const Relation& R);

}  // namespace corfun

#endif
