#include "corfun/relation.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "corfun/errors.hpp"

namespace corfun {

GroundSet::GroundSet(std::vector<std::string> labels)
    : labels_(std::move(labels)) {
    std::set<std::string> seen;
    for (const auto& l : labels_) {
        check_input(seen.insert(l).second,
                    "ground set labels must be distinct: \"" + l + "\"");
    }
}

GroundSet GroundSet::standard(int n) {
    check_input(n >= 0, "ground set size must be non-negative");
    std::vector<std::string> labels(n);
    for (int i = 0; i < n; ++i) labels[i] = std::to_string(i);
    return GroundSet(std::move(labels));
}

int GroundSet::index_of(const std::string& label) const {
    for (int i = 0; i < size(); ++i)
        if (labels_[i] == label) return i;
    return -1;
}

Relation::Relation(GroundSet source, GroundSet target)
    : source_(std::move(source)), target_(std::move(target)) {
    rows_.assign(target_.size(), Bits(source_.size()));
}

Relation::Relation(int src_n, int tgt_n)
    : Relation(GroundSet::standard(src_n), GroundSet::standard(tgt_n)) {}

Relation Relation::delta(const GroundSet& X) {
    Relation r(X, X);
    for (int i = 0; i < X.size(); ++i) r.add(i, i);
    return r;
}

Relation Relation::delta(int n) { return delta(GroundSet::standard(n)); }

Relation Relation::full(int n) {
    Relation r(n, n);
    for (int y = 0; y < n; ++y)
        for (int x = 0; x < n; ++x) r.add(y, x);
    return r;
}

Relation Relation::from_pairs(
    int src_n, int tgt_n, const std::vector<std::pair<int, int>>& yx_pairs) {
    Relation r(src_n, tgt_n);
    for (auto [y, x] : yx_pairs) {
        check_input(0 <= y && y < tgt_n && 0 <= x && x < src_n,
                    "relation pair out of range");
        r.add(y, x);
    }
    return r;
}

std::vector<std::pair<int, int>> Relation::pairs() const {
    std::vector<std::pair<int, int>> out;
    for (int y = 0; y < tgt_size(); ++y)
        rows_[y].for_each([&](int x) { out.emplace_back(y, x); });
    return out;
}

int Relation::pair_count() const {
    int c = 0;
    for (const Bits& row : rows_) c += row.count();
    return c;
}

Relation::Flags Relation::classify() const {
    check_input(src_size() == tgt_size(),
                "classify requires a square relation");
    int n = src_size();
    Flags f{true, true, true, false, false};
    for (int i = 0; i < n; ++i)
        if (!has(i, i)) f.reflexive = false;
    for (int z = 0; z < n && f.transitive; ++z) {
        Bits reach(n);
        rows_[z].for_each([&](int y) { reach |= rows_[y]; });
        if (!reach.subset_of(rows_[z])) f.transitive = false;
    }
    for (int a = 0; a < n && f.antisymmetric; ++a)
        for (int b = a + 1; b < n; ++b)
            if (has(a, b) && has(b, a)) {
                f.antisymmetric = false;
                break;
            }
    f.is_preorder = f.reflexive && f.transitive;
    f.is_order = f.is_preorder && f.antisymmetric;
    return f;
}

Relation compose(const Relation& R, const Relation& S) {
    check_input(R.src_size() == S.tgt_size(),
                "composition mismatch: inner ground sets differ (" +
                    std::to_string(R.src_size()) + " vs " +
                    std::to_string(S.tgt_size()) + ")");
    Relation out(S.source(), R.target());
    for (int z = 0; z < R.tgt_size(); ++z) {
        Bits acc(S.src_size());
        R.row(z).for_each([&](int y) { acc |= S.row(y); });
        acc.for_each([&](int x) { out.add(z, x); });
    }
    return out;
}

Relation opposite(const Relation& R) {
    Relation out(R.target(), R.source());
    for (int y = 0; y < R.tgt_size(); ++y)
        R.row(y).for_each([&](int x) { out.add(x, y); });
    return out;
}

Permutation::Permutation(std::vector<int> images) : img_(std::move(images)) {
    int n = (int)img_.size();
    std::vector<bool> seen(n, false);
    for (int v : img_) {
        check_input(0 <= v && v < n && !seen[v],
                    "permutation images must be a bijection");
        seen[v] = true;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> img(n);
    std::iota(img.begin(), img.end(), 0);
    return Permutation(std::move(img));
}

Permutation Permutation::inverse() const {
    std::vector<int> inv(img_.size());
    for (int i = 0; i < (int)img_.size(); ++i) inv[img_[i]] = i;
    return Permutation(std::move(inv));
}

Permutation Permutation::after(const Permutation& other) const {
    check_input(size() == other.size(), "permutation size mismatch");
    std::vector<int> img(img_.size());
    for (int i = 0; i < (int)img_.size(); ++i) img[i] = img_[other(i)];
    return Permutation(std::move(img));
}

std::vector<Permutation> all_permutations(int n) {
    std::vector<int> img(n);
    std::iota(img.begin(), img.end(), 0);
    std::vector<Permutation> out;
    do {
        out.emplace_back(img);
    } while (std::next_permutation(img.begin(), img.end()));
    return out;
}

Relation delta(const Permutation& sigma) {
    Relation r(sigma.size(), sigma.size());
    for (int x = 0; x < sigma.size(); ++x) r.add(sigma(x), x);
    return r;
}

Relation conjugate(const Permutation& sigma, const Relation& R) {
    return compose(compose(delta(sigma), R), delta(sigma.inverse()));
}

std::pair<Relation, std::vector<int>> preorder_quotient(const Relation& R) {
    auto flags = R.classify();
    check_input(flags.is_preorder, "preorder quotient needs a preorder");
    int n = R.src_size();
    std::vector<int> cls(n, -1);
    std::vector<int> reps;
    for (int i = 0; i < n; ++i) {
        if (cls[i] >= 0) continue;
        cls[i] = (int)reps.size();
        for (int j = i + 1; j < n; ++j)
            if (R.has(i, j) && R.has(j, i)) cls[j] = cls[i];
        reps.push_back(i);
    }
    int m = (int)reps.size();
    Relation order(m, m);
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b)
            if (R.has(reps[a], reps[b])) order.add(a, b);
    require(order.classify().is_order, "preorder quotient must be an order");
    return {order, cls};
}

}  // namespace corfun
