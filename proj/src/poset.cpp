#include "corfun/poset.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "corfun/errors.hpp"

namespace corfun {

Poset::Poset(int n, const std::vector<std::pair<int, int>>& pairs,
             GroundSet elements)
    : n_(n), elements_(std::move(elements)) {
    check_input(0 <= n && n <= 64, "poset size must be between 0 and 64");
    if (elements_.size() == 0 && n > 0) elements_ = GroundSet::standard(n);
    check_input(elements_.size() == n_ || n_ == 0,
                "element labels must match the poset size");
    up_.assign(n_, 0);
    for (int i = 0; i < n_; ++i) up_[i] = std::uint64_t(1) << i;
    for (auto [a, b] : pairs) {
        check_input(0 <= a && a < n_ && 0 <= b && b < n_,
                    "order pair out of range");
        up_[a] |= std::uint64_t(1) << b;
    }
    finalize();
}

void Poset::finalize() {
    // Reflexive-transitive closure, then antisymmetry.
    bool changed = true;
    while (changed) {
        changed = false;
        for (int a = 0; a < n_; ++a) {
            std::uint64_t acc = up_[a];
            mask_for_each(up_[a], [&](int b) { acc |= up_[b]; });
            if (acc != up_[a]) {
                up_[a] = acc;
                changed = true;
            }
        }
    }
    for (int a = 0; a < n_; ++a)
        mask_for_each(up_[a], [&](int b) {
            if (b != a && ((up_[b] >> a) & 1))
                throw validation_error(
                    "not antisymmetric: " + std::to_string(a) + " and " +
                    std::to_string(b) + " are mutually comparable");
        });
    dn_.assign(n_, 0);
    for (int a = 0; a < n_; ++a)
        mask_for_each(up_[a], [&](int b) { dn_[b] |= std::uint64_t(1) << a; });
}

Poset Poset::from_relation(const Relation& order) {
    check_input(order.src_size() == order.tgt_size(),
                "an order must be a square relation");
    auto flags = order.classify();
    check_input(flags.is_order, "relation is not an order (reflexive=" +
                                    std::to_string(flags.reflexive) +
                                    " transitive=" +
                                    std::to_string(flags.transitive) +
                                    " antisymmetric=" +
                                    std::to_string(flags.antisymmetric) + ")");
    int n = order.src_size();
    std::vector<std::pair<int, int>> pairs;
    for (int a = 0; a < n; ++a)
        order.row(a).for_each([&](int b) { pairs.emplace_back(a, b); });
    return Poset(n, pairs, order.source());
}

Poset Poset::opposite() const {
    Poset q;
    q.n_ = n_;
    q.elements_ = elements_;
    q.up_ = dn_;
    q.dn_ = up_;
    return q;
}

Relation Poset::order_relation() const {
    Relation r(elements_, elements_);
    for (int a = 0; a < n_; ++a)
        mask_for_each(up_[a], [&](int b) { r.add(a, b); });
    return r;
}

std::vector<std::pair<int, int>> Poset::covers() const {
    std::vector<std::pair<int, int>> out;
    for (int a = 0; a < n_; ++a)
        mask_for_each(up_[a] & ~(std::uint64_t(1) << a), [&](int b) {
            std::uint64_t between =
                up_[a] & dn_[b] &
                ~(std::uint64_t(1) << a) & ~(std::uint64_t(1) << b);
            if (between == 0) out.emplace_back(a, b);
        });
    return out;
}

std::vector<std::uint64_t> Poset::lower_ideals() const {
    std::vector<std::uint64_t> out;
    if (n_ <= 20) {
        std::uint64_t total = std::uint64_t(1) << n_;
        for (std::uint64_t m = 0; m < total; ++m) {
            bool closed = true;
            mask_for_each(m, [&](int a) {
                if ((dn_[a] & ~m) != 0) closed = false;
            });
            if (closed) out.push_back(m);
        }
        return out;  // already ascending
    }
    // Depth-first over a linear extension: an element may be included
    // only when everything below it already is.
    std::vector<int> ext(n_);
    std::iota(ext.begin(), ext.end(), 0);
    std::stable_sort(ext.begin(), ext.end(), [&](int a, int b) {
        return __builtin_popcountll(dn_[a]) < __builtin_popcountll(dn_[b]);
    });
    std::function<void(int, std::uint64_t)> walk = [&](int i,
                                                       std::uint64_t cur) {
        if (i == n_) {
            out.push_back(cur);
            return;
        }
        walk(i + 1, cur);
        int e = ext[i];
        std::uint64_t bit = std::uint64_t(1) << e;
        if ((dn_[e] & ~(cur | bit)) == 0) walk(i + 1, cur | bit);
    };
    walk(0, 0);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::uint64_t> Poset::upper_ideals() const {
    std::vector<std::uint64_t> out = opposite().lower_ideals();
    return out;
}

std::vector<int> Poset::principal_positions(
    const std::vector<std::uint64_t>& ideals) const {
    std::vector<int> pos(n_);
    for (int e = 0; e < n_; ++e) {
        auto it = std::lower_bound(ideals.begin(), ideals.end(), dn_[e]);
        require(it != ideals.end() && *it == dn_[e],
                "principal ideal missing from the ideal list");
        pos[e] = (int)(it - ideals.begin());
    }
    return pos;
}

std::uint64_t Poset::upper_bounds(std::uint64_t A) const {
    std::uint64_t acc = universe();
    mask_for_each(A, [&](int a) { acc &= up_[a]; });
    return acc;
}

std::uint64_t Poset::lower_bounds(std::uint64_t A) const {
    std::uint64_t acc = universe();
    mask_for_each(A, [&](int a) { acc &= dn_[a]; });
    return acc;
}

long long Poset::mobius(int a, int b) const {
    if (!leq(a, b)) return 0;
    auto key = std::make_pair(a, b);
    auto it = mobius_memo_.find(key);
    if (it != mobius_memo_.end()) return it->second;
    long long v;
    if (a == b) {
        v = 1;
    } else {
        v = 0;
        mask_for_each(up_[a] & dn_[b] & ~(std::uint64_t(1) << b),
                      [&](int c) { v -= mobius(a, c); });
    }
    mobius_memo_[key] = v;
    return v;
}

namespace {

// Comparability signature used to prune isomorphism search.
std::vector<std::pair<int, int>> degree_signature(const Poset& P) {
    std::vector<std::pair<int, int>> sig(P.size());
    for (int i = 0; i < P.size(); ++i)
        sig[i] = {__builtin_popcountll(P.down_mask(i)),
                  __builtin_popcountll(P.up_mask(i))};
    return sig;
}

// Backtracking search for order isomorphisms P -> Q; collects every
// image vector (or stops after the first when `first_only`).
void iso_search(const Poset& P, const Poset& Q, bool first_only,
                std::vector<std::vector<int>>& found) {
    int n = P.size();
    auto sigP = degree_signature(P), sigQ = degree_signature(Q);
    std::vector<int> img(n, -1);
    std::vector<bool> used(n, false);
    std::function<bool(int)> place = [&](int i) -> bool {
        if (i == n) {
            found.push_back(img);
            return first_only;
        }
        for (int j = 0; j < n; ++j) {
            if (used[j] || sigP[i] != sigQ[j]) continue;
            bool okc = true;
            for (int k = 0; k < i && okc; ++k) {
                if (P.leq(i, k) != Q.leq(j, img[k]) ||
                    P.leq(k, i) != Q.leq(img[k], j))
                    okc = false;
            }
            if (!okc) continue;
            img[i] = j;
            used[j] = true;
            if (place(i + 1)) return true;
            used[j] = false;
            img[i] = -1;
        }
        return false;
    };
    place(0);
}

}  // namespace

std::vector<Permutation> Poset::automorphisms(int bound) const {
    check_input(n_ <= bound,
                "automorphism search limited to " + std::to_string(bound) +
                    " elements, got " + std::to_string(n_));
    std::vector<std::vector<int>> found;
    iso_search(*this, *this, false, found);
    std::vector<Permutation> out;
    out.reserve(found.size());
    for (auto& img : found) out.emplace_back(std::move(img));
    return out;
}

std::vector<Permutation> Poset::automorphisms_brute(int bound) const {
    check_input(n_ <= bound,
                "automorphism search limited to " + std::to_string(bound) +
                    " elements, got " + std::to_string(n_));
    std::vector<Permutation> out;
    for (const Permutation& p : all_permutations(n_)) {
        bool ok = true;
        for (int a = 0; a < n_ && ok; ++a)
            for (int b = 0; b < n_ && ok; ++b)
                if (leq(a, b) != leq(p(a), p(b))) ok = false;
        if (ok) out.push_back(p);
    }
    return out;
}

bool Poset::isomorphic(const Poset& other) const {
    if (n_ != other.n_) return false;
    check_input(n_ <= 12, "isomorphism search limited to 12 elements");
    std::vector<std::vector<int>> found;
    iso_search(*this, other, true, found);
    return !found.empty();
}

}  // namespace corfun
