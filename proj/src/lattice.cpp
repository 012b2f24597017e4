#include "corfun/lattice.hpp"

#include <algorithm>
#include <set>

#include "corfun/errors.hpp"

namespace corfun {

Lattice::Lattice(std::vector<Bits> dn, std::vector<std::string> names)
    : n_((int)dn.size()), dn_(std::move(dn)), names_(std::move(names)) {
    check_input(n_ >= 1, "a lattice needs at least one element");
    check_input(n_ <= 1024, "lattice too large (limit 1024 elements)");
    if (names_.empty()) {
        names_.resize(n_);
        for (int i = 0; i < n_; ++i) names_[i] = std::to_string(i);
    }
    check_input((int)names_.size() == n_, "name count must match size");

    up_.assign(n_, Bits(n_));
    for (int b = 0; b < n_; ++b) {
        check_input(dn_[b].size() == n_, "down-set width must match size");
        check_input(dn_[b].test(b), "order must be reflexive");
        dn_[b].for_each([&](int a) { up_[a].set(b); });
    }
    for (int b = 0; b < n_; ++b)
        dn_[b].for_each([&](int a) {
            if (a != b && dn_[a].test(b))
                throw validation_error("order not antisymmetric: " +
                                       names_[a] + ", " + names_[b]);
            if (!dn_[a].subset_of(dn_[b]))
                throw validation_error("order not transitive below " +
                                       names_[b]);
        });

    for (int t = 0; t < n_; ++t) {
        if (up_[t].count() == n_) bot_ = t;
        if (dn_[t].count() == n_) top_ = t;
    }
    check_input(bot_ >= 0, "not a lattice: no bottom element");
    check_input(top_ >= 0, "not a lattice: no top element");

    joinT_.assign((std::size_t)n_ * n_, -1);
    meetT_.assign((std::size_t)n_ * n_, -1);
    for (int a = 0; a < n_; ++a)
        for (int b = a; b < n_; ++b) {
            Bits cand = up_[a] & up_[b];
            int least = -1;
            cand.for_each([&](int l) {
                if (cand.subset_of(up_[l])) {
                    if (least >= 0)
                        throw validation_error(
                            "not a lattice: no unique least upper bound "
                            "for (" + names_[a] + ", " + names_[b] + ")");
                    least = l;
                }
            });
            if (least < 0)
                throw validation_error(
                    "not a lattice: no least upper bound for (" + names_[a] +
                    ", " + names_[b] + ")");
            joinT_[(std::size_t)a * n_ + b] = least;
            joinT_[(std::size_t)b * n_ + a] = least;

            cand = dn_[a] & dn_[b];
            int greatest = -1;
            cand.for_each([&](int g) {
                if (cand.subset_of(dn_[g])) {
                    if (greatest >= 0)
                        throw validation_error(
                            "not a lattice: no unique greatest lower bound "
                            "for (" + names_[a] + ", " + names_[b] + ")");
                    greatest = g;
                }
            });
            if (greatest < 0)
                throw validation_error(
                    "not a lattice: no greatest lower bound for (" +
                    names_[a] + ", " + names_[b] + ")");
            meetT_[(std::size_t)a * n_ + b] = greatest;
            meetT_[(std::size_t)b * n_ + a] = greatest;
        }
}

int Lattice::join_set(const Bits& m) const {
    int acc = bot_;
    m.for_each([&](int t) { acc = join(acc, t); });
    return acc;
}

int Lattice::meet_set(const Bits& m) const {
    int acc = top_;
    m.for_each([&](int t) { acc = meet(acc, t); });
    return acc;
}

int Lattice::r(int t) const {
    Bits below = dn_[t];
    below.reset(t);
    return join_set(below);
}

const std::vector<int>& Lattice::irr() const {
    if (!irr_built_) {
        irr_.clear();
        irrm_ = Bits(n_);
        for (int t = 0; t < n_; ++t)
            if (r(t) != t) {
                irr_.push_back(t);
                irrm_.set(t);
            }
        irr_built_ = true;
    }
    return irr_;
}

const Bits& Lattice::irr_mask() const {
    irr();
    return irrm_;
}

int Lattice::s(int t) const {
    Bits above = up_[t] & irr_mask();
    above.reset(t);
    return meet_set(above);
}

int Lattice::r_inf(int t) const {
    int v = t;
    while (true) {
        int w = r(v);
        if (w == v) return v;
        v = w;
    }
}

int Lattice::s_inf(int t) const {
    int v = t;
    while (true) {
        int w = s(v);
        if (w == v) return v;
        v = w;
    }
}

std::vector<int> Lattice::meet_closure_irr() const {
    Bits in(n_);
    in.set(top_);
    for (int e : irr()) in.set(e);
    bool changed = true;
    while (changed) {
        changed = false;
        std::vector<int> cur = in.to_list();
        for (int a : cur)
            for (int b : cur) {
                int m = meet(a, b);
                if (!in.test(m)) {
                    in.set(m);
                    changed = true;
                }
            }
    }
    return in.to_list();
}

std::vector<int> Lattice::g_sharp() const {
    std::vector<int> out;
    for (int t = 0; t < n_; ++t)
        if (r_inf(s_inf(t)) == t) out.push_back(t);
    return out;
}

std::vector<int> Lattice::g_set() const {
    Bits in(n_);
    for (int e : irr()) in.set(e);
    for (int t : g_sharp()) in.set(t);
    return in.to_list();
}

std::vector<int> Lattice::gamma_set() const {
    Bits in(n_);
    for (int t : g_set()) in.set(t);
    std::vector<int> out;
    for (int t = 0; t < n_; ++t)
        if (!in.test(t)) out.push_back(t);
    return out;
}

std::vector<int> Lattice::bulbs() const {
    Bits meetE(n_);
    for (int t : meet_closure_irr()) meetE.set(t);
    std::vector<int> out;
    for (int t = 0; t < n_; ++t) {
        if (meetE.test(t)) continue;
        bool found = false;
        for (int e : irr())
            if (s(e) == e && r_inf(e) == t) {
                found = true;
                break;
            }
        if (found) out.push_back(t);
    }
    return out;
}

bool Lattice::is_distributive() const {
    for (int a = 0; a < n_; ++a)
        for (int b = 0; b < n_; ++b)
            for (int c = 0; c < n_; ++c)
                if (meet(a, join(b, c)) != join(meet(a, b), meet(a, c)))
                    return false;
    return true;
}

Poset Lattice::irr_poset() const {
    const std::vector<int>& E = irr();
    int ne = (int)E.size();
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < ne; ++i)
        for (int j = 0; j < ne; ++j)
            if (leq(E[i], E[j])) pairs.emplace_back(i, j);
    return Poset(ne, pairs);
}

Lattice Lattice::opposite() const {
    std::vector<std::string> names(n_);
    for (int i = 0; i < n_; ++i) names[i] = names_[i] + "^op";
    return Lattice(up_, std::move(names));
}

long long Lattice::mobius(int a, int b) const {
    if (!leq(a, b)) return 0;
    if (!mobius_built_) {
        mobius_table_.assign((std::size_t)n_ * n_, 0);
        // Fill increasing in interval size so every strictly smaller
        // value below b is ready.
        std::vector<int> order(n_);
        for (int i = 0; i < n_; ++i) order[i] = i;
        std::stable_sort(order.begin(), order.end(), [&](int x, int y) {
            return dn_[x].count() < dn_[y].count();
        });
        for (int aa = 0; aa < n_; ++aa)
            for (int bb : order) {
                if (!leq(aa, bb)) continue;
                long long v;
                if (aa == bb) {
                    v = 1;
                } else {
                    v = 0;
                    Bits interval = up_[aa] & dn_[bb];
                    interval.reset(bb);
                    interval.for_each([&](int c) {
                        v -= mobius_table_[(std::size_t)aa * n_ + c];
                    });
                }
                mobius_table_[(std::size_t)aa * n_ + bb] = v;
            }
        mobius_built_ = true;
    }
    return mobius_table_[(std::size_t)a * n_ + b];
}

int Lattice::index_of_set(std::uint64_t m) const {
    check_input(has_sets_, "lattice does not carry member sets");
    auto it = std::lower_bound(sets_.begin(), sets_.end(), m);
    if (it == sets_.end() || *it != m) return -1;
    return (int)(it - sets_.begin());
}

namespace {

std::string set_name(std::uint64_t m) {
    std::string s = "{";
    bool first = true;
    mask_for_each(m, [&](int i) {
        if (!first) s += ",";
        s += std::to_string(i);
        first = false;
    });
    return s + "}";
}

}  // namespace

Lattice lattice_from_sets(std::vector<std::uint64_t> sets,
                          std::vector<std::string> names) {
    std::sort(sets.begin(), sets.end());
    check_input(std::adjacent_find(sets.begin(), sets.end()) == sets.end(),
                "member sets must be distinct");
    int n = (int)sets.size();
    if (names.empty()) {
        names.resize(n);
        for (int i = 0; i < n; ++i) names[i] = set_name(sets[i]);
    }
    std::vector<Bits> dn(n, Bits(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if ((sets[j] & ~sets[i]) == 0) dn[i].set(j);
    Lattice T(std::move(dn), std::move(names));
    T.has_sets_ = true;
    T.sets_ = std::move(sets);
    return T;
}

Lattice lattice_from_cover(int n,
                           const std::vector<std::pair<int, int>>& covers,
                           std::vector<std::string> names) {
    Poset P(n, covers);
    std::vector<Bits> dn(n, Bits(n));
    for (int b = 0; b < n; ++b)
        mask_for_each(P.down_mask(b), [&](int a) { dn[b].set(a); });
    return Lattice(std::move(dn), std::move(names));
}

Lattice chain_lattice(int k) {
    check_input(k >= 1, "a chain needs at least one element");
    std::vector<Bits> dn(k, Bits(k));
    for (int i = 0; i < k; ++i)
        for (int j = 0; j <= i; ++j) dn[i].set(j);
    return Lattice(std::move(dn));
}

Lattice total_order(int n) {
    check_input(n >= 0, "total order height must be non-negative");
    return chain_lattice(n + 1);
}

Lattice subset_lattice(int n) {
    check_input(0 <= n && n <= 10, "subset lattice limited to 10 generators");
    std::vector<std::uint64_t> sets;
    sets.reserve(std::size_t(1) << n);
    for (std::uint64_t m = 0; m < (std::uint64_t(1) << n); ++m)
        sets.push_back(m);
    return lattice_from_sets(std::move(sets));
}

Lattice product_lattice(const Lattice& A, const Lattice& B) {
    int n = A.size() * B.size();
    std::vector<Bits> dn((std::size_t)n, Bits(n));
    std::vector<std::string> names(n);
    for (int a = 0; a < A.size(); ++a)
        for (int b = 0; b < B.size(); ++b) {
            int i = a * B.size() + b;
            names[i] = "(" + A.name(a) + "," + B.name(b) + ")";
            for (int a2 = 0; a2 < A.size(); ++a2)
                for (int b2 = 0; b2 < B.size(); ++b2)
                    if (A.leq(a2, a) && B.leq(b2, b))
                        dn[i].set(a2 * B.size() + b2);
        }
    return Lattice(std::move(dn), std::move(names));
}

Lattice build_lattice(const Poset& order) {
    int n = order.size();
    check_input(n >= 1, "a lattice needs at least one element");
    std::vector<Bits> dn(n, Bits(n));
    for (int b = 0; b < n; ++b)
        mask_for_each(order.down_mask(b), [&](int a) { dn[b].set(a); });
    std::vector<std::string> names;
    if (order.elements().size() == n) names = order.elements().labels();
    return Lattice(std::move(dn), std::move(names));
}

Lattice build_lattice(const Relation& order) {
    return build_lattice(Poset::from_relation(order));
}

MarkedLattice mark(Lattice T) {
    MarkedLattice M;
    M.irr = T.irr_poset();
    M.embed = T.irr();
    M.T = std::move(T);
    return M;
}

MarkedLattice ideal_lattice(const Poset& P) {
    std::vector<std::uint64_t> ideals = P.lower_ideals();
    Lattice T = lattice_from_sets(ideals);
    MarkedLattice M = mark(std::move(T));
    // The irreducibles of the ideal lattice are exactly the principal
    // ideals, and e -> down(e) is an isomorphism onto them.
    require((int)M.embed.size() == P.size(),
            "ideal lattice: irreducible count differs from the poset");
    std::vector<int> pos(P.size());
    for (int e = 0; e < P.size(); ++e) {
        int idx = M.T.index_of_set(P.down_mask(e));
        require(idx >= 0, "ideal lattice: principal ideal missing");
        auto it = std::lower_bound(M.embed.begin(), M.embed.end(), idx);
        require(it != M.embed.end() && *it == idx,
                "ideal lattice: a principal ideal is not irreducible");
        pos[e] = (int)(it - M.embed.begin());
    }
    for (int e = 0; e < P.size(); ++e)
        for (int f = 0; f < P.size(); ++f)
            require(P.leq(e, f) == M.irr.leq(pos[e], pos[f]),
                    "ideal lattice: principal map is not an isomorphism");
    return M;
}

GPartition g_partition(const Lattice& T) {
    GPartition g;
    g.meetE = T.meet_closure_irr();
    g.bulbs = T.bulbs();
    g.G = T.g_set();
    g.Gamma = T.gamma_set();
    // Cross-check the two characterizations of G.
    Bits uni(T.size());
    for (int t : g.meetE) uni.set(t);
    for (int t : g.bulbs) {
        require(!uni.test(t), "a bulb lies in the meet-closure");
        uni.set(t);
    }
    Bits gm(T.size());
    for (int t : g.G) gm.set(t);
    require(uni == gm, "G differs from meet-closure plus bulbs");
    for (int t : g.Gamma)
        require(!gm.test(t), "Gamma overlaps G");
    require((int)(g.G.size() + g.Gamma.size()) == T.size(),
            "G and Gamma do not partition the lattice");
    return g;
}

namespace {

MarkedLattice catalog_m3() {
    return mark(lattice_from_cover(
        5, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 4}, {3, 4}},
        {"0", "a", "b", "c", "1"}));
}

MarkedLattice catalog_n5() {
    return mark(lattice_from_cover(
        5, {{0, 1}, {1, 2}, {2, 4}, {0, 3}, {3, 4}},
        {"0", "a", "b", "c", "1"}));
}

MarkedLattice catalog_uniontrees6() {
    return mark(lattice_from_cover(
        6, {{0, 1}, {1, 2}, {1, 3}, {0, 4}, {2, 5}, {3, 5}, {4, 5}},
        {"0", "c", "a", "b", "d", "1"}));
}

Poset poset_v() { return Poset(3, {{0, 1}, {0, 2}}); }
Poset poset_n4() { return Poset(4, {{0, 2}, {1, 2}, {1, 3}}); }

bool parse_sized(const std::string& name, const std::string& prefix,
                 int& out) {
    if (name.size() <= prefix.size() ||
        name.compare(0, prefix.size(), prefix) != 0)
        return false;
    int v = 0;
    for (std::size_t i = prefix.size(); i < name.size(); ++i) {
        char c = name[i];
        if (c < '0' || c > '9') return false;
        v = v * 10 + (c - '0');
        if (v > 1000000) return false;
    }
    out = v;
    return true;
}

}  // namespace

MarkedLattice catalog_lattice(const std::string& name) {
    if (name == "lozenge") return ideal_lattice(Poset(2));
    if (name == "m3") return catalog_m3();
    if (name == "n5") return catalog_n5();
    if (name == "c") return ideal_lattice(poset_v());
    if (name == "cop") return mark(ideal_lattice(poset_v()).T.opposite());
    if (name == "p32")
        return mark(product_lattice(chain_lattice(3), chain_lattice(2)));
    if (name == "grid33")
        return mark(product_lattice(chain_lattice(3), chain_lattice(3)));
    if (name == "id_n4") return ideal_lattice(poset_n4());
    if (name == "uniontrees6") return catalog_uniontrees6();
    int k = 0;
    if (parse_sized(name, "chain", k)) {
        check_input(1 <= k && k <= 1023,
                    "chain height out of range in \"" + name + "\"");
        return mark(total_order(k));
    }
    if (parse_sized(name, "boolean", k)) {
        check_input(1 <= k && k <= 8,
                    "boolean size out of range in \"" + name + "\"");
        return ideal_lattice(Poset(k));
    }
    throw validation_error("unknown lattice name \"" + name + "\"");
}

std::vector<std::string> catalog_names() {
    return {"lozenge", "m3",     "n5",          "c",      "cop", "p32",
            "grid33",  "id_n4",  "uniontrees6", "chainN", "booleanN"};
}

}  // namespace corfun
