#include "corfun/forest.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "corfun/errors.hpp"

namespace corfun {

Forest::Forest(int n_, std::vector<int> parent_)
    : n(n_), parent(std::move(parent_)) {
    check_input((int)parent.size() == n, "parent map size must match");
    for (int i = 0; i < n; ++i)
        check_input(parent[i] == -1 || (0 <= parent[i] && parent[i] < n &&
                                        parent[i] != i),
                    "parent must be another vertex or absent");
    for (int i = 0; i < n; ++i) {
        int steps = 0, v = i;
        while (parent[v] != -1) {
            v = parent[v];
            check_input(++steps <= n, "parent map has a cycle");
        }
    }
}

std::vector<int> Forest::roots() const {
    std::vector<int> out;
    for (int i = 0; i < n; ++i)
        if (parent[i] == -1) out.push_back(i);
    return out;
}

std::vector<int> Forest::leaves() const {
    std::vector<bool> has_child(n, false);
    for (int i = 0; i < n; ++i)
        if (parent[i] != -1) has_child[parent[i]] = true;
    std::vector<int> out;
    for (int i = 0; i < n; ++i)
        if (parent[i] != -1 && !has_child[i]) out.push_back(i);
    return out;
}

std::uint64_t Forest::leaf_mask() const {
    std::uint64_t m = 0;
    for (int x : leaves()) m |= std::uint64_t(1) << x;
    return m;
}

std::uint64_t Forest::nonroot_mask() const {
    std::uint64_t m = 0;
    for (int i = 0; i < n; ++i)
        if (parent[i] != -1) m |= std::uint64_t(1) << i;
    return m;
}

std::vector<int> Forest::geodesic(int x) const {
    check_input(0 <= x && x < n, "vertex out of range");
    std::vector<int> out{x};
    while (parent[out.back()] != -1) out.push_back(parent[out.back()]);
    return out;
}

namespace {

void check_vertex_mask(const Forest& F, std::uint64_t B) {
    check_input(F.n <= 64, "edge families limited to 64 vertices");
    check_input(F.n == 64 || (B >> F.n) == 0, "start set out of range");
}

}  // namespace

std::vector<std::uint64_t> s_family(const Forest& F, std::uint64_t B,
                                    bool ring) {
    check_vertex_mask(F, B);
    std::vector<int> verts = mask_to_list(B);
    // Per starting vertex, the k-edge geodesic prefixes as edge masks
    // (k = 0 allowed only without the ring constraint).
    std::vector<std::vector<std::uint64_t>> prefixes;
    for (int x : verts) {
        std::vector<int> geo = F.geodesic(x);
        std::vector<std::uint64_t> steps{0};
        std::uint64_t acc = 0;
        for (int k = 0; k + 1 < (int)geo.size(); ++k) {
            acc |= std::uint64_t(1) << geo[k];
            steps.push_back(acc);
        }
        std::vector<std::uint64_t> pre(steps.begin() + (ring ? 1 : 0),
                                       steps.end());
        prefixes.push_back(std::move(pre));
    }
    std::set<std::uint64_t> fam;
    std::function<void(std::size_t, std::uint64_t)> rec =
        [&](std::size_t i, std::uint64_t acc) {
            if (i == prefixes.size()) {
                fam.insert(acc);
                return;
            }
            for (std::uint64_t pre : prefixes[i]) rec(i + 1, acc | pre);
        };
    rec(0, 0);
    return std::vector<std::uint64_t>(fam.begin(), fam.end());
}

std::vector<std::uint64_t> s_family_predicate(const Forest& F,
                                              std::uint64_t B, bool ring) {
    check_vertex_mask(F, B);
    std::uint64_t edges = F.nonroot_mask();
    std::vector<int> children = mask_to_list(edges);
    std::vector<std::uint64_t> out;
    int m = (int)children.size();
    check_input(m <= 20, "edge set too large to enumerate");
    for (std::uint64_t pick = 0; pick < (std::uint64_t(1) << m); ++pick) {
        std::uint64_t A = 0;
        for (int i = 0; i < m; ++i)
            if ((pick >> i) & 1) A |= std::uint64_t(1) << children[i];
        bool good = true;
        mask_for_each(A, [&](int y) {
            if ((B >> y) & 1) return;
            // Some edge of A must end at y.
            bool fed = false;
            mask_for_each(A, [&](int w) {
                if (F.parent[w] == y) fed = true;
            });
            if (!fed) good = false;
        });
        if (good && ring)
            mask_for_each(B, [&](int x) {
                if (((A >> x) & 1) == 0) good = false;
            });
        if (good) out.push_back(A);
    }
    return out;
}

EndoMap tau_map(const Forest& F, std::uint64_t A) {
    EndoMap f(F.n);
    for (int x = 0; x < F.n; ++x)
        f[x] = ((A >> x) & 1) ? F.parent[x] : x;
    return f;
}

namespace {

bool leaves_only(const Forest& F, std::uint64_t B) {
    return (B & ~F.leaf_mask()) == 0;
}

}  // namespace

FormalMapSum v_sum(const Forest& F, std::uint64_t B) {
    check_vertex_mask(F, B);
    check_input(leaves_only(F, B), "start set must consist of leaves");
    FormalMapSum out;
    for (std::uint64_t A : s_family(F, B, false))
        out.add_term(tau_map(F, A),
                     __builtin_popcountll(A) % 2 ? -1 : 1);
    return out;
}

FormalMapSum u_sum(const Forest& F, std::uint64_t B) {
    check_vertex_mask(F, B);
    check_input(leaves_only(F, B), "start set must consist of leaves");
    int nb = __builtin_popcountll(B);
    FormalMapSum out;
    for (std::uint64_t A : s_family(F, B, true))
        out.add_term(tau_map(F, A),
                     (nb + __builtin_popcountll(A)) % 2 ? -1 : 1);
    return out;
}

GeodesicIdempotents geodesic_idempotents(const Forest& F,
                                         const std::vector<int>& B) {
    check_input(F.n <= 64, "edge families limited to 64 vertices");
    GeodesicIdempotents g;
    g.B = B;
    std::sort(g.B.begin(), g.B.end());
    g.B.erase(std::unique(g.B.begin(), g.B.end()), g.B.end());
    std::uint64_t mask = 0;
    for (int x : g.B) {
        check_input(0 <= x && x < F.n, "vertex out of range");
        mask |= std::uint64_t(1) << x;
    }
    check_input(leaves_only(F, mask),
                "start set must consist of leaves");
    for (int x : g.B) {
        std::uint64_t xm = std::uint64_t(1) << x;
        g.h_x.push_back(h_of(F.n, F.geodesic(x)));
        g.v_x.push_back(v_sum(F, xm));
        g.u_x.push_back(u_sum(F, xm));
    }
    g.v_B = v_sum(F, mask);
    g.u_B = u_sum(F, mask);
    return g;
}

std::vector<int> reduction_sequence(const Lattice& T, int a) {
    check_input(0 <= a && a < T.size(), "element out of range");
    const Bits& irrm = T.irr_mask();
    std::vector<int> seq{a};
    while (true) {
        int t = seq.back();
        int v = T.s(t);
        if (v == t) {
            // Stalled inside the irreducibles: splice in r_inf.
            require(irrm.test(t), "reduction stalled outside irreducibles");
            int b = T.r_inf(t);
            int r = -1;
            for (std::size_t i = 0; i < seq.size(); ++i) {
                bool strictly_below = T.leq(seq[i], b) && seq[i] != b;
                if (strictly_below) {
                    require((int)i == r + 1,
                            "reduction prefix below the splice point "
                            "must be contiguous");
                    r = (int)i;
                }
            }
            require(r >= 0, "reduction splice removes the whole sequence");
            seq.resize(r + 1);
            seq.push_back(b);
            break;
        }
        if (!irrm.test(v)) {
            seq.push_back(v);
            break;
        }
        seq.push_back(v);
    }
    require(seq.front() == a, "reduction sequence must start at a");
    require(seq.back() == T.r_inf(T.s_inf(a)),
            "reduction sequence must end at r_inf(s_inf(a))");
    int endpoint = seq.back();
    require(T.r_inf(T.s_inf(endpoint)) == endpoint,
            "reduction endpoint must be stable");
    for (std::size_t i = 0; i + 1 < seq.size(); ++i)
        require(T.leq(seq[i], seq[i + 1]) && seq[i] != seq[i + 1],
                "reduction sequence must be strictly increasing");
    for (std::size_t i = 1; i + 1 < seq.size(); ++i)
        require(irrm.test(seq[i]),
                "reduction sequence interior must be irreducible");
    return seq;
}

Forest graph_of_lattice(const Lattice& T) {
    std::vector<int> parent(T.size(), -1);
    for (int a : T.gamma_set()) {
        std::vector<int> seq = reduction_sequence(T, a);
        for (std::size_t i = 0; i + 1 < seq.size(); ++i) {
            int child = seq[i], par = seq[i + 1];
            if (parent[child] == -1) {
                parent[child] = par;
            } else {
                require(parent[child] == par,
                        "reduction sequences disagree on a parent");
            }
        }
    }
    Forest F(T.size(), std::move(parent));
    std::vector<int> gamma = T.gamma_set();
    require(F.leaves() == gamma,
            "graph leaves must be exactly the Gamma elements");
    return F;
}

FormalMapSum u_a_sum(const Lattice& T, int a) {
    return kappa(T.size(), reduction_sequence(T, a));
}

FormalMapSum u_T_sum(const Lattice& T) {
    std::vector<int> gamma = T.gamma_set();
    std::vector<FormalMapSum> parts;
    for (int a : gamma) parts.push_back(u_a_sum(T, a));
    for (std::size_t i = 0; i < parts.size(); ++i)
        for (std::size_t j = i + 1; j < parts.size(); ++j)
            require(sum_compose(parts[i], parts[j]) ==
                        sum_compose(parts[j], parts[i]),
                    "per-element idempotents must commute");
    FormalMapSum out = FormalMapSum::identity(T.size());
    for (const FormalMapSum& p : parts) out = sum_compose(out, p);
    return out;
}

Forest random_forest(std::mt19937& rng, int n) {
    check_input(n >= 1, "forest needs at least one vertex");
    std::vector<int> parent(n, -1);
    for (int i = 1; i < n; ++i) {
        std::uniform_int_distribution<int> pick(-1, i - 1);
        parent[i] = pick(rng);
    }
    return Forest(n, std::move(parent));
}

std::vector<Forest> all_forests(int n) {
    check_input(1 <= n && n <= 6, "forest enumeration limited to 6");
    std::vector<Forest> out;
    std::vector<int> parent(n, -1);
    std::function<void(int)> rec = [&](int i) {
        if (i == n) {
            // Cycle check without throwing.
            for (int v0 = 0; v0 < n; ++v0) {
                int steps = 0, v = v0;
                while (parent[v] != -1) {
                    v = parent[v];
                    if (++steps > n) return;
                }
            }
            out.emplace_back(n, parent);
            return;
        }
        for (int p = -1; p < n; ++p) {
            if (p == i) continue;
            parent[i] = p;
            rec(i + 1);
        }
        parent[i] = -1;
    };
    rec(0);
    return out;
}

}  // namespace corfun
