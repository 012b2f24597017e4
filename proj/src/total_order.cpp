#include "corfun/total_order.hpp"

#include <algorithm>
#include <functional>

#include "corfun/errors.hpp"

namespace corfun {

namespace {

void check_subset(int n, const std::vector<int>& A) {
    for (std::size_t i = 0; i < A.size(); ++i) {
        check_input(1 <= A[i] && A[i] <= n,
                    "subset entries must lie in 1..n");
        if (i) check_input(A[i - 1] < A[i], "subset must be ascending");
    }
}

// Ascending size-l subsets of {1..n}, lexicographic.
std::vector<std::vector<int>> subsets_of_size(int n, int l) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    std::function<void(int)> rec = [&](int from) {
        if ((int)cur.size() == l) {
            out.push_back(cur);
            return;
        }
        for (int v = from; v <= n; ++v) {
            cur.push_back(v);
            rec(v + 1);
            cur.pop_back();
        }
    };
    rec(1);
    return out;
}

std::vector<std::vector<int>> all_subsets(int n) {
    std::vector<std::vector<int>> out;
    for (int l = 0; l <= n; ++l)
        for (auto& A : subsets_of_size(n, l)) out.push_back(A);
    return out;
}

long long binom(int n, int k) {
    if (k < 0 || k > n) return 0;
    long long r = 1;
    for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
    return r;
}

}  // namespace

EndoMap s_map(int n, const std::vector<int>& A) {
    check_subset(n, A);
    EndoMap out(n + 1);
    for (int j = 0; j <= n; ++j) {
        int c = 0;
        for (int a : A)
            if (a <= j) ++c;
        out[j] = c;
    }
    return out;
}

EndoMap i_map(int n, const std::vector<int>& A, std::uint32_t Cmask) {
    check_subset(n, A);
    int l = (int)A.size();
    EndoMap out(l + 1);
    out[0] = 0;
    for (int j = 1; j <= l; ++j)
        out[j] = A[j - 1] - (int)((Cmask >> j) & 1);
    return out;
}

FormalMapSum i_sum(int n, const std::vector<int>& A) {
    int l = (int)A.size();
    FormalMapSum out;
    for (std::uint32_t c = 0; c < (1u << l); ++c) {
        std::uint32_t Cmask = c << 1;  // C is a subset of {1..l}
        int sign = __builtin_popcount(Cmask) % 2 ? -1 : 1;
        out.add_term(i_map(n, A, Cmask), sign);
    }
    return out;
}

FormalMapSum f_AB(int n, const std::vector<int>& A,
                  const std::vector<int>& B) {
    check_input(A.size() == B.size(),
                "f_AB requires subsets of equal size");
    return sum_compose(i_sum(n, A), FormalMapSum::single(s_map(n, B)));
}

FormalMapSum epsilon(int n) {
    std::vector<int> full(n);
    for (int i = 0; i < n; ++i) full[i] = i + 1;
    return f_AB(n, full, full);
}

FormalMapSum beta(int n, int l) {
    FormalMapSum out;
    for (auto& A : subsets_of_size(n, l)) out = out + f_AB(n, A, A);
    return out;
}

std::vector<EndoMap> join_endomaps(int n) {
    std::vector<EndoMap> out;
    EndoMap cur(n + 1, 0);
    std::function<void(int)> rec = [&](int j) {
        if (j == n + 1) {
            out.push_back(cur);
            return;
        }
        for (int v = cur[j - 1]; v <= n; ++v) {
            cur[j] = v;
            rec(j + 1);
        }
        cur[j] = 0;
    };
    rec(1);
    return out;
}

StructureReport structure_check(int n) {
    check_input(0 <= n && n <= 4, "structure check limited to n <= 4");
    StructureReport rep;
    rep.n = n;
    auto fail = [&](const std::string& msg) { rep.failures.push_back(msg); };

    std::vector<EndoMap> endos = join_endomaps(n);
    rep.endo_count = (long long)endos.size();
    long long expect = 0;
    for (int l = 0; l <= n; ++l) expect += binom(n, l) * binom(n, l);
    if (rep.endo_count != expect)
        fail("join-endomap count differs from the square-sum formula");

    std::vector<std::vector<int>> subs = all_subsets(n);

    // s_A i_A = epsilon_l, and s_B i_C = 0 whenever C is not inside B.
    for (auto& A : subs) {
        FormalMapSum lhs =
            sum_compose(FormalMapSum::single(s_map(n, A)), i_sum(n, A));
        if (!(lhs == epsilon((int)A.size())))
            fail("s_A i_A differs from epsilon");
    }
    for (auto& B : subs)
        for (auto& C : subs) {
            if (std::includes(B.begin(), B.end(), C.begin(), C.end()))
                continue;
            FormalMapSum lhs =
                sum_compose(FormalMapSum::single(s_map(n, B)), i_sum(n, C));
            if (!lhs.is_zero()) fail("s_B i_C nonzero outside B");
        }

    // The f-basis composition rule.
    for (auto& A : subs)
        for (auto& B : subsets_of_size(n, (int)A.size()))
            for (auto& C : subs)
                for (auto& D : subsets_of_size(n, (int)C.size())) {
                    FormalMapSum prod =
                        sum_compose(f_AB(n, A, B), f_AB(n, C, D));
                    FormalMapSum want =
                        (B == C) ? f_AB(n, A, D) : FormalMapSum::zero();
                    if (!(prod == want)) {
                        fail("f-composition rule broken");
                        goto f_done;
                    }
                }
f_done:;

    // The standard basis i_{A,empty} s_B enumerates the join-endomaps.
    {
        std::vector<EndoMap> basis;
        for (auto& A : subs)
            for (auto& B : subsets_of_size(n, (int)A.size())) {
                FormalMapSum phi = sum_compose(
                    FormalMapSum::single(i_map(n, A, 0)),
                    FormalMapSum::single(s_map(n, B)));
                if (phi.term_count() != 1) {
                    fail("standard basis element is not a single map");
                    continue;
                }
                basis.push_back(phi.terms().begin()->first);
            }
        std::vector<EndoMap> sorted_basis = basis, sorted_endos = endos;
        std::sort(sorted_basis.begin(), sorted_basis.end());
        std::sort(sorted_endos.begin(), sorted_endos.end());
        if (std::adjacent_find(sorted_basis.begin(), sorted_basis.end()) !=
            sorted_basis.end())
            fail("standard basis elements collide");
        if (sorted_basis != sorted_endos)
            fail("standard basis differs from the join-endomaps");
    }

    // beta_l are orthogonal central idempotents summing to the identity.
    {
        std::vector<FormalMapSum> betas;
        for (int l = 0; l <= n; ++l) betas.push_back(beta(n, l));
        FormalMapSum total;
        for (auto& b : betas) total = total + b;
        if (!(total == FormalMapSum::identity(n + 1)))
            fail("betas do not sum to the identity");
        for (int l = 0; l <= n; ++l)
            for (int m = 0; m <= n; ++m) {
                FormalMapSum prod = sum_compose(betas[l], betas[m]);
                FormalMapSum want =
                    (l == m) ? betas[l] : FormalMapSum::zero();
                if (!(prod == want)) fail("betas are not orthogonal");
            }
        for (auto& b : betas)
            for (auto& g : endos) {
                FormalMapSum gs = FormalMapSum::single(g);
                if (!(sum_compose(b, gs) == sum_compose(gs, b)))
                    fail("beta is not central");
            }
    }

    rep.ok = rep.failures.empty();
    return rep;
}

std::vector<std::vector<int>> chains_U(const Lattice& T, int n) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur(n + 1);
    std::function<void(int)> rec = [&](int j) {
        if (j == n + 1) {
            if (cur[n] == T.top()) out.push_back(cur);
            return;
        }
        for (int v = 0; v < T.size(); ++v) {
            if (j > 0 && !T.leq(cur[j - 1], v)) continue;
            cur[j] = v;
            rec(j + 1);
        }
    };
    rec(0);
    return out;
}

std::vector<std::vector<int>> chains_V(const Lattice& T, int n) {
    std::vector<std::vector<int>> out;
    for (auto& u : chains_U(T, n)) {
        bool strict = true;
        for (int j = 0; j + 1 <= n && strict; ++j)
            if (u[j] == u[j + 1]) strict = false;
        if (strict) out.push_back(u);
    }
    return out;
}

long long chains_count(const Lattice& T, int n) {
    // Strictly increasing chains of n+1 elements ending at the top,
    // counted by dynamic programming over the order.
    std::vector<std::vector<long long>> cnt(
        n + 1, std::vector<long long>(T.size(), 0));
    for (int t = 0; t < T.size(); ++t) cnt[0][t] = 1;
    for (int j = 1; j <= n; ++j)
        for (int t = 0; t < T.size(); ++t) {
            long long acc = 0;
            T.down(t).for_each([&](int s) {
                if (s != t) acc += cnt[j - 1][s];
            });
            cnt[j][t] = acc;
        }
    return cnt[n][T.top()];
}

EndoMap u_check(const Lattice& T, const std::vector<int>& u) {
    int n = (int)u.size() - 1;
    check_input(n >= 0 && u[n] == T.top(), "chain must end at the top");
    for (int j = 0; j + 1 <= n; ++j)
        check_input(T.leq(u[j], u[j + 1]), "chain must be increasing");
    EndoMap phi(T.size());
    for (int t = 0; t < T.size(); ++t) {
        int j = 0;
        while (!T.leq(t, u[j])) ++j;
        phi[t] = j;
    }
    return phi;
}

std::vector<int> u_hat(const Lattice& T, const EndoMap& phi, int n) {
    check_input((int)phi.size() == T.size(),
                "map domain must match the lattice");
    std::vector<int> u(n + 1);
    for (int j = 0; j <= n; ++j) {
        Bits below(T.size());
        for (int t = 0; t < T.size(); ++t)
            if (phi[t] <= j) below.set(t);
        u[j] = T.join_set(below);
    }
    return u;
}

bool epsilon_detects(const Lattice& T, const std::vector<int>& u, int n) {
    EndoMap phi = u_check(T, u);
    FormalMapSum composed =
        sum_compose(epsilon(n), FormalMapSum::single(phi));
    return !composed.is_zero();
}

}  // namespace corfun
