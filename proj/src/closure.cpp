#include "corfun/closure.hpp"

#include <algorithm>

#include "corfun/errors.hpp"

namespace corfun {

std::uint64_t l_close(const Poset& P, std::uint64_t A) {
    return P.lower_bounds(P.upper_bounds(A));
}

std::uint64_t k_close(const Poset& P, std::uint64_t A) {
    std::uint64_t bar = l_close(P, A);
    int generator = -1;
    mask_for_each(bar, [&](int a) {
        if (generator < 0 && P.down_mask(a) == bar) generator = a;
    });
    if (generator >= 0 && ((A >> generator) & 1) == 0)
        return bar & ~(std::uint64_t(1) << generator);
    return bar;
}

void ClosureOperation::validate() const {
    std::vector<std::uint64_t> ideals = P.lower_ideals();
    std::vector<std::uint64_t> closed(ideals.size());
    for (std::size_t i = 0; i < ideals.size(); ++i) {
        std::uint64_t c = close(P, ideals[i]);
        check_input(std::binary_search(ideals.begin(), ideals.end(), c),
                    name + ": closure left the lower ideals");
        check_input((ideals[i] & ~c) == 0, name + ": closure not extensive");
        check_input(close(P, c) == c, name + ": closure not idempotent");
        closed[i] = c;
    }
    for (std::size_t i = 0; i < ideals.size(); ++i)
        for (std::size_t j = 0; j < ideals.size(); ++j)
            if ((ideals[i] & ~ideals[j]) == 0)
                check_input((closed[i] & ~closed[j]) == 0,
                            name + ": closure not monotone");
    for (int e = 0; e < P.size(); ++e)
        check_input(close(P, P.down_mask(e)) == P.down_mask(e),
                    name + ": closure moves a principal ideal");
}

void JoinMorphism::validate() const {
    int n = source.size();
    check_input((int)images.size() == n,
                "join morphism image count must match the source");
    for (int v : images)
        check_input(0 <= v && v < target.size(),
                    "join morphism image out of range");
    if (n <= 16) {
        for (std::uint64_t m = 0; m < (std::uint64_t(1) << n); ++m) {
            Bits sub(n);
            mask_for_each(m, [&](int i) { sub.set(i); });
            int lhs = images[source.join_set(sub)];
            int rhs = target.bottom();
            mask_for_each(m,
                          [&](int i) { rhs = target.join(rhs, images[i]); });
            check_input(lhs == rhs, "map does not preserve joins");
        }
    } else {
        check_input(images[source.bottom()] == target.bottom(),
                    "map does not preserve the empty join");
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                check_input(images[source.join(a, b)] ==
                                target.join(images[a], images[b]),
                            "map does not preserve joins");
    }
}

bool JoinMorphism::surjective() const {
    std::vector<bool> hit(target.size(), false);
    for (int v : images) hit[v] = true;
    return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
}

int JoinMorphism::adjoint(int t2) const {
    Bits below(source.size());
    for (int t1 = 0; t1 < source.size(); ++t1)
        if (target.leq(images[t1], t2)) below.set(t1);
    return source.join_set(below);
}

namespace {

// Projection from the ideal lattice of P onto a lattice generated by an
// embedded copy of P: an ideal goes to the join of its members' images.
JoinMorphism projection(const Lattice& ideal_T, const Lattice& T,
                        const std::vector<int>& embed) {
    std::vector<int> images(ideal_T.size());
    for (int i = 0; i < ideal_T.size(); ++i) {
        Bits members(T.size());
        mask_for_each(ideal_T.sets()[i],
                      [&](int e) { members.set(embed[e]); });
        images[i] = T.join_set(members);
    }
    JoinMorphism pi{ideal_T, T, std::move(images)};
    try {
        pi.validate();
    } catch (const validation_error& e) {
        throw invariant_error(std::string("ideal projection: ") + e.what());
    }
    require(pi.surjective(), "ideal projection must be surjective");
    return pi;
}

}  // namespace

QuotientLattice lattice_of_closed(const ClosureOperation& cl) {
    cl.validate();
    std::vector<std::uint64_t> ideals = cl.P.lower_ideals();
    std::vector<std::uint64_t> closed;
    for (std::uint64_t A : ideals) {
        std::uint64_t c = cl.close(cl.P, A);
        if (c == A) closed.push_back(c);
    }
    QuotientLattice q;
    q.M = mark(lattice_from_sets(closed));
    q.embed_P.resize(cl.P.size());
    for (int e = 0; e < cl.P.size(); ++e) {
        int idx = q.M.T.index_of_set(cl.P.down_mask(e));
        require(idx >= 0, "closed sets must contain the principal ideals");
        q.embed_P[e] = idx;
    }
    // The projection ideal -> closure, join-preserving by construction
    // of the quotient (join of closed sets = closure of their union).
    MarkedLattice ideal_M = ideal_lattice(cl.P);
    std::vector<int> images(ideal_M.T.size());
    for (int i = 0; i < ideal_M.T.size(); ++i) {
        int idx = q.M.T.index_of_set(cl.close(cl.P, ideal_M.T.sets()[i]));
        require(idx >= 0, "closure of an ideal must be closed");
        images[i] = idx;
    }
    q.pi = JoinMorphism{ideal_M.T, q.M.T, std::move(images)};
    try {
        q.pi.validate();
    } catch (const validation_error& e) {
        throw invariant_error(std::string("closure projection: ") + e.what());
    }
    require(q.pi.surjective(), "closure projection must be surjective");
    return q;
}

QuotientLattice L_of(const Poset& P) {
    return lattice_of_closed({P, l_close, "L"});
}

QuotientLattice K_of(const Poset& P) {
    return lattice_of_closed({P, k_close, "K"});
}

JoinMorphism pi_T(const MarkedLattice& M) {
    return projection(ideal_lattice(M.irr).T, M.T, M.embed);
}

std::vector<std::vector<int>> fibers(const JoinMorphism& f) {
    std::vector<std::vector<int>> out(f.target.size());
    for (int t = 0; t < f.source.size(); ++t)
        out[f.images[t]].push_back(t);
    return out;
}

std::vector<int> pi_fiber_greatest(const MarkedLattice& M) {
    MarkedLattice ideal_M = ideal_lattice(M.irr);
    JoinMorphism pi = pi_T(M);
    std::vector<int> out(M.T.size());
    for (int t = 0; t < M.T.size(); ++t) {
        std::uint64_t mask = 0;
        for (int e = 0; e < (int)M.embed.size(); ++e)
            if (M.T.leq(M.embed[e], t)) mask |= std::uint64_t(1) << e;
        int idx = ideal_M.T.index_of_set(mask);
        require(idx >= 0, "fiber: the below-set of t must be an ideal");
        require(pi.images[idx] == t, "fiber: greatest element maps wrong");
        out[t] = idx;
    }
    return out;
}

ComparisonMaps comparison_maps(const Lattice& T, const Poset& P,
                               const std::vector<int>& embed) {
    check_input((int)embed.size() == P.size(),
                "embedding size must match the poset");
    for (int v : embed)
        check_input(0 <= v && v < T.size(), "embedding out of range");
    for (int e = 0; e < P.size(); ++e)
        for (int f = 0; f < P.size(); ++f)
            check_input(P.leq(e, f) == T.leq(embed[e], embed[f]),
                        "embedding must be a full subposet");
    for (int t = 0; t < T.size(); ++t) {
        Bits below(T.size());
        for (int e = 0; e < P.size(); ++e)
            if (T.leq(embed[e], t)) below.set(embed[e]);
        check_input(T.join_set(below) == t,
                    "lattice not generated by the embedded poset");
    }

    ComparisonMaps cm;
    cm.L = L_of(P);
    cm.K = K_of(P);

    // phi(t): lower bounds in P of the embedded elements above t; this
    // is the l-closure of the ideal of embedded elements below t.
    std::vector<int> phi_images(T.size());
    std::vector<std::uint64_t> below_mask(T.size());
    for (int t = 0; t < T.size(); ++t) {
        std::uint64_t above = 0, below = 0;
        for (int e = 0; e < P.size(); ++e) {
            if (T.leq(t, embed[e])) above |= std::uint64_t(1) << e;
            if (T.leq(embed[e], t)) below |= std::uint64_t(1) << e;
        }
        below_mask[t] = below;
        std::uint64_t lb = P.lower_bounds(above);
        require(lb == l_close(P, below),
                "comparison map: the two descriptions of phi differ");
        int idx = cm.L.M.T.index_of_set(lb);
        require(idx >= 0, "comparison map: phi value is not l-closed");
        phi_images[t] = idx;
    }
    cm.phi = JoinMorphism{T, cm.L.M.T, std::move(phi_images)};
    try {
        cm.phi.validate();
    } catch (const validation_error& e) {
        throw invariant_error(std::string("phi: ") + e.what());
    }
    require(cm.phi.surjective(), "phi must be surjective");
    for (int e = 0; e < P.size(); ++e)
        require(cm.phi.images[embed[e]] == cm.L.embed_P[e],
                "phi must restrict to the identity on the poset");

    // Sandwich: composing phi with the projection from the ideal
    // lattice recovers the L-projection.
    JoinMorphism pi = projection(ideal_lattice(P).T, T, embed);
    for (int i = 0; i < pi.source.size(); ++i)
        require(cm.phi.images[pi.images[i]] == cm.L.pi.images[i],
                "phi after the projection must equal the L-projection");

    // psi exists only when the embedded image is exactly the
    // irreducibles of T.
    std::vector<int> sorted_embed = embed;
    std::sort(sorted_embed.begin(), sorted_embed.end());
    if (sorted_embed != T.irr()) {
        cm.psi_reason =
            "embedded image differs from the irreducibles of the lattice";
        return cm;
    }
    std::vector<int> psi_images(T.size());
    for (int t = 0; t < T.size(); ++t) {
        int idx = cm.K.M.T.index_of_set(k_close(P, below_mask[t]));
        require(idx >= 0, "comparison map: psi value is not k-closed");
        psi_images[t] = idx;
    }
    cm.psi = JoinMorphism{T, cm.K.M.T, std::move(psi_images)};
    try {
        cm.psi->validate();
    } catch (const validation_error& e) {
        throw invariant_error(std::string("psi: ") + e.what());
    }
    require(cm.psi->surjective(), "psi must be surjective");
    for (int e = 0; e < P.size(); ++e)
        require(cm.psi->images[embed[e]] == cm.K.embed_P[e],
                "psi must restrict to the identity on the poset");
    for (int i = 0; i < pi.source.size(); ++i)
        require(cm.psi->images[pi.images[i]] == cm.K.pi.images[i],
                "psi after the projection must equal the K-projection");
    return cm;
}

ComparisonMaps comparison_maps(const MarkedLattice& M) {
    return comparison_maps(M.T, M.irr, M.embed);
}

}  // namespace corfun
