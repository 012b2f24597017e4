#include "corfun/functor.hpp"

#include <algorithm>
#include <map>

#include "corfun/errors.hpp"
#include "corfun/forest.hpp"

namespace corfun {

namespace {

void check_map_into(const Lattice& T, const LatticeMap& phi,
                    const char* what) {
    for (int v : phi)
        check_input(0 <= v && v < T.size(),
                    std::string(what) + " has a value outside the lattice");
}

void check_yx_pairs(const std::vector<std::pair<int, int>>& S, int ysize,
                    int xsize) {
    for (const auto& [y, x] : S) {
        check_input(0 <= y && y < ysize,
                    "correspondence pair: target index out of range");
        check_input(0 <= x && x < xsize,
                    "correspondence pair: source index out of range");
    }
}

}  // namespace

std::vector<LatticeMap> all_maps(int n_values, int x) {
    check_input(n_values >= 0 && x >= 0, "map enumeration needs sizes >= 0");
    long long count = checked_power(n_values, x, "map enumeration");
    std::vector<LatticeMap> out;
    if (count == 0) return out;
    out.reserve((std::size_t)count);
    LatticeMap cur(x, 0);
    while (true) {
        out.push_back(cur);
        int k = x - 1;
        while (k >= 0 && cur[k] == n_values - 1) cur[k--] = 0;
        if (k < 0) break;
        ++cur[k];
    }
    return out;
}

std::vector<std::vector<int>> index_tuples(int base, int x) {
    return all_maps(base, x);
}

LatticeMap act_join(const Lattice& T,
                    const std::vector<std::pair<int, int>>& S,
                    const LatticeMap& phi, int ysize) {
    check_input(ysize >= 0, "target size must be >= 0");
    check_map_into(T, phi, "map");
    check_yx_pairs(S, ysize, (int)phi.size());
    LatticeMap out(ysize, T.bottom());
    for (const auto& [y, x] : S) out[y] = T.join(out[y], phi[x]);
    return out;
}

LatticeMap act_join(const Lattice& T, const Relation& S,
                    const LatticeMap& phi) {
    check_input(S.src_size() == (int)phi.size(),
                "correspondence source does not match the map domain");
    check_map_into(T, phi, "map");
    LatticeMap out(S.tgt_size(), T.bottom());
    for (int y = 0; y < S.tgt_size(); ++y)
        S.row(y).for_each([&](int x) { out[y] = T.join(out[y], phi[x]); });
    return out;
}

MapVector act(const Lattice& T, const Relation& S, const MapVector& v) {
    MapVector out;
    for (const auto& [term, c] : v.terms())
        out.add_term(act_join(T, S, term), c);
    return out;
}

Relation gamma_of(const MarkedLattice& M, const LatticeMap& phi) {
    check_map_into(M.T, phi, "map");
    int ne = (int)M.embed.size();
    Relation S(ne, (int)phi.size());
    for (int x = 0; x < (int)phi.size(); ++x)
        for (int e = 0; e < ne; ++e)
            if (M.T.leq(M.embed[e], phi[x])) S.add(x, e);
    return S;
}

LatticeMap gamma_inv(const MarkedLattice& M, const Relation& S) {
    int ne = (int)M.embed.size();
    check_input(S.src_size() == ne,
                "correspondence source must be the irreducibles");
    Relation below = opposite(M.irr.order_relation());  // (f, e): e <= f
    check_input(compose(S, below) == S,
                "rows of the correspondence must be lower ideals of the "
                "irreducibles");
    LatticeMap phi(S.tgt_size(), M.T.bottom());
    for (int x = 0; x < S.tgt_size(); ++x)
        S.row(x).for_each(
            [&](int e) { phi[x] = M.T.join(phi[x], M.embed[e]); });
    check_input(gamma_of(M, phi) == S,
                "correspondence is not the encoding of any map (is the "
                "lattice the full ideal lattice?)");
    return phi;
}

VdashContext::VdashContext(const MarkedLattice& M_) : M(M_), P(M_.irr) {
    ne = (int)M.embed.size();
    check_input(ne <= 8, "linked-pair conditions limited to 8 irreducibles");
    upsets = P.upper_ideals();
    upsetE.resize(ne);
    for (int e = 0; e < ne; ++e) upsetE[e] = P.up_mask(e);
    rop = 0;
    for (int e = 0; e < ne; ++e)
        for (int f = 0; f < ne; ++f)
            if (P.leq(f, e)) rop |= std::uint64_t(1) << (e * ne + f);
}

std::uint64_t VdashContext::gamma_product(
    const std::vector<std::uint64_t>& psi, const LatticeMap& phi) const {
    check_input(psi.size() == phi.size(),
                "psi and phi must share a domain");
    std::uint64_t out = 0;
    for (int x = 0; x < (int)phi.size(); ++x) {
        std::uint64_t frow = 0;
        for (int f = 0; f < ne; ++f)
            if (M.T.leq(M.embed[f], phi[x])) frow |= std::uint64_t(1) << f;
        for (int e = 0; e < ne; ++e)
            if ((psi[x] >> e) & 1) out |= frow << (e * ne);
    }
    return out;
}

bool VdashContext::cond_a(const std::vector<std::uint64_t>& psi,
                          const LatticeMap& phi) const {
    for (int e = 0; e < ne; ++e) {
        int t = M.T.bottom();
        for (int x = 0; x < (int)phi.size(); ++x)
            if ((psi[x] >> e) & 1) t = M.T.join(t, phi[x]);
        if (t != M.embed[e]) return false;
    }
    return true;
}

bool VdashContext::cond_b(const std::vector<std::uint64_t>& psi,
                          const LatticeMap& phi) const {
    std::uint64_t U = gamma_product(psi, phi);
    for (int e = 0; e < ne; ++e) {
        int t = M.T.bottom();
        for (int f = 0; f < ne; ++f)
            if ((U >> (e * ne + f)) & 1) t = M.T.join(t, M.embed[f]);
        if (t != M.embed[e]) return false;
    }
    return true;
}

bool VdashContext::cond_c(const std::vector<std::uint64_t>& psi,
                          const LatticeMap& phi) const {
    std::uint64_t U = gamma_product(psi, phi);
    for (int e = 0; e < ne; ++e)
        if (!((U >> (e * ne + e)) & 1)) return false;
    return (U & ~rop) == 0;
}

bool VdashContext::cond_d(const std::vector<std::uint64_t>& psi,
                          const LatticeMap& phi) const {
    return gamma_product(psi, phi) == rop;
}

bool VdashContext::cond_e(const std::vector<std::uint64_t>& psi,
                          const LatticeMap& phi) const {
    for (int x = 0; x < (int)phi.size(); ++x) {
        Bits above(M.T.size());
        for (int e = 0; e < ne; ++e)
            if ((psi[x] >> e) & 1) above.set(M.embed[e]);
        if (!M.T.leq(phi[x], M.T.meet_set(above))) return false;
    }
    for (int e = 0; e < ne; ++e) {
        bool found = false;
        for (int x = 0; x < (int)phi.size() && !found; ++x)
            found = phi[x] == M.embed[e] && psi[x] == upsetE[e];
        if (!found) return false;
    }
    return true;
}

bool VdashContext::cond_f(const std::vector<std::uint64_t>& psi,
                          const LatticeMap& phi) const {
    for (int t = 0; t < M.T.size(); ++t) {
        std::uint64_t u = 0;
        for (int x = 0; x < (int)phi.size(); ++x)
            if (phi[x] == t) u |= psi[x];
        std::uint64_t allowed = 0;
        for (int e = 0; e < ne; ++e)
            if (M.T.leq(t, M.embed[e])) allowed |= std::uint64_t(1) << e;
        if (u & ~allowed) return false;
    }
    for (int e = 0; e < ne; ++e) {
        std::uint64_t u = 0;
        for (int x = 0; x < (int)phi.size(); ++x)
            if (phi[x] == M.embed[e]) u |= psi[x];
        if (u != upsetE[e]) return false;
    }
    return true;
}

bool vdash(const VdashContext& ctx, const std::vector<std::uint64_t>& psi,
           const LatticeMap& phi, bool debug) {
    bool d = ctx.cond_d(psi, phi);
    if (debug) {
        bool a = ctx.cond_a(psi, phi), b = ctx.cond_b(psi, phi);
        bool c = ctx.cond_c(psi, phi), e = ctx.cond_e(psi, phi);
        bool f = ctx.cond_f(psi, phi);
        require(a == d && b == d && c == d && e == d && f == d,
                "the linked-pair conditions must agree");
    }
    return d;
}

MatrixN matrix_N(const MarkedLattice& M, int x) {
    check_input(x >= 0, "matrix N needs |X| >= 0");
    VdashContext ctx(M);
    long long nr = checked_power((long long)ctx.upsets.size(), x,
                                 "upper-ideal tuples");
    long long nc = checked_power(M.T.size(), x, "map enumeration");
    if (nr > 0 && nc > budget_limit() / nr)
        throw budget_error("linked-pair matrix exceeds the work budget");
    MatrixN out;
    std::vector<std::vector<int>> ridx =
        index_tuples((int)ctx.upsets.size(), x);
    out.row_psi.reserve(ridx.size());
    for (const auto& tup : ridx) {
        std::vector<std::uint64_t> psi(x);
        for (int k = 0; k < x; ++k) psi[k] = ctx.upsets[tup[k]];
        out.row_psi.push_back(std::move(psi));
    }
    out.col_phi = all_maps(M.T.size(), x);
    out.N = IntegerMatrix((int)out.row_psi.size(), (int)out.col_phi.size());
    for (int i = 0; i < (int)out.row_psi.size(); ++i)
        for (int j = 0; j < (int)out.col_phi.size(); ++j)
            if (ctx.cond_d(out.row_psi[i], out.col_phi[j]))
                out.N.at(i, j) = 1;
    return out;
}

mpz_class hit_count(int x, int e, long long g) {
    check_input(x >= 0 && e >= 0 && g >= e,
                "hitting count needs x >= 0 and 0 <= e <= g");
    mpz_class total = 0;
    for (int i = 0; i <= e; ++i) {
        mpz_class binom, power;
        mpz_bin_uiui(binom.get_mpz_t(), e, i);
        mpz_class base((long)(g - i));
        mpz_pow_ui(power.get_mpz_t(), base.get_mpz_t(), x);
        total += (i % 2 ? -binom : binom) * power;
    }
    return total;
}

mpz_class surj_count(int x, int e) {
    check_input(x >= 0 && e >= 0, "surjection count needs x, e >= 0");
    mpz_class total = 0;
    for (int j = 0; j <= e; ++j) {
        mpz_class binom, power;
        mpz_bin_uiui(binom.get_mpz_t(), e, j);
        mpz_class base = e - j;
        mpz_pow_ui(power.get_mpz_t(), base.get_mpz_t(), x);
        total += (j % 2 ? -binom : binom) * power;
    }
    return total;
}

std::pair<int, long long> poset_eg(const Poset& P) {
    MarkedLattice M = ideal_lattice(P);
    return {(int)M.T.irr().size(), (long long)M.T.g_set().size()};
}

mpz_class rank_formula(const Poset& P, int x) {
    auto [e, g] = poset_eg(P);
    return hit_count(x, e, g);
}

std::vector<LatticeMap> basis_BX(const MarkedLattice& M, int x) {
    Bits gmask(M.T.size());
    for (int t : M.T.g_set()) gmask.set(t);
    std::vector<LatticeMap> out;
    for (const LatticeMap& phi : all_maps(M.T.size(), x)) {
        Bits image(M.T.size());
        for (int v : phi) image.set(v);
        if (!image.subset_of(gmask)) continue;
        bool hits = true;
        for (int t : M.embed)
            if (!image.test(t)) {
                hits = false;
                break;
            }
        if (hits) out.push_back(phi);
    }
    return out;
}

MapVector project_HT(const MarkedLattice& M, const MapVector& v) {
    MapVector out;
    for (const auto& [term, c] : v.terms()) {
        Bits image(M.T.size());
        for (int t : term) {
            check_input(0 <= t && t < M.T.size(),
                        "term has a value outside the lattice");
            image.set(t);
        }
        bool hits = true;
        for (int t : M.embed)
            if (!image.test(t)) {
                hits = false;
                break;
            }
        if (hits) out.add_term(term, c);
    }
    return out;
}

MapVector star(const Lattice& T, const LatticeMap& phi) {
    check_map_into(T, phi, "map");
    int x = (int)phi.size();
    std::vector<std::vector<int>> choices(x);
    long long count = 1;
    for (int k = 0; k < x; ++k) {
        choices[k] = T.down(phi[k]).to_list();
        count *= (long long)choices[k].size();
        if (count > budget_limit())
            throw budget_error("star expansion exceeds the work budget");
    }
    MapVector out;
    LatticeMap rho(x);
    std::vector<int> pos(x, 0);
    while (true) {
        mpz_class coeff = 1;
        for (int k = 0; k < x && coeff != 0; ++k) {
            rho[k] = choices[k][pos[k]];
            coeff *= mpz_class((long)T.mobius(rho[k], phi[k]));
        }
        if (coeff != 0) out.add_term(rho, coeff);
        int k = x - 1;
        while (k >= 0 && pos[k] + 1 == (int)choices[k].size()) pos[k--] = 0;
        if (k < 0) break;
        ++pos[k];
    }
    return out;
}

mpz_class pairing(const Lattice& T, const LatticeMap& lam,
                  const MapVector& v) {
    check_map_into(T, lam, "map");
    mpz_class total = 0;
    for (const auto& [term, c] : v.terms()) {
        check_input(term.size() == lam.size(),
                    "pairing needs a common domain");
        bool leq = true;
        for (int k = 0; k < (int)lam.size() && leq; ++k)
            leq = T.leq(lam[k], term[k]);
        if (leq) total += c;
    }
    return total;
}

MapVector gamma_T(const MarkedLattice& M) {
    int ne = (int)M.embed.size();
    checked_power(2, ne, "eta subsets");
    MapVector out;
    LatticeMap eta(ne);
    for (std::uint64_t A = 0; A < (std::uint64_t(1) << ne); ++A) {
        for (int e = 0; e < ne; ++e)
            eta[e] = (A >> e) & 1 ? M.T.r(M.embed[e]) : M.embed[e];
        int bitsset = 0;
        for (int e = 0; e < ne; ++e) bitsset += (A >> e) & 1;
        out.add_term(eta, bitsset % 2 ? -1 : 1);
    }
    return out;
}

LatticeMap meet_act(const Lattice& T,
                    const std::vector<std::pair<int, int>>& Q,
                    const LatticeMap& psi, int ysize) {
    check_input(ysize >= 0, "target size must be >= 0");
    check_map_into(T, psi, "map");
    check_yx_pairs(Q, ysize, (int)psi.size());
    LatticeMap out(ysize, T.top());
    for (const auto& [y, x] : Q) out[y] = T.meet(out[y], psi[x]);
    return out;
}

MapVector meet_act(const Lattice& T,
                   const std::vector<std::pair<int, int>>& Q,
                   const MapVector& v, int ysize) {
    MapVector out;
    for (const auto& [term, c] : v.terms())
        out.add_term(meet_act(T, Q, term, ysize), c);
    return out;
}

int span_rank_gamma(const MarkedLattice& M, int x) {
    check_input(x >= 0, "span rank needs |X| >= 0");
    int ne = (int)M.embed.size();
    checked_power(2, ne, "ideal enumeration");
    check_input(M.T.has_sets() &&
                    M.T.size() == (int)M.irr.lower_ideals().size(),
                "the span of the gamma translates needs the full lattice "
                "of lower ideals");
    long long nrows = checked_power(2, x * ne, "gamma translates");
    long long ncols = checked_power(M.T.size(), x, "map enumeration");
    if (nrows > 0 && ncols > budget_limit() / nrows)
        throw budget_error("gamma-span matrix exceeds the work budget");
    MapVector gam = gamma_T(M);
    int n = M.T.size();
    IntegerMatrix rows((int)nrows, (int)ncols);
    for (long long smask = 0; smask < nrows; ++smask) {
        std::vector<std::pair<int, int>> S;
        for (int xx = 0; xx < x; ++xx)
            for (int e = 0; e < ne; ++e)
                if ((smask >> (xx * ne + e)) & 1) S.emplace_back(xx, e);
        MapVector acted = meet_act(M.T, S, gam, x);
        for (const auto& [term, c] : acted.terms()) {
            long long col = 0;
            for (int k = 0; k < x; ++k) col = col * n + term[k];
            rows.at((int)smask, (int)col) += c;
        }
    }
    return rank(rows);
}

int span_rank_gamma(const Poset& P, int x) {
    return span_rank_gamma(ideal_lattice(P), x);
}

IntegerMatrix pairing_matrix(const Lattice& T, int x) {
    std::vector<LatticeMap> maps = all_maps(T.size(), x);
    long long cells = (long long)maps.size();
    if (cells > 0 && cells > budget_limit() / cells)
        throw budget_error("pairing matrix exceeds the work budget");
    IntegerMatrix out((int)maps.size(), (int)maps.size());
    for (int i = 0; i < (int)maps.size(); ++i)
        for (int j = 0; j < (int)maps.size(); ++j) {
            bool leq = true;
            for (int k = 0; k < x && leq; ++k)
                leq = T.leq(maps[i][k], maps[j][k]);
            if (leq) out.at(i, j) = 1;
        }
    return out;
}

namespace {

// u_T composed with the map phi, reduced modulo maps missing part of E.
// The coordinates land in the span of the basis when phi has been acted
// on by a correspondence; scatter them over the given basis index.
std::vector<mpz_class> reduce_to_basis(
    const MarkedLattice& M, const FormalMapSum& uT, const LatticeMap& phi,
    const std::map<LatticeMap, int>& bidx) {
    MapVector red = project_HT(M, compose_with_map(uT, phi));
    std::vector<mpz_class> col(bidx.size());
    for (const auto& [term, c] : red.terms()) {
        auto it = bidx.find(term);
        require(it != bidx.end(),
                "reduced action leaves the span of the basis");
        col[it->second] += c;
    }
    return col;
}

}  // namespace

FunctorAction fundamental_action(const MarkedLattice& M, const Relation& U) {
    FunctorAction out;
    out.basis_X = basis_BX(M, U.src_size());
    out.basis_Y = basis_BX(M, U.tgt_size());
    FormalMapSum uT = u_T_sum(M.T);
    std::map<LatticeMap, int> bidx;
    for (int i = 0; i < (int)out.basis_Y.size(); ++i)
        bidx[out.basis_Y[i]] = i;
    out.mat = IntegerMatrix((int)out.basis_Y.size(), (int)out.basis_X.size());
    for (int j = 0; j < (int)out.basis_X.size(); ++j) {
        LatticeMap xi = act_join(M.T, U, out.basis_X[j]);
        std::vector<mpz_class> col = reduce_to_basis(M, uT, xi, bidx);
        for (int i = 0; i < (int)out.basis_Y.size(); ++i)
            out.mat.at(i, j) = col[i];
    }
    return out;
}

std::vector<mpz_class> fundamental_action_on(const MarkedLattice& M,
                                             const Relation& U,
                                             const LatticeMap& phi) {
    check_input((int)phi.size() == U.src_size(),
                "map domain must match the correspondence source");
    std::vector<LatticeMap> bx = basis_BX(M, U.src_size());
    check_input(std::find(bx.begin(), bx.end(), phi) != bx.end(),
                "map does not belong to the basis at X");
    std::vector<LatticeMap> by = basis_BX(M, U.tgt_size());
    std::map<LatticeMap, int> bidx;
    for (int i = 0; i < (int)by.size(); ++i) bidx[by[i]] = i;
    FormalMapSum uT = u_T_sum(M.T);
    LatticeMap xi = act_join(M.T, U, phi);
    return reduce_to_basis(M, uT, xi, bidx);
}

mpz_class dim_simple(const Poset& P, int x, const mpz_class& dimV,
                     long long autOrder) {
    check_input(dimV > 0 && autOrder > 0,
                "simple dimension needs dimV > 0 and a positive group "
                "order");
    if (P.size() <= 8) {
        long long real = (long long)P.automorphisms().size();
        check_input(real == autOrder,
                    "claimed automorphism order does not match the poset");
    }
    mpz_class num = dimV * rank_formula(P.opposite(), x);
    mpz_class q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(),
                mpz_class((long)autOrder).get_mpz_t());
    require(r == 0, "simple dimension must divide exactly");
    return q;
}

}  // namespace corfun
