#include "corfun/fundamental_module.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "corfun/errors.hpp"
#include "corfun/functor.hpp"
#include "corfun/lattice.hpp"

namespace corfun {

namespace {

void check_perm(const std::vector<int>& sigma) {
    std::vector<char> seen(sigma.size(), 0);
    for (int v : sigma) {
        check_input(0 <= v && v < (int)sigma.size() && !seen[v],
                    "symbol index is not a permutation");
        seen[v] = 1;
    }
}

}  // namespace

PEfRElement PEfRElement::basis(const std::vector<int>& sigma) {
    check_perm(sigma);
    PEfRElement out;
    out.terms_[sigma] = 1;
    return out;
}

void PEfRElement::add_term(const std::vector<int>& sigma,
                           const mpz_class& c) {
    check_perm(sigma);
    if (c == 0) return;
    auto it = terms_.find(sigma);
    if (it == terms_.end()) {
        terms_.emplace(sigma, c);
        return;
    }
    it->second += c;
    if (it->second == 0) terms_.erase(it);
}

PEfRElement PEfRElement::operator+(const PEfRElement& o) const {
    PEfRElement out = *this;
    for (const auto& [sigma, c] : o.terms_) out.add_term(sigma, c);
    return out;
}

std::string PEfRElement::dump() const {
    std::ostringstream os;
    for (const auto& [sigma, c] : terms_) {
        os << c.get_str() << ": [";
        for (std::size_t i = 0; i < sigma.size(); ++i) {
            if (i) os << ", ";
            os << sigma[i];
        }
        os << "]\n";
    }
    return os.str();
}

PEfRElement act_PEfR(const Poset& P, const Relation& Q,
                     const PEfRElement& m) {
    int e = P.size();
    check_input(Q.src_size() == e && Q.tgt_size() == e,
                "correspondence must live on the elements of the poset");
    std::vector<std::pair<int, int>> qpairs = Q.pairs();
    std::vector<Permutation> perms = all_permutations(e);
    PEfRElement out;
    for (const auto& [sigma, c] : m.terms()) {
        check_input((int)sigma.size() == e,
                    "symbol size must match the poset");
        std::vector<int> sigma_inv(e);
        for (int i = 0; i < e; ++i) sigma_inv[sigma[i]] = i;
        const Permutation* found = nullptr;
        for (const Permutation& tau : perms) {
            bool covers = true;
            for (int col = 0; col < e && covers; ++col)
                covers = Q.has(tau(col), col);
            if (!covers) continue;
            Permutation tau_inv = tau.inverse();
            bool good = true;
            for (const auto& [a, b] : qpairs) {
                if (!P.leq(sigma_inv[tau_inv(a)], sigma_inv[b])) {
                    good = false;
                    break;
                }
            }
            if (!good) continue;
            require(found == nullptr,
                    "the witness permutation must be unique");
            found = &tau;
        }
        if (found == nullptr) continue;
        std::vector<int> image(e);
        for (int i = 0; i < e; ++i) image[i] = (*found)(sigma[i]);
        out.add_term(image, c);
    }
    return out;
}

namespace {

// The symbol tau sigma . f produced by the action, or the empty vector
// when the action kills the symbol.
std::vector<int> symbolic_one(const Poset& q, const Relation& Q,
                              const std::vector<int>& sigma) {
    PEfRElement r = act_PEfR(q, Q, PEfRElement::basis(sigma));
    if (r.is_zero()) return {};
    require(r.terms().size() == 1 && r.terms().begin()->second == 1,
            "basis symbols act to basis symbols");
    return r.terms().begin()->first;
}

// The explicit side: act on d_sigma = iota o sigma^{-1} inside the ideal
// lattice and read the result back as a permutation when possible.
std::vector<int> explicit_one(const MarkedLattice& M,
                              const std::vector<int>& emb,
                              const std::vector<std::pair<int, int>>& qpairs,
                              const std::vector<int>& sigma) {
    int e = (int)emb.size();
    std::vector<int> inv(e);
    for (int i = 0; i < e; ++i) inv[sigma[i]] = i;
    LatticeMap d_sigma(e);
    for (int i = 0; i < e; ++i) d_sigma[i] = emb[inv[i]];
    LatticeMap m = act_join(M.T, qpairs, d_sigma, e);
    std::vector<int> rho_inv;
    rho_inv.reserve(e);
    for (int v : m) {
        auto it = std::find(emb.begin(), emb.end(), v);
        if (it == emb.end()) return {};
        rho_inv.push_back((int)(it - emb.begin()));
    }
    std::vector<char> seen(e, 0);
    for (int v : rho_inv) {
        if (seen[v]) return {};
        seen[v] = 1;
    }
    std::vector<int> rho(e);
    for (int i = 0; i < e; ++i) rho[rho_inv[i]] = i;
    return rho;
}

}  // namespace

bool theta_transport_check(const Poset& P) {
    int e = P.size();
    check_input(e <= 5,
                "transport check limited to posets with at most 5 elements");
    MarkedLattice M = ideal_lattice(P);
    std::vector<int> emb(e);
    for (int i = 0; i < e; ++i) {
        emb[i] = M.T.index_of_set(P.down_mask(i));
        require(emb[i] >= 0, "principal ideals are elements of the lattice");
    }
    Poset q = P.opposite();
    std::vector<Permutation> perms = all_permutations(e);

    auto check_one = [&](std::uint64_t qmask, const Permutation& sig) {
        std::vector<std::pair<int, int>> qpairs;
        for (int a = 0; a < e; ++a)
            for (int b = 0; b < e; ++b)
                if ((qmask >> (a * e + b)) & 1) qpairs.emplace_back(a, b);
        Relation Q = Relation::from_pairs(e, e, qpairs);
        std::vector<int> sy = symbolic_one(q, Q, sig.images());
        std::vector<int> ex = explicit_one(M, emb, qpairs, sig.images());
        require(sy == ex, "transported action must match the symbols");
    };

    if (e <= 3) {
        for (std::uint64_t qmask = 0; qmask < (std::uint64_t(1) << (e * e));
             ++qmask)
            for (const Permutation& sig : perms) check_one(qmask, sig);
        return true;
    }
    std::mt19937 rng(20260819u);
    std::uint64_t qlimit = std::uint64_t(1) << (e * e);
    for (int trial = 0; trial < 20000; ++trial) {
        std::uint64_t qmask =
            ((std::uint64_t(rng()) << 32) | rng()) % qlimit;
        check_one(qmask, perms[rng() % perms.size()]);
    }
    return true;
}

}  // namespace corfun
