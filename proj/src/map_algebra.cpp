#include "corfun/map_algebra.hpp"

#include <numeric>
#include <sstream>

#include "corfun/errors.hpp"

namespace corfun {

FormalMapSum FormalMapSum::identity(int n) {
    EndoMap id(n);
    std::iota(id.begin(), id.end(), 0);
    return single(std::move(id));
}

FormalMapSum FormalMapSum::single(EndoMap f, mpz_class c) {
    FormalMapSum out;
    out.add_term(f, c);
    return out;
}

void FormalMapSum::add_term(const EndoMap& f, const mpz_class& c) {
    if (c == 0) return;
    auto it = terms_.find(f);
    if (it == terms_.end()) {
        terms_.emplace(f, c);
        return;
    }
    it->second += c;
    if (it->second == 0) terms_.erase(it);
}

FormalMapSum FormalMapSum::operator+(const FormalMapSum& o) const {
    FormalMapSum out = *this;
    for (const auto& [f, c] : o.terms_) out.add_term(f, c);
    return out;
}

FormalMapSum FormalMapSum::operator-(const FormalMapSum& o) const {
    FormalMapSum out = *this;
    for (const auto& [f, c] : o.terms_) out.add_term(f, -c);
    return out;
}

FormalMapSum FormalMapSum::scaled(const mpz_class& k) const {
    FormalMapSum out;
    if (k == 0) return out;
    for (const auto& [f, c] : terms_) out.terms_.emplace(f, c * k);
    return out;
}

std::string FormalMapSum::dump() const {
    std::ostringstream os;
    for (const auto& [f, c] : terms_) {
        os << c.get_str() << ": [";
        for (std::size_t i = 0; i < f.size(); ++i) {
            if (i) os << ", ";
            os << f[i];
        }
        os << "]\n";
    }
    return os.str();
}

FormalMapSum sum_compose(const FormalMapSum& u, const FormalMapSum& v) {
    FormalMapSum out;
    for (const auto& [f, cf] : u.terms())
        for (const auto& [g, cg] : v.terms()) {
            EndoMap h(g.size());
            for (std::size_t t = 0; t < g.size(); ++t) {
                require(0 <= g[t] && g[t] < (int)f.size(),
                        "composition: inner image out of range");
                h[t] = f[g[t]];
            }
            out.add_term(h, cf * cg);
        }
    return out;
}

FormalMapSum compose_with_map(const FormalMapSum& u, const EndoMap& xi) {
    FormalMapSum out;
    for (const auto& [f, c] : u.terms()) {
        EndoMap h(xi.size());
        for (std::size_t t = 0; t < xi.size(); ++t) {
            require(0 <= xi[t] && xi[t] < (int)f.size(),
                    "composition: inner image out of range");
            h[t] = f[xi[t]];
        }
        out.add_term(h, c);
    }
    return out;
}

bool is_idempotent(const FormalMapSum& u) {
    return sum_compose(u, u) == u;
}

EndoMap bracket(int n, const std::vector<int>& seq) {
    EndoMap f(n);
    std::iota(f.begin(), f.end(), 0);
    for (std::size_t j = 0; j + 1 < seq.size(); ++j) f[seq[j]] = seq[j + 1];
    return f;
}

FormalMapSum kappa(int n, const std::vector<int>& seq) {
    FormalMapSum out;
    mpz_class sign = 1;
    for (std::size_t i = 1; i < seq.size(); ++i) {
        out.add_term(bracket(n, std::vector<int>(seq.begin(),
                                                 seq.begin() + i + 1)),
                     sign);
        sign = -sign;
    }
    return out;
}

FormalMapSum h_of(int n, const std::vector<int>& seq) {
    return FormalMapSum::identity(n) - kappa(n, seq);
}

}  // namespace corfun
