#ifndef CORFUN_MAP_ALGEBRA_HPP
#define CORFUN_MAP_ALGEBRA_HPP

#include <gmpxx.h>

#include <map>
#include <string>
#include <vector>

namespace corfun {

// A map between index ranges, stored as the image vector.  Endomaps of
// {0..n-1} have size n; rectangular maps (images into a different range)
// use the same representation.
using EndoMap = std::vector<int>;

// Integer linear combination of maps with a common domain size.  Terms
// are kept in lexicographic key order (deterministic iteration) and zero
// coefficients are dropped eagerly.  Coefficients are arbitrary
// precision.
class FormalMapSum {
public:
    FormalMapSum() = default;

    static FormalMapSum zero() { return FormalMapSum(); }
    static FormalMapSum identity(int n);
    static FormalMapSum single(EndoMap f, mpz_class c = 1);

    bool is_zero() const { return terms_.empty(); }
    int term_count() const { return (int)terms_.size(); }
    const std::map<EndoMap, mpz_class>& terms() const { return terms_; }

    void add_term(const EndoMap& f, const mpz_class& c);

    FormalMapSum operator+(const FormalMapSum& o) const;
    FormalMapSum operator-(const FormalMapSum& o) const;
    FormalMapSum scaled(const mpz_class& k) const;

    bool operator==(const FormalMapSum& o) const {
        return terms_ == o.terms_;
    }

    // One line per term: "coeff: [i0, i1, ...]".
    std::string dump() const;

private:
    std::map<EndoMap, mpz_class> terms_;
};

// Bilinear composition: every term f of u after every term g of v, i.e.
// the map t -> f[g[t]].  Rectangular compositions are allowed as long as
// the image of g indexes into f.
FormalMapSum sum_compose(const FormalMapSum& u, const FormalMapSum& v);

// Precompose every term of u with the fixed map xi: terms t -> f[xi[t]].
FormalMapSum compose_with_map(const FormalMapSum& u, const EndoMap& xi);

bool is_idempotent(const FormalMapSum& u);

// The bracket map of a strictly ascending sequence a0 < a1 < ... < ak:
// the identity except a_j -> a_{j+1} for j < k.
EndoMap bracket(int n, const std::vector<int>& seq);

// kappa of a sequence: sum over i >= 1 of (-1)^(i-1) [a0..ai].
FormalMapSum kappa(int n, const std::vector<int>& seq);

// h of a sequence: identity minus kappa.
FormalMapSum h_of(int n, const std::vector<int>& seq);

}  // namespace corfun

#endif
