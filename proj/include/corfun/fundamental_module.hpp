#ifndef CORFUN_FUNDAMENTAL_MODULE_HPP
#define CORFUN_FUNDAMENTAL_MODULE_HPP

#include <gmpxx.h>

#include <map>
#include <string>
#include <vector>

#include "corfun/poset.hpp"
#include "corfun/relation.hpp"

namespace corfun {

// Element of the module spanned by the symbols sigma . f for sigma a
// permutation of the elements of a poset (E, R): an integer combination
// of permutations.
class PEfRElement {
public:
    PEfRElement() = default;
    static PEfRElement zero() { return PEfRElement(); }
    static PEfRElement basis(const std::vector<int>& sigma);

    bool is_zero() const { return terms_.empty(); }
    const std::map<std::vector<int>, mpz_class>& terms() const {
        return terms_;
    }
    void add_term(const std::vector<int>& sigma, const mpz_class& c);
    PEfRElement operator+(const PEfRElement& o) const;
    bool operator==(const PEfRElement& o) const {
        return terms_ == o.terms_;
    }
    std::string dump() const;

private:
    std::map<std::vector<int>, mpz_class> terms_;
};

// Action of a correspondence Q on E: on a basis symbol sigma . f, search
// for tau with (tau(c), c) in Q for every c and, for every (a, b) in Q,
// sigma^{-1}(tau^{-1}(a)) <= sigma^{-1}(b) in P; the result is
// (tau o sigma) . f when tau exists and zero otherwise.  tau is unique
// when it exists; finding two is an invariant error.
PEfRElement act_PEfR(const Poset& P, const Relation& Q,
                     const PEfRElement& m);

// Check that the explicit model on maps into the ideal lattice of P
// transforms under correspondences exactly as the symbols over the
// opposite order: exhaustive over all Q and sigma when |E| <= 3, a
// seeded sample for |E| in {4, 5}; larger E is rejected.
bool theta_transport_check(const Poset& P);

}  // namespace corfun

#endif
