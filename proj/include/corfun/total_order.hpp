#ifndef CORFUN_TOTAL_ORDER_HPP
#define CORFUN_TOTAL_ORDER_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "corfun/lattice.hpp"
#include "corfun/map_algebra.hpp"

namespace corfun {

// Algebra of join-preserving endomaps of the total order {0..n}.
// Subsets A of {1..n} are passed as ascending lists; |A| = l.

// s_A : {0..n} -> {0..l}, j -> |(0, j] intersect A|.
EndoMap s_map(int n, const std::vector<int>& A);

// i_{A,C} : {0..l} -> {0..n}, 0 -> 0 and j -> A[j-1] - [j in C],
// where C is a subset of {1..l} given as a bitmask over {0..l}.
EndoMap i_map(int n, const std::vector<int>& A, std::uint32_t Cmask);

// i_A = sum over C of (-1)^|C| i_{A,C}.
FormalMapSum i_sum(int n, const std::vector<int>& A);

// f_{A,B} = i_A o s_B; requires |A| = |B|.
FormalMapSum f_AB(int n, const std::vector<int>& A,
                  const std::vector<int>& B);

// epsilon_n = f_{[n],[n]}.
FormalMapSum epsilon(int n);

// beta_l = sum over |A| = l of f_{A,A}.
FormalMapSum beta(int n, int l);

// All join-preserving endomaps of {0..n}: monotone maps fixing 0.
std::vector<EndoMap> join_endomaps(int n);

// Structure report for the f-basis on {0..n} (n <= 4 enforced): the
// composition rule f_{A,B} f_{C,D} = [B = C] f_{A,D}, the count of
// join-preserving endomaps, the standard-basis bijection, and the
// beta_l being orthogonal central idempotents summing to the identity.
struct StructureReport {
    int n = 0;
    long long endo_count = 0;
    bool ok = false;
    std::vector<std::string> failures;
};
StructureReport structure_check(int n);

// Weakly increasing chains u_0 <= ... <= u_n = top in T, each as a
// vector of n+1 lattice elements, in lexicographic order.
std::vector<std::vector<int>> chains_U(const Lattice& T, int n);
// The strictly increasing ones (so n < height forces emptiness).
std::vector<std::vector<int>> chains_V(const Lattice& T, int n);
long long chains_count(const Lattice& T, int n);  // |chains_V|

// Round trip between chains and join-preserving maps T -> {0..n}:
// u_check(u)(t) = min { j : t <= u_j }, and u_hat recovers the chain
// u_j = join of {t : phi(t) <= j} from such a map.
EndoMap u_check(const Lattice& T, const std::vector<int>& u);
std::vector<int> u_hat(const Lattice& T, const EndoMap& phi, int n);

// Whether phi = u_check(u) composed with epsilon_n is nonzero; this
// holds exactly when u is strictly increasing.
bool epsilon_detects(const Lattice& T, const std::vector<int>& u, int n);

}  // namespace corfun

#endif
