// Cohomology of the deck-group action on the punctured cover. The fundamental
// group is a central extension of Z by a finite group; H^*(Z, W) reduces to
// kernel/cokernel of (g - I), and the finite quotient contributes invariants
// only (rational coefficients). Quotient Betti numbers combine the two through
// the degenerate two-row spectral sequence h^k = ker_k + coker_{k-1}.
#ifndef HOPFCALC_GROUPCOH_HPP
#define HOPFCALC_GROUPCOH_HPP

#include "hopfcalc/matrix.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace hopfcalc {
namespace groupcoh {

inline constexpr std::int64_t kDefaultClosureBound = 10000;

struct ZCohomology {
    std::int64_t h0 = 0; // dim ker(A - I), the g-invariants
    std::int64_t h1 = 0; // dim coker(A - I), the g-covariants
    std::int64_t higher = 0;
};

// H^q(Z, W) for the action of the generator by the square matrix A.
// For square A, h0 = h1 by rank-nullity; this is asserted.
ZCohomology z_cohomology(const RationalMatrix& a);

// Closes the generated matrix group by breadth-first products (refusing once
// more than `bound` elements appear), then returns the rank of the averaging
// projector (1/|G|) sum_g g, i.e. the dimension of the invariant subspace.
std::int64_t finite_invariants(const std::vector<RationalMatrix>& generators,
                               std::int64_t bound = kDefaultClosureBound);

// Basis (as matrix columns) of the common fixed space of the generators.
RationalMatrix invariant_subspace_basis(const std::vector<RationalMatrix>& generators,
                                        std::int64_t dim);

struct DeckAction {
    std::int64_t n = 0;            // complex dimension of the quotient
    std::int64_t middle_betti = 0; // b = b_{n-1} of the link
    RationalMatrix action_mid;     // b x b action of the infinite-order generator
    std::vector<RationalMatrix> finite_part; // generators of pi_1 / Z, optional
    std::int64_t closure_bound = kDefaultClosureBound;
};

// Betti vector (length 2n+1) of (V - 0)/pi_1. Cover cohomology sits in
// degrees 0, n-1, n, 2n-1 with trivial action at the edges and the dual
// (transpose-inverse) action in degree n.
std::vector<std::int64_t> quotient_betti(const DeckAction& d);

// True iff the pi_1-invariant part of H^{n-1}(V - 0, Q) vanishes.
bool is_homological_hopf(const DeckAction& d);

struct LocalSystemRep {
    std::int64_t rank = 0;
    RationalMatrix rho_t;                      // action of the generator on the fiber
    std::optional<RationalMatrix> deck_on_mid; // required when middle_betti > 0
};

// Dimensions of H^*(quotient, L) (length 2n+1): cover cohomology tensored
// with the fiber, generator acting by (deck action) (x) rho(T), then the
// same ker/coker reduction as quotient_betti.
std::vector<std::int64_t> local_system_cohomology(std::int64_t n, const LocalSystemRep& rep,
                                                  std::int64_t middle_betti);

} // namespace groupcoh
} // namespace hopfcalc

#endif
