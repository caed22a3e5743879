#include "hopfcalc/groupcoh.hpp"

#include <deque>
#include <map>
#include <set>

namespace hopfcalc {
namespace groupcoh {

ZCohomology z_cohomology(const RationalMatrix& a) {
    if (!a.is_square())
        throw std::invalid_argument("z_cohomology: matrix must be square");
    std::int64_t n = a.rows();
    RationalMatrix shifted = a - RationalMatrix::identity(n);
    std::int64_t rank = shifted.rank();
    ZCohomology result;
    result.h0 = n - rank; // ker
    result.h1 = n - rank; // coker of a square matrix has the same dimension
    return result;
}

namespace {

std::vector<RationalMatrix> close_group(const std::vector<RationalMatrix>& generators,
                                        std::int64_t bound) {
    if (generators.empty())
        throw std::invalid_argument("no generators");
    std::int64_t dim = generators[0].rows();
    for (const auto& g : generators) {
        if (g.rows() != dim || g.cols() != dim)
            throw std::invalid_argument("generators must be square of equal size");
        if (!g.is_invertible())
            throw std::invalid_argument("generators must be invertible");
    }
    std::set<RationalMatrix, MatrixLess> seen;
    std::deque<RationalMatrix> frontier;
    seen.insert(RationalMatrix::identity(dim));
    frontier.push_back(RationalMatrix::identity(dim));
    while (!frontier.empty()) {
        RationalMatrix current = std::move(frontier.front());
        frontier.pop_front();
        for (const auto& g : generators) {
            RationalMatrix next = current * g;
            if (seen.insert(next).second) {
                if (static_cast<std::int64_t>(seen.size()) > bound)
                    throw Refusal("closure-bound",
                                  "matrix group closure exceeded " + std::to_string(bound) +
                                      " elements");
                frontier.push_back(std::move(next));
            }
        }
    }
    return {seen.begin(), seen.end()};
}

// Restriction of `action` to the column span of `basis`; the span must be
// invariant, which callers guarantee (central generator vs. finite part).
RationalMatrix restrict_to(const RationalMatrix& action, const RationalMatrix& basis) {
    auto x = basis.solve(action * basis);
    if (!x)
        throw std::invalid_argument("subspace is not invariant under the action");
    return *x;
}

struct CoverDegree {
    RationalMatrix action; // square; dimension of the cover cohomology there
};

std::vector<std::int64_t> kercoker_recurrence(const std::map<std::int64_t, CoverDegree>& cover,
                                              std::int64_t top_degree) {
    std::map<std::int64_t, std::pair<std::int64_t, std::int64_t>> kc;
    for (const auto& [q, deg] : cover) {
        ZCohomology z = z_cohomology(deg.action);
        kc[q] = {z.h0, z.h1};
    }
    std::vector<std::int64_t> dims(static_cast<std::size_t>(top_degree) + 1, 0);
    for (std::int64_t k = 0; k <= top_degree; ++k) {
        std::int64_t value = 0;
        if (auto it = kc.find(k); it != kc.end())
            value += it->second.first;
        if (auto it = kc.find(k - 1); it != kc.end())
            value += it->second.second;
        dims[static_cast<std::size_t>(k)] = value;
    }
    return dims;
}

} // namespace

std::int64_t finite_invariants(const std::vector<RationalMatrix>& generators, std::int64_t bound) {
    std::vector<RationalMatrix> group = close_group(generators, bound);
    std::int64_t dim = generators[0].rows();
    RationalMatrix average(dim, dim);
    for (const auto& g : group)
        average = average + g;
    Rational inv_order = make_rational(BigInt(1), BigInt(static_cast<long>(group.size())));
    average = inv_order * average;
    return average.rank();
}

RationalMatrix invariant_subspace_basis(const std::vector<RationalMatrix>& generators,
                                        std::int64_t dim) {
    if (generators.empty())
        return RationalMatrix::identity(dim);
    std::vector<RationalMatrix> stacked;
    for (const auto& g : generators)
        stacked.push_back(g - RationalMatrix::identity(dim));
    return vstack(stacked).kernel_basis();
}

namespace {

void validate_deck(const DeckAction& d) {
    if (d.n < 2)
        throw std::invalid_argument("deck action needs complex dimension n >= 2");
    if (d.middle_betti < 0)
        throw std::invalid_argument("negative middle Betti number");
    if (d.action_mid.rows() != d.middle_betti || d.action_mid.cols() != d.middle_betti)
        throw std::invalid_argument("middle action must be b x b");
    if (d.middle_betti > 0 && !d.action_mid.is_invertible())
        throw std::invalid_argument("middle action must be invertible");
    for (const auto& g : d.finite_part) {
        if (g.rows() != d.middle_betti || g.cols() != d.middle_betti)
            throw std::invalid_argument("finite-part generators must be b x b");
        // the infinite-order generator is central, so its action commutes
        // with the finite quotient
        if (!(d.action_mid * g == g * d.action_mid))
            throw std::invalid_argument(
                "finite-part generators must commute with the central action");
    }
}

} // namespace

std::vector<std::int64_t> quotient_betti(const DeckAction& d) {
    validate_deck(d);
    std::int64_t b = d.middle_betti;

    RationalMatrix mid = d.action_mid;
    RationalMatrix mid_dual = b > 0 ? d.action_mid.dual_action() : RationalMatrix(0, 0);

    if (!d.finite_part.empty() && b > 0) {
        // invariants of the finite quotient first; exact since we are in
        // characteristic zero, and the central generator preserves them
        (void)finite_invariants(d.finite_part, d.closure_bound); // enforces finiteness
        RationalMatrix basis = invariant_subspace_basis(d.finite_part, b);
        mid = restrict_to(mid, basis);
        std::vector<RationalMatrix> dual_gens;
        for (const auto& g : d.finite_part)
            dual_gens.push_back(g.dual_action());
        RationalMatrix dual_basis = invariant_subspace_basis(dual_gens, b);
        mid_dual = restrict_to(d.action_mid.dual_action(), dual_basis);
    }

    std::map<std::int64_t, CoverDegree> cover;
    cover[0] = {RationalMatrix::identity(1)};
    cover[2 * d.n - 1] = {RationalMatrix::identity(1)};
    if (mid.rows() > 0)
        cover[d.n - 1] = {mid};
    if (mid_dual.rows() > 0)
        cover[d.n] = {mid_dual};
    return kercoker_recurrence(cover, 2 * d.n);
}

bool is_homological_hopf(const DeckAction& d) {
    validate_deck(d);
    std::int64_t b = d.middle_betti;
    if (b == 0)
        return true;
    std::vector<RationalMatrix> all;
    all.push_back(d.action_mid);
    for (const auto& g : d.finite_part)
        all.push_back(g);
    return invariant_subspace_basis(all, b).cols() == 0;
}

std::vector<std::int64_t> local_system_cohomology(std::int64_t n, const LocalSystemRep& rep,
                                                  std::int64_t middle_betti) {
    if (n < 2)
        throw std::invalid_argument("local systems need complex dimension n >= 2");
    if (rep.rank < 1 || rep.rho_t.rows() != rep.rank || rep.rho_t.cols() != rep.rank)
        throw std::invalid_argument("fiber representation must be rank x rank");
    if (!rep.rho_t.is_invertible())
        throw std::invalid_argument("rho(T) must be invertible");
    if (middle_betti < 0)
        throw std::invalid_argument("negative middle Betti number");
    if (middle_betti > 0 && !rep.deck_on_mid)
        throw std::invalid_argument("deck_on_mid required when the middle Betti number is nonzero");
    if (middle_betti > 0 && (rep.deck_on_mid->rows() != middle_betti ||
                             rep.deck_on_mid->cols() != middle_betti))
        throw std::invalid_argument("deck_on_mid must be b x b");

    std::map<std::int64_t, CoverDegree> cover;
    cover[0] = {rep.rho_t};
    cover[2 * n - 1] = {rep.rho_t};
    if (middle_betti > 0) {
        cover[n - 1] = {kron(*rep.deck_on_mid, rep.rho_t)};
        cover[n] = {kron(rep.deck_on_mid->dual_action(), rep.rho_t)};
    }
    return kercoker_recurrence(cover, 2 * n);
}

} // namespace groupcoh
} // namespace hopfcalc
