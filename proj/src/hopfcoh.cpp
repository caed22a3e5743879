#include "hopfcalc/hopfcoh.hpp"

#include <algorithm>

namespace hopfcalc {
namespace hopfcoh {

DimEntry DimEntry::of(BigInt v) {
    if (v < 0)
        throw std::invalid_argument("negative dimension");
    DimEntry e;
    e.finite = std::move(v);
    return e;
}

DimEntry DimEntry::symbol(const std::string& name) {
    DimEntry e;
    e.symbols[name] = 1;
    return e;
}

bool DimEntry::is_pure_symbol() const {
    return finite == 0 && symbols.size() == 1 && symbols.begin()->second == 1;
}

DimEntry& DimEntry::operator+=(const DimEntry& o) {
    finite += o.finite;
    for (const auto& [name, mult] : o.symbols)
        symbols[name] += mult;
    return *this;
}

std::string DimEntry::to_string() const {
    if (is_zero())
        return "0";
    std::string out;
    for (const auto& [name, mult] : symbols) {
        if (!out.empty())
            out += "+";
        if (mult != 1)
            out += hopfcalc::to_string(mult) + "*";
        out += name;
    }
    if (finite != 0 || out.empty()) {
        if (!out.empty())
            out += "+";
        out += hopfcalc::to_string(finite);
    }
    return out;
}

GradedDims cover_omega_dims(std::int64_t n, std::int64_t p, const BigInt& tau) {
    if (n < 3)
        throw std::invalid_argument("cover dims need n >= 3");
    if (p < 0 || p > n)
        throw std::invalid_argument("p out of range");
    if (tau < 1)
        throw std::invalid_argument("tau must be >= 1");
    GradedDims dims;
    for (std::int64_t q = 0; q <= n - 1; ++q) {
        bool tau_degree = (p + q == n - 1) || (p + q == n);
        if (q == 0 || q == n - 1)
            dims[q] = tau_degree ? DimEntry::of(tau) : DimEntry::symbol(kInfiniteEdgeSymbol);
        else
            dims[q] = tau_degree ? DimEntry::of(tau) : DimEntry::zero();
    }
    return dims;
}

namespace {

void check_profile_entry(const DimEntry& cover, const std::pair<DimEntry, DimEntry>& kc) {
    const auto& [ker, coker] = kc;
    if (!cover.is_finite())
        return; // symbolic edge: any profile entry is admissible
    if (!ker.is_finite() || !coker.is_finite())
        throw std::invalid_argument("profile has symbols over a finite cover degree");
    if (ker.finite > cover.finite || coker.finite > cover.finite)
        throw std::invalid_argument("profile exceeds cover dimension");
    if (!(ker == coker))
        throw std::invalid_argument(
            "profile over a finite cover degree must have ker = coker (index zero)");
}

} // namespace

GradedDims quotient_dims_from_profile(const GradedDims& cover, const KerCokerProfile& profile,
                                      std::int64_t n) {
    for (const auto& [q, kc] : profile.entries) {
        auto it = cover.find(q);
        if (it == cover.end())
            throw std::invalid_argument("profile degree outside the cover range");
        check_profile_entry(it->second, kc);
    }
    GradedDims out;
    for (std::int64_t k = 0; k <= n; ++k) {
        DimEntry value;
        if (auto it = profile.entries.find(k); it != profile.entries.end())
            value += it->second.first; // ker in degree k
        if (auto it = profile.entries.find(k - 1); it != profile.entries.end())
            value += it->second.second; // coker one degree below
        out[k] = value;
    }
    return out;
}

std::string symbol_a(std::int64_t p) { return "A_" + std::to_string(p); }
std::string symbol_b(std::int64_t p) { return "B_" + std::to_string(p); }

TableRow hopf_omega_table(std::int64_t n, std::int64_t p) {
    if (n < 3)
        throw std::invalid_argument("hopf table needs n >= 3");
    if (p < 0 || p > n)
        throw std::invalid_argument("p out of range");
    TableRow row;
    row.clipped = 0;
    for (std::int64_t q = 0; q <= n; ++q)
        row.dims[q] = DimEntry::zero();
    row.dims[0] = DimEntry::symbol(symbol_a(p));
    row.dims[1] = DimEntry::symbol(symbol_a(p));
    row.dims[n - 1] += DimEntry::symbol(symbol_b(p));
    row.dims[n] += DimEntry::symbol(symbol_b(p));
    return row;
}

TableRow bvdv_omega_table(std::int64_t n, std::int64_t p, BvdvMode mode) {
    if (n < 3)
        throw std::invalid_argument("bvdv table needs n >= 3");
    if (p < 1 || p > n)
        throw std::invalid_argument("bvdv table needs 1 <= p <= n");

    TableRow row;
    row.clipped = 0;

    if (mode == BvdvMode::theorem) {
        for (std::int64_t q = 0; q <= n; ++q)
            row.dims[q] = DimEntry::zero();
        row.dims[0] += DimEntry::symbol(symbol_a(p));
        row.dims[1] += DimEntry::symbol(symbol_a(p));
        row.dims[n - 1] += DimEntry::symbol(symbol_b(p));
        row.dims[n] += DimEntry::symbol(symbol_b(p));
        std::int64_t center = n - p - 1;
        const std::pair<std::int64_t, long> block[] = {{center - 1, 1}, {center, 2}, {center + 1, 1}};
        for (const auto& [q, rank] : block) {
            if (q >= 0 && q <= n)
                row.dims[q] += DimEntry::of(BigInt(rank));
            else
                row.clipped += rank;
        }
        return row;
    }

    // derivation mode: rebuild from the cover table. Finite tau-degrees carry
    // a one-dimensional fixed subspace, hence ker = coker = 1 there; the
    // infinite edges keep their shared symbols.
    KerCokerProfile profile;
    GradedDims cover;
    for (std::int64_t q = 0; q <= n - 1; ++q) {
        bool tau_degree = (p + q == n - 1) || (p + q == n);
        if (tau_degree) {
            cover[q] = DimEntry::of(BigInt(1)); // only the fixed part matters here
            profile.entries[q] = {DimEntry::of(BigInt(1)), DimEntry::of(BigInt(1))};
        } else if (q == 0 || q == n - 1) {
            DimEntry sym = DimEntry::symbol(q == 0 ? symbol_a(p) : symbol_b(p));
            cover[q] = DimEntry::symbol(kInfiniteEdgeSymbol);
            profile.entries[q] = {sym, sym};
        } else {
            cover[q] = DimEntry::zero();
        }
    }
    for (std::int64_t q : {n - 1 - p, n - p})
        if (q < 0 || q > n - 1)
            row.clipped += 2; // ker and coker of an out-of-range tau degree
    row.dims = quotient_dims_from_profile(cover, profile, n);
    return row;
}

DivisorClass canonical_divisor_hopf(std::int64_t n) {
    if (n < 1)
        throw std::invalid_argument("need n >= 1");
    DivisorClass d;
    d.coefficients.assign(static_cast<std::size_t>(n) + 1, BigInt(1));
    return d;
}

DivisorClass canonical_divisor_bvdv(const ExponentVector& a) {
    DivisorClass d;
    d.coefficients.assign(a.size(), BigInt(1));
    d.coefficients[0] = BigInt(-a[0]);
    return d;
}

PicardStatement picard_statement(const TableRow& structure_sheaf_row, std::int64_t b2) {
    if (b2 != 0)
        return PicardStatement::undetermined;
    auto h0 = structure_sheaf_row.dims.find(0);
    auto h1 = structure_sheaf_row.dims.find(1);
    if (h0 == structure_sheaf_row.dims.end() || h1 == structure_sheaf_row.dims.end())
        return PicardStatement::undetermined;
    return h0->second == h1->second ? PicardStatement::c_star : PicardStatement::undetermined;
}

std::string to_string(PicardStatement s) {
    return s == PicardStatement::c_star ? "Pic = C*" : "undetermined";
}

std::int64_t E1Table::at(std::int64_t p, std::int64_t q) const {
    auto it = entries.find({p, q});
    return it == entries.end() ? 0 : it->second;
}

namespace {

struct HodgeSearch {
    const E1Table& e1;
    std::int64_t n;
    std::vector<std::pair<std::int64_t, std::int64_t>> vars; // (p,q), p <= n-1
    std::vector<std::size_t> diagonal_end; // vars index after which diagonal j closes
    RankAssignment ranks;
    std::int64_t nodes = 0;

    explicit HodgeSearch(const E1Table& table) : e1(table), n(table.n) {
        for (std::int64_t j = 0; j <= 2 * n; ++j)
            for (std::int64_t p = std::max<std::int64_t>(0, j - n);
                 p <= std::min(n - 1, j); ++p)
                vars.emplace_back(p, j - p);
        diagonal_end.assign(static_cast<std::size_t>(2 * n) + 1, 0);
        for (std::int64_t j = 0; j <= 2 * n; ++j) {
            std::size_t count = 0;
            for (std::size_t i = 0; i < vars.size(); ++i)
                if (vars[i].first + vars[i].second <= j)
                    count = i + 1;
            diagonal_end[static_cast<std::size_t>(j)] = count;
        }
    }

    std::int64_t rank_at(std::int64_t p, std::int64_t q) const {
        if (p < 0 || p > n - 1 || q < 0 || q > n)
            return 0;
        auto it = ranks.find({p, q});
        return it == ranks.end() ? 0 : it->second;
    }

    bool diagonal_matches(std::int64_t j) const {
        std::int64_t sum = 0;
        for (std::int64_t p = std::max<std::int64_t>(0, j - n); p <= std::min(n, j); ++p) {
            std::int64_t q = j - p;
            sum += e1.at(p, q) - rank_at(p, q) - rank_at(p - 1, q);
        }
        return sum == e1.target[static_cast<std::size_t>(j)];
    }

    bool search(std::size_t index) {
        // close every diagonal whose variables are all assigned at this point
        for (std::int64_t j = 0; j <= 2 * n; ++j) {
            if (diagonal_end[static_cast<std::size_t>(j)] != index)
                continue;
            if (!diagonal_matches(j))
                return false;
        }
        if (index == vars.size())
            return true;
        auto [p, q] = vars[index];
        std::int64_t incoming = rank_at(p - 1, q);
        std::int64_t cap = e1.at(p, q) - incoming;     // rank + incoming <= dim
        cap = std::min(cap, e1.at(p + 1, q));          // rank <= dim of the target cell
        for (std::int64_t r = 0; r <= cap; ++r) {
            if (++nodes > kHodgeSearchBudget)
                throw Refusal("hodge-budget", "rank search exceeded " +
                                                  std::to_string(kHodgeSearchBudget) + " nodes");
            if (r > 0)
                ranks[{p, q}] = r;
            else
                ranks.erase({p, q});
            if (search(index + 1))
                return true;
        }
        ranks.erase({p, q});
        return false;
    }
};

} // namespace

bool verify_rank_assignment(const E1Table& e1, const RankAssignment& ranks) {
    auto rank_at = [&](std::int64_t p, std::int64_t q) -> std::int64_t {
        auto it = ranks.find({p, q});
        return it == ranks.end() ? 0 : it->second;
    };
    for (std::int64_t j = 0; j <= 2 * e1.n; ++j) {
        std::int64_t sum = 0;
        for (std::int64_t p = std::max<std::int64_t>(0, j - e1.n); p <= std::min(e1.n, j); ++p) {
            std::int64_t q = j - p;
            std::int64_t e2 = e1.at(p, q) - rank_at(p, q) - rank_at(p - 1, q);
            if (e2 < 0)
                return false;
            sum += e2;
        }
        if (sum != e1.target[static_cast<std::size_t>(j)])
            return false;
    }
    for (const auto& [pq, r] : ranks) {
        auto [p, q] = pq;
        if (r < 0 || r + rank_at(p - 1, q) > e1.at(p, q) || r > e1.at(p + 1, q))
            return false;
    }
    return true;
}

std::optional<RankAssignment> hodge_derham_feasible(const E1Table& e1) {
    if (e1.n < 1)
        throw std::invalid_argument("grid needs n >= 1");
    if (static_cast<std::int64_t>(e1.target.size()) != 2 * e1.n + 1)
        throw std::invalid_argument("target must have length 2n+1");
    for (const auto& [pq, v] : e1.entries) {
        if (pq.first < 0 || pq.first > e1.n || pq.second < 0 || pq.second > e1.n)
            throw std::invalid_argument("grid index out of range");
        if (v < 0)
            throw std::invalid_argument("grid entries must be non-negative");
    }
    for (std::int64_t t : e1.target)
        if (t < 0)
            throw std::invalid_argument("target entries must be non-negative");

    HodgeSearch search(e1);
    if (!search.search(0))
        return std::nullopt;
    if (!verify_rank_assignment(e1, search.ranks))
        throw std::logic_error("rank assignment failed independent re-verification");
    return search.ranks;
}

} // namespace hopfcoh
} // namespace hopfcalc
