// Milnor algebra of a Brieskorn-Pham polynomial z_0^{a_0}+...+z_n^{a_n}:
// dimension tau = prod(a_i - 1), the monomial basis z^j with j_i <= a_i - 2,
// and the rational scaling exponent r = sum j_i / a_i through which the
// contracting automorphism acts on each basis monomial.
//
// The basis bound j_i <= a_i - 2 comes from the Jacobian ideal generators
// a_i z_i^{a_i - 1}; it is the bound consistent with dim = prod(a_i - 1).
#ifndef HOPFCALC_MILNOR_HPP
#define HOPFCALC_MILNOR_HPP

#include "hopfcalc/poly.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

namespace hopfcalc {
namespace milnor {

struct MilnorAlgebraDesc {
    ExponentVector a;
    BigInt tau;
    std::vector<std::int64_t> basis_bounds; // (a_0 - 2, ..., a_n - 2)
};

BigInt milnor_number(const ExponentVector& a);

MilnorAlgebraDesc describe(const ExponentVector& a);

// Lazily enumerates all basis exponent vectors j, 0 <= j_i <= a_i - 2,
// in odometer order starting from (0,...,0). tau may exceed memory, so
// callers consume as much as they need.
class BasisStream {
public:
    explicit BasisStream(const ExponentVector& a);
    std::optional<std::vector<std::int64_t>> next();

private:
    std::vector<std::int64_t> bounds_;
    std::vector<std::int64_t> current_;
    bool exhausted_ = false;
    bool started_ = false;
};

// r = sum j_i / a_i as an exact rational; rejects j outside the basis bounds.
Rational scaling_exponent(const std::vector<std::int64_t>& j, const ExponentVector& a);

// Number of basis monomials fixed by the scaling action, i.e. with r = 0.
// Since every j_i >= 0 and r = 0 forces j = 0, this is always 1 (the class
// of the constant monomial); the input is still validated.
std::int64_t fixed_subspace_dim(const ExponentVector& a);

// Count of basis monomials per scaling exponent; refuses when tau > cap.
std::map<Rational, BigInt> scaling_weight_counts(const ExponentVector& a, const BigInt& cap);

} // namespace milnor
} // namespace hopfcalc

#endif
