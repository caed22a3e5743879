// Topology of the link of a Brieskorn-Pham singularity. The monodromy
// characteristic polynomial Delta(t) = prod_m (t^m - 1)^{s_m} is kept as its
// signed cyclic divisor {m -> s_m} and never expanded, so exponents up to
// 10^6 stay cheap: everything runs on the <= 2^{n+1}-term inclusion-exclusion
// over exponent subsets, grouped by repeated values.
#ifndef HOPFCALC_LINK_HPP
#define HOPFCALC_LINK_HPP

#include "hopfcalc/poly.hpp"

#include <cstdint>
#include <map>
#include <optional>

namespace hopfcalc {
namespace link {

// Delta(t) = prod over entries (t^m - 1)^{s_m}; s_m never zero.
struct CyclicDivisor {
    std::map<BigInt, BigInt> entries;

    // total degree sum m * s_m; equals the Milnor number
    BigInt degree() const;
    // multiplicity of the eigenvalue 1, i.e. sum of all s_m
    BigInt eig1_multiplicity() const;
};

// Signed expansion of prod_i (Lambda_{a_i} - Lambda_1) where Lambda_m is the
// uniform multiset of m-th roots of unity:
//   s_m = sum over subsets I of {0..n} with lcm(a_I) = m of
//         (-1)^{n+1-|I|} * (prod_{i in I} a_i) / lcm(a_I).
CyclicDivisor char_divisor(const ExponentVector& a);

enum class SphereCaveat { none, low_dimension };

struct LinkReport {
    std::int64_t link_dimension = 0;     // 2n - 1
    BigInt eig1_multiplicity;
    std::optional<BigInt> delta_at_one;  // defined iff eig1_multiplicity == 0
    bool q_sphere = false;
    bool z_sphere = false;
    BigInt middle_betti;                 // b_{n-1} = b_n of the link
    SphereCaveat caveat = SphereCaveat::none;
};

LinkReport classify_link(const ExponentVector& a);

// Independent verification oracle: enumerates all tuples (k_0,...,k_n) with
// 1 <= k_i <= a_i - 1 (one per monodromy eigenvalue prod_i exp(2 pi i k_i/a_i)).
struct OracleResult {
    std::uint64_t multiplicity = 0; // tuples with sum k_i / a_i integral

    // prod (1 - eigenvalue) in log-polar form; present iff multiplicity == 0
    struct LogProduct {
        double log2_abs = 0.0;
        double arg = 0.0; // radians, wrapped to (-pi, pi]
    };
    std::optional<LogProduct> product;
};

// Refuses when prod(a_i - 1) > cap; never truncates silently.
OracleResult brute_force_oracle(const ExponentVector& a, std::uint64_t cap);

// Relative deviation |product / delta - 1| estimated via log magnitudes;
// delta must be a positive integer.
double oracle_relative_error(const BigInt& delta_at_one, const OracleResult::LogProduct& p);

} // namespace link
} // namespace hopfcalc

#endif
