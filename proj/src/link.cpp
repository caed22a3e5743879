#include "hopfcalc/link.hpp"
#include "hopfcalc/milnor.hpp"

#include <cmath>
#include <numbers>

namespace hopfcalc {
namespace link {

BigInt CyclicDivisor::degree() const {
    BigInt d = 0;
    for (const auto& [m, s] : entries)
        d += m * s;
    return d;
}

BigInt CyclicDivisor::eig1_multiplicity() const {
    BigInt mult = 0;
    for (const auto& [m, s] : entries)
        mult += s;
    return mult;
}

namespace {

struct ValueGroup {
    BigInt value;
    // (1 - v)^c - 1: the signed sum over ways to pick >= 1 of the c copies
    BigInt factor;
};

// Depth-first over subsets of distinct exponent values, carrying running
// lcm and numerator product; each leaf adds one divisor contribution.
void accumulate(const std::vector<ValueGroup>& groups, std::size_t idx, const BigInt& lcm_so_far,
                const BigInt& numer_so_far, int global_sign, std::map<BigInt, BigInt>& out) {
    if (idx == groups.size()) {
        BigInt contribution = numer_so_far * global_sign;
        out[lcm_so_far] += div_exact(contribution, lcm_so_far);
        return;
    }
    accumulate(groups, idx + 1, lcm_so_far, numer_so_far, global_sign, out);
    accumulate(groups, idx + 1, big_lcm(lcm_so_far, groups[idx].value),
               numer_so_far * groups[idx].factor, global_sign, out);
}

} // namespace

CyclicDivisor char_divisor(const ExponentVector& a) {
    std::map<std::int64_t, unsigned long> multiplicities;
    for (std::int64_t v : a.a)
        ++multiplicities[v];

    std::vector<ValueGroup> groups;
    for (const auto& [v, c] : multiplicities) {
        ValueGroup g;
        g.value = v;
        g.factor = big_pow(BigInt(1 - v), c) - 1;
        groups.push_back(std::move(g));
    }

    int global_sign = a.size() % 2 == 0 ? 1 : -1; // (-1)^{n+1}
    std::map<BigInt, BigInt> raw;
    accumulate(groups, 0, BigInt(1), BigInt(1), global_sign, raw);

    CyclicDivisor d;
    for (auto& [m, s] : raw)
        if (s != 0)
            d.entries.emplace(m, std::move(s));
    return d;
}

LinkReport classify_link(const ExponentVector& a) {
    CyclicDivisor divisor = char_divisor(a);
    std::int64_t n = a.hypersurface_dim();

    LinkReport report;
    report.link_dimension = 2 * n - 1;
    report.eig1_multiplicity = divisor.eig1_multiplicity();
    if (report.eig1_multiplicity < 0)
        throw std::logic_error("negative eigenvalue-1 multiplicity");
    report.middle_betti = report.eig1_multiplicity;
    report.q_sphere = report.eig1_multiplicity == 0;

    if (report.q_sphere) {
        // Delta(1) after cancelling the (t-1)-factors: prod m^{s_m}, which is
        // an exact rational that must come out a nonzero integer.
        Rational value(1);
        for (const auto& [m, s] : divisor.entries) {
            BigInt mag = abs(s);
            if (!mag.fits_ulong_p())
                throw Refusal("delta-size", "divisor multiplicity too large to exponentiate");
            BigInt p = big_pow(m, mag.get_ui());
            if (s > 0)
                value *= Rational(p);
            else
                value /= Rational(p);
        }
        if (!is_integer(value) || value == 0)
            throw std::logic_error("Delta(1) is not a nonzero integer");
        report.delta_at_one = value.get_num();
        report.z_sphere = abs(*report.delta_at_one) == 1;
    }
    if (report.link_dimension < 5)
        report.caveat = SphereCaveat::low_dimension;
    return report;
}

OracleResult brute_force_oracle(const ExponentVector& a, std::uint64_t cap) {
    BigInt tuples = milnor::milnor_number(a);
    if (tuples > BigInt(static_cast<unsigned long>(cap)))
        throw Refusal("oracle-cap", "oracle needs " + to_string(tuples) +
                                        " tuples, cap is " + std::to_string(cap));

    BigInt big_l = 1;
    for (std::int64_t v : a.a)
        big_l = big_lcm(big_l, BigInt(v));
    if (!big_l.fits_ulong_p())
        throw Refusal("oracle-lcm", "lcm of exponents exceeds the 64-bit congruence test");
    std::uint64_t l = big_l.get_ui();

    std::size_t count = a.size();
    std::vector<std::uint64_t> weight(count), k(count, 1), top(count);
    for (std::size_t i = 0; i < count; ++i) {
        weight[i] = l / static_cast<std::uint64_t>(a[i]);
        top[i] = static_cast<std::uint64_t>(a[i]) - 1;
    }

    unsigned __int128 sum = 0;
    for (std::size_t i = 0; i < count; ++i)
        sum += weight[i];

    OracleResult result;
    double log2_abs = 0.0, arg = 0.0;
    const double pi = std::numbers::pi;
    bool more = true;
    while (more) {
        std::uint64_t residue = static_cast<std::uint64_t>(sum % l);
        if (residue == 0) {
            ++result.multiplicity;
        } else {
            // 1 - e^{i theta} = 2 sin(theta/2) e^{i(theta/2 - pi/2)}
            double theta = 2.0 * pi * static_cast<double>(residue) / static_cast<double>(l);
            log2_abs += std::log2(2.0 * std::sin(theta / 2.0));
            arg += theta / 2.0 - pi / 2.0;
            while (arg > pi)
                arg -= 2.0 * pi;
            while (arg <= -pi)
                arg += 2.0 * pi;
        }
        more = false;
        for (std::size_t i = 0; i < count; ++i) {
            if (k[i] < top[i]) {
                ++k[i];
                sum += weight[i];
                more = true;
                break;
            }
            sum -= static_cast<unsigned __int128>(k[i] - 1) * weight[i];
            k[i] = 1;
        }
    }
    if (result.multiplicity == 0)
        result.product = OracleResult::LogProduct{log2_abs, arg};
    return result;
}

double oracle_relative_error(const BigInt& delta_at_one, const OracleResult::LogProduct& p) {
    if (delta_at_one <= 0)
        throw std::invalid_argument("delta_at_one must be a positive integer");
    double diff = p.log2_abs - log2_abs(delta_at_one);
    // |x/y - 1| ~ |ln(x/y)| for small deviations; add the phase residual
    double magnitude_err = std::abs(std::expm1(diff * std::numbers::ln2));
    return magnitude_err + std::abs(p.arg);
}

} // namespace link
} // namespace hopfcalc
