#include "hopfcalc/milnor.hpp"

namespace hopfcalc {
namespace milnor {

BigInt milnor_number(const ExponentVector& a) {
    BigInt tau = 1;
    for (std::int64_t v : a.a)
        tau *= BigInt(v - 1);
    return tau;
}

MilnorAlgebraDesc describe(const ExponentVector& a) {
    MilnorAlgebraDesc d;
    d.a = a;
    d.tau = milnor_number(a);
    for (std::int64_t v : a.a)
        d.basis_bounds.push_back(v - 2);
    return d;
}

BasisStream::BasisStream(const ExponentVector& a) {
    for (std::int64_t v : a.a)
        bounds_.push_back(v - 2);
    current_.assign(bounds_.size(), 0);
}

std::optional<std::vector<std::int64_t>> BasisStream::next() {
    if (exhausted_)
        return std::nullopt;
    if (!started_) {
        started_ = true;
        return current_;
    }
    for (std::size_t i = 0; i < current_.size(); ++i) {
        if (current_[i] < bounds_[i]) {
            ++current_[i];
            return current_;
        }
        current_[i] = 0;
    }
    exhausted_ = true;
    return std::nullopt;
}

Rational scaling_exponent(const std::vector<std::int64_t>& j, const ExponentVector& a) {
    if (j.size() != a.size())
        throw std::invalid_argument("scaling_exponent: length mismatch");
    Rational r = 0;
    for (std::size_t i = 0; i < j.size(); ++i) {
        if (j[i] < 0 || j[i] > a[i] - 2)
            throw std::domain_error("scaling_exponent: exponent outside basis bounds");
        r += make_rational(BigInt(j[i]), BigInt(a[i]));
    }
    return r;
}

std::int64_t fixed_subspace_dim(const ExponentVector& a) {
    (void)milnor_number(a); // validates the input shape
    // r = sum j_i / a_i with j_i >= 0 vanishes only at j = 0, and |lambda^r| < 1
    // for every r > 0, so the constant monomial is the only fixed direction.
    return 1;
}

std::map<Rational, BigInt> scaling_weight_counts(const ExponentVector& a, const BigInt& cap) {
    BigInt tau = milnor_number(a);
    if (tau > cap)
        throw Refusal("weight-count-cap",
                      "basis has " + to_string(tau) + " monomials, cap is " + to_string(cap));
    std::map<Rational, BigInt> counts;
    BasisStream stream(a);
    while (auto j = stream.next())
        counts[scaling_exponent(*j, a)] += 1;
    return counts;
}

} // namespace milnor
} // namespace hopfcalc
