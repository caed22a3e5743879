// Multivariate polynomials with exact Gaussian-rational coefficients:
// parsing, printing, weighted-homogeneity inference and Brieskorn-Pham
// shape detection, plus the ring operations needed elsewhere.
//
// Grammar accepted by parse_polynomial:
//   expr     := [sign] term ( sign term )*
//   term     := factor ( ['*'] factor )*
//   factor   := number | variable [ '^' nat ]
//   number   := nat [ '/' nat ] [ 'i' ]  |  'i'
//   variable := letter [ digits ]    ('i' is reserved for the imaginary unit)
// Whitespace is insignificant. Coefficients may be split across terms;
// like terms are merged, so "1/2*z0 + 1/3i*z0" yields one Gaussian term.
#ifndef HOPFCALC_POLY_HPP
#define HOPFCALC_POLY_HPP

#include "hopfcalc/numbers.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace hopfcalc {

// Brieskorn-Pham exponents (a_0,...,a_n), all >= 2, at least two of them.
struct ExponentVector {
    std::vector<std::int64_t> a;

    ExponentVector() = default;
    explicit ExponentVector(std::vector<std::int64_t> values);

    std::size_t size() const { return a.size(); }
    std::int64_t operator[](std::size_t i) const { return a[i]; }

    // complex dimension n of the hypersurface in C^{n+1}
    std::int64_t hypersurface_dim() const { return static_cast<std::int64_t>(a.size()) - 1; }

    BigInt lcm() const;

    friend bool operator==(const ExponentVector&, const ExponentVector&) = default;
};

namespace poly {

struct Monomial {
    std::vector<std::uint32_t> exponents; // one per ambient variable
    GaussianRational coeff;               // never zero in a normalized polynomial
};

struct WeightedPoly {
    std::vector<std::string> variables;   // ordered ambient variable names
    std::vector<Monomial> terms;          // canonically sorted, distinct exponent vectors
    std::optional<std::vector<Rational>> weights;
    std::optional<Rational> degree;
};

// Throws ParseError (with byte offset) on syntax errors and on the zero
// polynomial. Like terms are merged and zero terms dropped.
WeightedPoly parse_polynomial(const std::string& text);

// Canonical rendering; parse(to_string(p)) reproduces the term multiset.
std::string to_string(const WeightedPoly& p);

// Parses a single Gaussian-rational constant, e.g. "3", "-1/2", "2+3i", "i".
GaussianRational parse_gaussian(const std::string& text);

struct WeightSystem {
    std::vector<Rational> weights; // all positive
    Rational degree;               // positive
};

struct WeightInference {
    enum class Kind { found, ambiguous, none };
    Kind kind = Kind::none;
    std::optional<WeightSystem> system;  // set iff kind == found
    std::int64_t solution_dim = 0;       // dimension of the solution space
};

// Solves sum_k i_k b_k = d over positive rationals for all terms. A unique
// positive ray is normalized to the least degree giving positive integer
// weights. Underdetermined systems fall back to the Brieskorn-Pham canonical
// solution when the shape is detected, otherwise report `ambiguous`.
WeightInference infer_weights(const WeightedPoly& p);

// (a_0,...,a_n) iff p is one pure power per variable, exponents >= 2,
// each variable appearing exactly once; coefficients are ignored.
std::optional<ExponentVector> detect_brieskorn_pham(const WeightedPoly& p);

// True when every term satisfies sum i_k b_k = d for the given system.
bool is_weighted_homogeneous(const WeightedPoly& p, const WeightSystem& w);

// --- ring operations (shared variable list required) ---

WeightedPoly zero_poly(std::vector<std::string> variables);
WeightedPoly constant_poly(std::vector<std::string> variables, const GaussianRational& c);
WeightedPoly variable_poly(std::vector<std::string> variables, std::size_t index);

WeightedPoly add(const WeightedPoly& a, const WeightedPoly& b);
WeightedPoly sub(const WeightedPoly& a, const WeightedPoly& b);
WeightedPoly mul(const WeightedPoly& a, const WeightedPoly& b);
WeightedPoly scale(const GaussianRational& c, const WeightedPoly& a);
WeightedPoly pow(const WeightedPoly& a, std::uint32_t e);

// p with each variable replaced by images[i]; images share one variable list.
WeightedPoly substitute(const WeightedPoly& p, const std::vector<WeightedPoly>& images);

bool is_zero(const WeightedPoly& p);

// Coefficient of the given exponent vector (zero if absent).
GaussianRational coefficient(const WeightedPoly& p, const std::vector<std::uint32_t>& exponents);

} // namespace poly
} // namespace hopfcalc

#endif
