// Exact arithmetic foundation: arbitrary-precision integers and rationals
// (GMP-backed) plus Gaussian rationals a+bi with exact rational parts.
#ifndef HOPFCALC_NUMBERS_HPP
#define HOPFCALC_NUMBERS_HPP

#include <cmath>
#include <cstdint>
#include <gmpxx.h>
#include <stdexcept>
#include <string>
#include <utility>

namespace hopfcalc {

using BigInt = mpz_class;
using Rational = mpq_class;

// Computation declined because a configured cap or search bound was hit.
// Distinct from invalid input: the request is well-formed but too large.
class Refusal : public std::runtime_error {
public:
    Refusal(std::string code, const std::string& message)
        : std::runtime_error(message), code_(std::move(code)) {}
    const std::string& code() const { return code_; }

private:
    std::string code_;
};

// Text could not be parsed; `offset` is the byte position of the failure.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t offset, const std::string& message)
        : std::runtime_error(message), offset_(offset) {}
    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

inline BigInt big_pow(const BigInt& base, unsigned long exp) {
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
    return r;
}

inline BigInt big_gcd(const BigInt& a, const BigInt& b) {
    BigInt r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline BigInt big_lcm(const BigInt& a, const BigInt& b) {
    BigInt r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline bool divides(const BigInt& d, const BigInt& n) {
    return mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t()) != 0;
}

// Exact quotient; caller must know d | n.
inline BigInt div_exact(const BigInt& n, const BigInt& d) {
    if (!divides(d, n))
        throw std::invalid_argument("div_exact: not divisible");
    BigInt r;
    mpz_divexact(r.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
    return r;
}

inline BigInt big_from_string(const std::string& s) {
    BigInt r;
    if (mpz_set_str(r.get_mpz_t(), s.c_str(), 10) != 0)
        throw ParseError(0, "not a decimal integer: '" + s + "'");
    return r;
}

inline std::string to_string(const BigInt& v) { return v.get_str(); }
inline std::string to_string(const Rational& v) { return v.get_str(); }

// log2 of |v| as (mantissa, exponent) with mantissa in [0.5, 1); v != 0.
inline double log2_abs(const BigInt& v) {
    if (v == 0)
        throw std::invalid_argument("log2_abs of zero");
    long exp = 0;
    double m = mpz_get_d_2exp(&exp, v.get_mpz_t());
    return std::log2(std::abs(m)) + static_cast<double>(exp);
}

inline Rational make_rational(const BigInt& num, const BigInt& den) {
    if (den == 0)
        throw std::invalid_argument("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

struct GaussianRational {
    Rational re;
    Rational im;

    GaussianRational() = default;
    GaussianRational(Rational r) : re(std::move(r)) {}
    GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}
    explicit GaussianRational(long r) : re(r) {}

    static GaussianRational unit_i() { return {Rational(0), Rational(1)}; }

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_real() const { return im == 0; }

    GaussianRational conj() const { return {re, Rational(-im)}; }

    // |z|^2, always an exact rational.
    Rational norm2() const { return re * re + im * im; }

    friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend GaussianRational operator-(const GaussianRational& a) {
        return {Rational(-a.re), Rational(-a.im)};
    }
    friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
        Rational n = b.norm2();
        if (n == 0)
            throw std::invalid_argument("division by zero Gaussian rational");
        GaussianRational c = a * b.conj();
        return {c.re / n, c.im / n};
    }
    GaussianRational& operator+=(const GaussianRational& o) { return *this = *this + o; }
    GaussianRational& operator-=(const GaussianRational& o) { return *this = *this - o; }
    GaussianRational& operator*=(const GaussianRational& o) { return *this = *this * o; }

    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re == b.re && a.im == b.im;
    }
    friend bool operator!=(const GaussianRational& a, const GaussianRational& b) {
        return !(a == b);
    }

    GaussianRational pow(unsigned long e) const {
        GaussianRational acc{Rational(1)};
        GaussianRational base = *this;
        while (e > 0) {
            if (e & 1)
                acc *= base;
            base *= base;
            e >>= 1;
        }
        return acc;
    }
};

// Total order usable as a map key (lexicographic on re, im).
inline bool gaussian_less(const GaussianRational& a, const GaussianRational& b) {
    int c = cmp(a.re, b.re);
    if (c != 0)
        return c < 0;
    return cmp(a.im, b.im) < 0;
}

std::string to_string(const GaussianRational& z);

} // namespace hopfcalc

#endif
