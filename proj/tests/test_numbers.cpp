#include "hopfcalc/numbers.hpp"

#include <doctest.h>

#include <random>

using namespace hopfcalc;

TEST_CASE("bigint helpers") {
    CHECK(big_pow(BigInt(3), 4) == 81);
    CHECK(big_pow(BigInt(-2), 5) == -32);
    CHECK(big_gcd(BigInt(36), BigInt(24)) == 12);
    CHECK(big_lcm(BigInt(4), BigInt(6)) == 12);
    CHECK(divides(BigInt(6), BigInt(30)));
    CHECK_FALSE(divides(BigInt(7), BigInt(30)));
    CHECK(div_exact(BigInt(30), BigInt(6)) == 5);
    CHECK_THROWS_AS(div_exact(BigInt(30), BigInt(7)), std::invalid_argument);
}

TEST_CASE("decimal round trip") {
    std::mt19937_64 rng(12345);
    for (int trial = 0; trial < 200; ++trial) {
        BigInt v = 1;
        int limbs = static_cast<int>(rng() % 6) + 1;
        for (int i = 0; i < limbs; ++i)
            v = v * BigInt(static_cast<unsigned long>(rng())) + BigInt(static_cast<long>(rng() % 1000));
        if (rng() % 2)
            v = -v;
        CHECK(big_from_string(to_string(v)) == v);
    }
}

TEST_CASE("log2_abs agrees with small values") {
    CHECK(log2_abs(BigInt(1)) == doctest::Approx(0.0));
    CHECK(log2_abs(BigInt(1024)) == doctest::Approx(10.0));
    CHECK(log2_abs(BigInt(-1024)) == doctest::Approx(10.0));
    BigInt huge = big_pow(BigInt(10), 50);
    CHECK(log2_abs(huge) == doctest::Approx(50.0 * std::log2(10.0)).epsilon(1e-12));
}

TEST_CASE("rational normalization") {
    Rational q = make_rational(BigInt(6), BigInt(-4));
    CHECK(q.get_num() == -3);
    CHECK(q.get_den() == 2);
    CHECK(is_integer(make_rational(BigInt(8), BigInt(4))));
    CHECK_FALSE(is_integer(q));
    CHECK_THROWS_AS(make_rational(BigInt(1), BigInt(0)), std::invalid_argument);
}

TEST_CASE("gaussian arithmetic") {
    GaussianRational i = GaussianRational::unit_i();
    CHECK(i * i == GaussianRational{Rational(-1)});
    GaussianRational z{Rational(1, 2), Rational(1, 3)};
    CHECK(z.norm2() == Rational(13, 36));
    CHECK((z / z) == GaussianRational{Rational(1)});
    CHECK(z + z.conj() == GaussianRational{Rational(1)});
    CHECK(z.pow(2) == z * z);
    CHECK(z.pow(5) == z * z * z * z * z);
    CHECK(to_string(z) == "1/2+1/3i");
    CHECK(to_string(GaussianRational{Rational(0), Rational(-1)}) == "-i");
    CHECK(to_string(GaussianRational{Rational(-2), Rational(3)}) == "-2+3i");
    CHECK(to_string(GaussianRational{}) == "0");
}
