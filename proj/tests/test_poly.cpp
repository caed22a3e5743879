#include "hopfcalc/poly.hpp"

#include <doctest.h>

#include <random>
#include <set>

using namespace hopfcalc;
using namespace hopfcalc::poly;

namespace {

std::vector<std::uint32_t> exps(std::initializer_list<std::uint32_t> e) { return e; }

} // namespace

TEST_CASE("parse basic Brieskorn-Pham input") {
    WeightedPoly p = parse_polynomial("z0^3+z1^6+z2^2");
    REQUIRE(p.terms.size() == 3);
    CHECK(p.variables == std::vector<std::string>{"z0", "z1", "z2"});
    std::set<std::vector<std::uint32_t>> seen;
    for (const auto& t : p.terms)
        seen.insert(t.exponents);
    CHECK(seen.count(exps({3, 0, 0})) == 1);
    CHECK(seen.count(exps({0, 6, 0})) == 1);
    CHECK(seen.count(exps({0, 0, 2})) == 1);
}

TEST_CASE("zero polynomial rejected") {
    CHECK_THROWS_AS(parse_polynomial("z0^2 - z0^2"), ParseError);
    CHECK_THROWS_AS(parse_polynomial(""), ParseError);
}

TEST_CASE("like terms merge") {
    WeightedPoly p = parse_polynomial("2*z0*z1^2 + z1^2*z0*1");
    REQUIRE(p.terms.size() == 1);
    CHECK(p.terms[0].coeff == GaussianRational{Rational(3)});
    CHECK(p.terms[0].exponents == exps({1, 2}));
}

TEST_CASE("syntax errors carry byte offsets") {
    try {
        parse_polynomial("z0^3 + ^2");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.offset() == 7);
    }
    try {
        parse_polynomial("z0^3 +");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.offset() >= 6);
    }
    CHECK_THROWS_AS(parse_polynomial("i3 + z0"), ParseError); // 'i'-prefixed identifier
    CHECK_THROWS_AS(parse_polynomial("1/0 * z0"), ParseError);
}

TEST_CASE("gaussian coefficients and juxtaposition") {
    WeightedPoly p = parse_polynomial("5z0^2 + 3i*z0^2 - 1/2 z1");
    REQUIRE(p.terms.size() == 2);
    CHECK(p.terms[0].coeff == GaussianRational{Rational(5), Rational(3)});
    CHECK(p.terms[1].coeff == GaussianRational{Rational(-1, 2)});
    GaussianRational g = parse_gaussian("2-3/4i");
    CHECK(g == GaussianRational{Rational(2), Rational(-3, 4)});
    CHECK(parse_gaussian("i") == GaussianRational::unit_i());
    CHECK(parse_gaussian("0") == GaussianRational{});
}

TEST_CASE("print and reparse round-trips the term multiset") {
    std::mt19937_64 rng(42);
    std::vector<std::string> vars{"z0", "z1", "z2"};
    for (int trial = 0; trial < 200; ++trial) {
        int terms = 1 + static_cast<int>(rng() % 5);
        WeightedPoly p = zero_poly(vars);
        for (int t = 0; t < terms; ++t) {
            std::vector<std::uint32_t> e{static_cast<std::uint32_t>(rng() % 4),
                                         static_cast<std::uint32_t>(rng() % 4),
                                         static_cast<std::uint32_t>(rng() % 4)};
            Rational re = make_rational(BigInt(static_cast<long>(rng() % 7) - 3),
                                        BigInt(static_cast<long>(rng() % 3) + 1));
            Rational im = make_rational(BigInt(static_cast<long>(rng() % 7) - 3),
                                        BigInt(static_cast<long>(rng() % 3) + 1));
            WeightedPoly mono = constant_poly(vars, GaussianRational{re, im});
            for (std::size_t v = 0; v < 3; ++v)
                for (std::uint32_t k = 0; k < e[v]; ++k)
                    mono = mul(mono, variable_poly(vars, v));
            p = add(p, mono);
        }
        if (is_zero(p))
            continue;
        WeightedPoly q = parse_polynomial(to_string(p));
        REQUIRE(q.terms.size() == p.terms.size());
        for (std::size_t i = 0; i < p.terms.size(); ++i) {
            // q's variable list may be shorter if a variable cancelled out
            CHECK(coefficient(q, std::vector<std::uint32_t>(
                                     q.terms[i].exponents)) == q.terms[i].coeff);
        }
        // compare term multisets through a second print
        CHECK(to_string(parse_polynomial(to_string(p))) == to_string(p));
    }
}

TEST_CASE("infer weights on determined systems") {
    {
        auto w = infer_weights(parse_polynomial("z0^3+z1^6+z2^2"));
        REQUIRE(w.kind == WeightInference::Kind::found);
        CHECK(w.system->weights == std::vector<Rational>{Rational(2), Rational(1), Rational(3)});
        CHECK(w.system->degree == Rational(6));
    }
    {
        auto w = infer_weights(parse_polynomial("z0^2+z1^2"));
        REQUIRE(w.kind == WeightInference::Kind::found);
        CHECK(w.system->weights == std::vector<Rational>{Rational(1), Rational(1)});
        CHECK(w.system->degree == Rational(2));
    }
    {
        auto w = infer_weights(parse_polynomial("z0^3+z0*z1"));
        REQUIRE(w.kind == WeightInference::Kind::found);
        CHECK(w.system->weights == std::vector<Rational>{Rational(1), Rational(2)});
        CHECK(w.system->degree == Rational(3));
    }
}

TEST_CASE("infer weights edge cases") {
    // single mixed term: solution space has dimension 2
    auto ambiguous = infer_weights(parse_polynomial("z0*z1"));
    CHECK(ambiguous.kind == WeightInference::Kind::ambiguous);
    CHECK(ambiguous.solution_dim == 2);
    // incompatible degrees force d = 0: no positive solution
    auto none = infer_weights(parse_polynomial("z0*z1 + z0^2*z1^2"));
    CHECK(none.kind == WeightInference::Kind::none);
    // constants cannot be weighted homogeneous of positive degree
    auto constant = infer_weights(parse_polynomial("5"));
    CHECK(constant.kind == WeightInference::Kind::none);
}

TEST_CASE("inferred weights satisfy the degree equation on every term") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 200; ++trial) {
        std::size_t count = 2 + rng() % 4;
        std::vector<std::int64_t> a;
        for (std::size_t i = 0; i < count; ++i)
            a.push_back(2 + static_cast<std::int64_t>(rng() % 11)); // entries in [2,12]
        std::string text;
        for (std::size_t i = 0; i < count; ++i)
            text += (i ? "+" : "") + ("z" + std::to_string(i)) + "^" + std::to_string(a[i]);
        WeightedPoly p = parse_polynomial(text);
        auto w = infer_weights(p);
        REQUIRE(w.kind == WeightInference::Kind::found);
        CHECK(is_weighted_homogeneous(p, *w.system));
        // the canonical normalization b_i = lcm(a)/a_i, d = lcm(a)
        ExponentVector ev(a);
        BigInt l = ev.lcm();
        CHECK(w.system->degree == Rational(l));
        for (std::size_t i = 0; i < count; ++i)
            CHECK(w.system->weights[i] == make_rational(l, BigInt(a[i])));
    }
}

TEST_CASE("detect Brieskorn-Pham shape") {
    auto bp = detect_brieskorn_pham(parse_polynomial("z0^3+z1^6+z2^2"));
    REQUIRE(bp.has_value());
    CHECK(bp->a == std::vector<std::int64_t>{3, 6, 2});
    CHECK_FALSE(detect_brieskorn_pham(parse_polynomial("z0^2+z0*z1")).has_value());
    auto scaled = detect_brieskorn_pham(parse_polynomial("5z0^2+7z1^2"));
    REQUIRE(scaled.has_value());
    CHECK(scaled->a == std::vector<std::int64_t>{2, 2});
    // exponent 1 is not allowed
    CHECK_FALSE(detect_brieskorn_pham(parse_polynomial("z0+z1^2")).has_value());
    // a repeated pure power merges, leaving variables uncovered
    CHECK_FALSE(detect_brieskorn_pham(parse_polynomial("z0^2+z0^3+z1^2")).has_value());
}

TEST_CASE("exponent vector validation") {
    CHECK_THROWS_AS(ExponentVector({2}), std::invalid_argument);
    CHECK_THROWS_AS(ExponentVector({2, 1}), std::invalid_argument);
    CHECK(ExponentVector({2, 3, 5}).lcm() == 30);
    CHECK(ExponentVector({4, 6}).hypersurface_dim() == 1);
}

TEST_CASE("ring operations") {
    std::vector<std::string> vars{"x", "y"};
    WeightedPoly x = variable_poly(vars, 0);
    WeightedPoly y = variable_poly(vars, 1);
    WeightedPoly p = add(mul(x, x), scale(GaussianRational{Rational(2)}, y));
    CHECK(to_string(p) == "x^2 + 2*y");
    CHECK(to_string(pow(add(x, y), 2)) == "x^2 + 2*x*y + y^2");
    CHECK(is_zero(sub(p, p)));
    // substitution: p(x -> y, y -> x^2)
    WeightedPoly q = substitute(p, {y, mul(x, x)});
    CHECK(to_string(q) == "2*x^2 + y^2");
    CHECK_THROWS_AS(mul(x, variable_poly({"z"}, 0)), std::invalid_argument);
}
