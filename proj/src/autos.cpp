#include "hopfcalc/autos.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace hopfcalc {
namespace autos {

namespace {

std::vector<std::string> quadric_vars(std::int64_t n) {
    std::vector<std::string> vars;
    for (std::int64_t i = 1; i <= n; ++i)
        vars.push_back("X" + std::to_string(i));
    return vars;
}

poly::WeightedPoly univariate_in_x1(const std::vector<GaussianRational>& coeffs,
                                    const std::vector<std::string>& vars) {
    poly::WeightedPoly x1 = poly::variable_poly(vars, 0);
    poly::WeightedPoly acc = poly::zero_poly(vars);
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
        if (coeffs[k].is_zero())
            continue;
        acc = poly::add(acc, poly::scale(coeffs[k],
                                         poly::pow(x1, static_cast<std::uint32_t>(k))));
    }
    return acc;
}

void validate_params(const QuadricAutoParams& params) {
    if (params.n < 4)
        throw std::invalid_argument("quadric automorphism needs n >= 4");
    if (params.alpha.is_zero() || params.beta.is_zero())
        throw std::invalid_argument("alpha and beta must be nonzero");
}

GaussianRational f_at_zero(const QuadricAutoParams& params) {
    return params.f.empty() ? GaussianRational{} : params.f[0];
}

} // namespace

FinitenessResult finiteness_condition(const ExponentVector& a, std::int64_t k) {
    if (k < 1)
        throw std::invalid_argument("k must be >= 1");
    FinitenessResult r;
    r.sum = 0;
    for (std::int64_t v : a.a)
        r.sum += make_rational(BigInt(1), BigInt(v));
    r.holds = r.sum < Rational(static_cast<long>(k));
    return r;
}

PolyMap build_quadric_auto(const QuadricAutoParams& params) {
    validate_params(params);
    const std::int64_t n = params.n;
    auto vars = quadric_vars(n);
    const GaussianRational& a = params.alpha;
    const GaussianRational& b = params.beta;
    GaussianRational unit_i = GaussianRational::unit_i();

    poly::WeightedPoly x1 = poly::variable_poly(vars, 0);
    poly::WeightedPoly x2 = poly::variable_poly(vars, 1);
    poly::WeightedPoly x3 = poly::variable_poly(vars, 2);
    poly::WeightedPoly f = univariate_in_x1(params.f, vars);
    poly::WeightedPoly f2 = poly::mul(f, f);

    PolyMap map;
    map.components.resize(static_cast<std::size_t>(n), poly::zero_poly(vars));
    map.components[0] = poly::scale(b, x1);

    poly::WeightedPoly x3f = poly::mul(x3, f);
    poly::WeightedPoly x1f2 = poly::mul(x1, f2);
    poly::WeightedPoly x1f = poly::mul(x1, f);

    if (params.variant == Variant::paper) {
        // X2' = b (a^2 X2 + 2a X3 f + X1 f^2)
        poly::WeightedPoly inner = poly::add(
            poly::scale(a * a, x2),
            poly::add(poly::scale(GaussianRational{Rational(2)} * a, x3f), x1f2));
        map.components[1] = poly::scale(b, inner);
        // X3' = i (a b X3 + b X1 f)
        map.components[2] =
            poly::scale(unit_i, poly::add(poly::scale(a * b, x3), poly::scale(b, x1f)));
    } else {
        // X2' = b (a^2 X2 - 2a X3 f - X1 f^2)
        poly::WeightedPoly inner = poly::sub(
            poly::scale(a * a, x2),
            poly::add(poly::scale(GaussianRational{Rational(2)} * a, x3f), x1f2));
        map.components[1] = poly::scale(b, inner);
        // X3' = a b X3 + b X1 f
        map.components[2] = poly::add(poly::scale(a * b, x3), poly::scale(b, x1f));
    }
    for (std::int64_t i = 4; i <= n; ++i)
        map.components[static_cast<std::size_t>(i - 1)] =
            poly::scale(a * b, poly::variable_poly(vars, static_cast<std::size_t>(i - 1)));
    return map;
}

PolyMap identity_map(std::int64_t n) {
    auto vars = quadric_vars(n);
    PolyMap map;
    for (std::int64_t i = 0; i < n; ++i)
        map.components.push_back(poly::variable_poly(vars, static_cast<std::size_t>(i)));
    return map;
}

PolyMap compose(const PolyMap& outer, const PolyMap& inner) {
    if (outer.components.size() != inner.components.size())
        throw std::invalid_argument("compose: component count mismatch");
    PolyMap out;
    for (const auto& c : outer.components)
        out.components.push_back(poly::substitute(c, inner.components));
    return out;
}

namespace {

poly::WeightedPoly quadric_form(std::int64_t n) {
    auto vars = quadric_vars(n);
    poly::WeightedPoly q = poly::mul(poly::variable_poly(vars, 0), poly::variable_poly(vars, 1));
    for (std::int64_t i = 3; i <= n; ++i)
        q = poly::add(q, poly::pow(poly::variable_poly(vars, static_cast<std::size_t>(i - 1)), 2));
    return q;
}

} // namespace

InvarianceResult verify_quadric_invariance(const PolyMap& map, std::int64_t n) {
    if (static_cast<std::int64_t>(map.components.size()) != n)
        throw std::invalid_argument("map must have n components");
    if (n < 4)
        throw std::invalid_argument("quadric invariance needs n >= 4");
    poly::WeightedPoly q = quadric_form(n);
    poly::WeightedPoly image = poly::substitute(q, map.components);

    // solve the multiplier from the X1 X2 coefficient
    std::vector<std::uint32_t> x1x2(static_cast<std::size_t>(n), 0);
    x1x2[0] = 1;
    x1x2[1] = 1;
    InvarianceResult result;
    result.multiplier = poly::coefficient(image, x1x2);
    result.residual = poly::sub(image, poly::scale(result.multiplier, q));
    result.preserved = poly::is_zero(result.residual);
    return result;
}

JacobianSpectrum jacobian_spectrum(const QuadricAutoParams& params) {
    validate_params(params);
    const GaussianRational& a = params.alpha;
    const GaussianRational& b = params.beta;
    GaussianRational unit_i = GaussianRational::unit_i();
    GaussianRational f0 = f_at_zero(params);
    GaussianRational slot3 = params.variant == Variant::paper ? unit_i * a * b : a * b;

    if (f0.is_zero()) {
        std::vector<GaussianRational> eigs{b, a * a * b, slot3};
        for (std::int64_t i = 4; i <= params.n; ++i)
            eigs.push_back(a * b);
        return eigs;
    }

    // Jacobian of (X1', X2', X3') at the origin, rows = components:
    //   corrected: [b, 0, 0; -b f0^2, a^2 b, -2 a b f0; b f0, 0, a b]
    //   paper:     [b, 0, 0;  b f0^2, a^2 b,  2 a b f0; i b f0, 0, i a b]
    GaussianRational two{Rational(2)};
    GaussianRational zero{};
    GaussianRational m[3][3] = {{b, zero, zero},
                                {-(b * f0 * f0), a * a * b, -(two * a * b * f0)},
                                {b * f0, zero, a * b}};
    if (params.variant == Variant::paper) {
        m[1][0] = b * f0 * f0;
        m[1][2] = two * a * b * f0;
        m[2][0] = unit_i * b * f0;
        m[2][2] = unit_i * a * b;
    }

    // char poly of the block: t^3 - tr t^2 + (sum of principal 2-minors) t - det
    GaussianRational tr = m[0][0] + m[1][1] + m[2][2];
    GaussianRational minors = (m[0][0] * m[1][1] - m[0][1] * m[1][0]) +
                              (m[0][0] * m[2][2] - m[0][2] * m[2][0]) +
                              (m[1][1] * m[2][2] - m[1][2] * m[2][1]);
    GaussianRational det = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
                           m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
                           m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);

    std::vector<GaussianRational> cp{-det, minors, -tr, GaussianRational{Rational(1)}};
    // multiply by (t - a b)^{n-3} for the diagonal tail
    GaussianRational tail = a * b;
    for (std::int64_t i = 4; i <= params.n; ++i) {
        std::vector<GaussianRational> next(cp.size() + 1);
        for (std::size_t k = 0; k < cp.size(); ++k) {
            next[k + 1] += cp[k];
            next[k] -= tail * cp[k];
        }
        cp = std::move(next);
    }
    return CharPoly{cp};
}

bool contraction_check(const std::vector<GaussianRational>& eigenvalues, double tolerance) {
    (void)tolerance; // moduli squared are exact rationals here
    return std::all_of(eigenvalues.begin(), eigenvalues.end(),
                       [](const GaussianRational& e) { return e.norm2() < 1; });
}

namespace {

std::complex<double> to_complex(const GaussianRational& z) {
    return {z.re.get_d(), z.im.get_d()};
}

std::vector<std::complex<double>> eval_map(const PolyMap& map,
                                           const std::vector<std::complex<double>>& x) {
    std::vector<std::complex<double>> out;
    out.reserve(map.components.size());
    for (const auto& component : map.components) {
        std::complex<double> value = 0.0;
        for (const auto& term : component.terms) {
            std::complex<double> t = to_complex(term.coeff);
            for (std::size_t i = 0; i < term.exponents.size(); ++i)
                for (std::uint32_t e = 0; e < term.exponents[i]; ++e)
                    t *= x[i];
            value += t;
        }
        out.push_back(value);
    }
    return out;
}

double norm_of(const std::vector<std::complex<double>>& x) {
    double s = 0.0;
    for (const auto& c : x)
        s += std::norm(c);
    return std::sqrt(s);
}

} // namespace

std::vector<OrbitVerdict> orbit_probe(const PolyMap& map,
                                      const std::vector<std::vector<std::complex<double>>>& samples,
                                      std::int64_t iterations, double epsilon) {
    if (iterations < 1)
        throw std::invalid_argument("need at least one iteration");
    std::vector<OrbitVerdict> verdicts;
    for (const auto& start : samples) {
        OrbitVerdict v;
        if (start.size() != map.components.size())
            throw std::invalid_argument("sample dimension mismatch");
        if (norm_of(start) == 0.0) {
            v.rejected_origin = true;
            verdicts.push_back(v);
            continue;
        }
        std::vector<std::complex<double>> x = start;
        double prev_norm = norm_of(x);
        v.norms_decreasing = true;
        v.min_displacement = std::numeric_limits<double>::infinity();
        for (std::int64_t k = 0; k < iterations; ++k) {
            x = eval_map(map, x);
            ++v.iterations_run;
            double nrm = norm_of(x);
            if (nrm > prev_norm)
                v.norms_decreasing = false;
            prev_norm = nrm;
            double displacement = 0.0;
            for (std::size_t i = 0; i < x.size(); ++i)
                displacement += std::norm(x[i] - start[i]);
            displacement = std::sqrt(displacement);
            v.min_displacement = std::min(v.min_displacement, displacement);
            if (nrm < epsilon) {
                v.reached_epsilon = true;
                break;
            }
            if (!std::isfinite(nrm) || nrm > 1e100)
                break; // diverging; no point iterating further
        }
        v.final_norm = prev_norm;
        v.near_fixed_point = v.min_displacement <= epsilon;
        verdicts.push_back(v);
    }
    return verdicts;
}

} // namespace autos
} // namespace hopfcalc
