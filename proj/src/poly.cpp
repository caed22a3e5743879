#include "hopfcalc/poly.hpp"
#include "hopfcalc/matrix.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

namespace hopfcalc {

ExponentVector::ExponentVector(std::vector<std::int64_t> values) : a(std::move(values)) {
    if (a.size() < 2)
        throw std::invalid_argument("exponent vector needs at least two entries");
    for (std::int64_t v : a)
        if (v < 2)
            throw std::invalid_argument("exponent vector entries must be >= 2");
}

BigInt ExponentVector::lcm() const {
    BigInt l = 1;
    for (std::int64_t v : a)
        l = big_lcm(l, BigInt(v));
    return l;
}

namespace poly {
namespace {

// Variable order: alphabetic prefix first, then numeric suffix ("z2" < "z10").
struct VarKey {
    std::string prefix;
    long long index = -1; // -1 when no numeric suffix

    explicit VarKey(const std::string& name) {
        std::size_t i = 0;
        while (i < name.size() && !std::isdigit(static_cast<unsigned char>(name[i])))
            ++i;
        prefix = name.substr(0, i);
        if (i < name.size())
            index = std::stoll(name.substr(i));
    }
    bool operator<(const VarKey& o) const {
        if (prefix != o.prefix)
            return prefix < o.prefix;
        return index < o.index;
    }
};

bool exponents_before(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
    std::uint64_t da = 0, db = 0;
    for (auto e : a)
        da += e;
    for (auto e : b)
        db += e;
    if (da != db)
        return da > db; // higher total degree first
    return a > b;       // then lexicographic, descending
}

WeightedPoly normalize(std::vector<std::string> vars,
                       const std::map<std::vector<std::uint32_t>, GaussianRational>& acc) {
    WeightedPoly p;
    p.variables = std::move(vars);
    for (const auto& [exps, c] : acc)
        if (!c.is_zero())
            p.terms.push_back(Monomial{exps, c});
    std::sort(p.terms.begin(), p.terms.end(), [](const Monomial& x, const Monomial& y) {
        return exponents_before(x.exponents, y.exponents);
    });
    return p;
}

void require_same_ring(const WeightedPoly& a, const WeightedPoly& b) {
    if (a.variables != b.variables)
        throw std::invalid_argument("polynomial ring mismatch");
}

struct Parser {
    const std::string& text;
    std::size_t pos = 0;

    struct RawTerm {
        GaussianRational coeff{Rational(1)};
        std::map<std::string, std::uint64_t> vars;
    };

    explicit Parser(const std::string& t) : text(t) {}

    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(pos, msg); }

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
            ++pos;
    }
    bool at_end() {
        skip_ws();
        return pos >= text.size();
    }
    char peek() const { return pos < text.size() ? text[pos] : '\0'; }

    BigInt parse_nat() {
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
            ++pos;
        if (pos == start)
            fail("expected a number");
        return big_from_string(text.substr(start, pos - start));
    }

    // number := nat [ '/' nat ] [ 'i' ]  |  'i'
    GaussianRational parse_number() {
        if (peek() == 'i') {
            std::size_t start = pos;
            ++pos;
            if (std::isalnum(static_cast<unsigned char>(peek()))) {
                pos = start;
                fail("identifiers starting with 'i' are reserved for the imaginary unit");
            }
            return GaussianRational::unit_i();
        }
        BigInt num = parse_nat();
        BigInt den = 1;
        if (peek() == '/') {
            ++pos;
            std::size_t den_at = pos;
            den = parse_nat();
            if (den == 0) {
                pos = den_at;
                fail("zero denominator");
            }
        }
        Rational q = make_rational(num, den);
        if (peek() == 'i') {
            ++pos;
            return GaussianRational(Rational(0), q);
        }
        return GaussianRational(q);
    }

    std::string parse_variable() {
        char c = peek();
        std::size_t start = pos;
        ++pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
            ++pos;
        std::string name = text.substr(start, pos - start);
        if (c == 'i') {
            pos = start;
            fail("identifiers starting with 'i' are reserved for the imaginary unit");
        }
        return name;
    }

    void parse_factor(RawTerm& term) {
        skip_ws();
        char c = peek();
        if (std::isdigit(static_cast<unsigned char>(c)) || c == 'i') {
            term.coeff *= parse_number();
            return;
        }
        if (!std::isalpha(static_cast<unsigned char>(c)))
            fail("expected coefficient or variable");
        std::string name = parse_variable();
        std::uint64_t exp = 1;
        skip_ws();
        if (peek() == '^') {
            ++pos;
            skip_ws();
            std::size_t exp_at = pos;
            BigInt e = parse_nat();
            if (e < 0 || e > 1000000000) {
                pos = exp_at;
                fail("exponent out of range");
            }
            exp = e.get_ui();
        }
        term.vars[name] += exp;
    }

    RawTerm parse_term() {
        RawTerm term;
        parse_factor(term);
        for (;;) {
            skip_ws();
            char c = peek();
            if (c == '*') {
                ++pos;
                parse_factor(term);
            } else if (std::isdigit(static_cast<unsigned char>(c)) ||
                       std::isalpha(static_cast<unsigned char>(c))) {
                parse_factor(term); // juxtaposition, e.g. "5z0^2"
            } else {
                return term;
            }
        }
    }

    std::vector<RawTerm> parse_expression() {
        std::vector<RawTerm> terms;
        if (at_end())
            fail("empty input");
        bool negative = false;
        if (peek() == '+' || peek() == '-') {
            negative = peek() == '-';
            ++pos;
        }
        for (;;) {
            RawTerm t = parse_term();
            if (negative)
                t.coeff = -t.coeff;
            terms.push_back(std::move(t));
            if (at_end())
                return terms;
            char c = peek();
            if (c != '+' && c != '-')
                fail("expected '+' or '-' between terms");
            negative = c == '-';
            ++pos;
        }
    }
};

WeightedPoly parse_impl(const std::string& text, bool allow_zero) {
    Parser parser(text);
    auto raw = parser.parse_expression();

    std::vector<std::string> vars;
    for (const auto& t : raw)
        for (const auto& [name, _] : t.vars)
            vars.push_back(name);
    std::sort(vars.begin(), vars.end(),
              [](const std::string& a, const std::string& b) { return VarKey(a) < VarKey(b); });
    vars.erase(std::unique(vars.begin(), vars.end()), vars.end());

    std::map<std::string, std::size_t> slot;
    for (std::size_t i = 0; i < vars.size(); ++i)
        slot[vars[i]] = i;

    std::map<std::vector<std::uint32_t>, GaussianRational> acc;
    for (const auto& t : raw) {
        std::vector<std::uint32_t> exps(vars.size(), 0);
        for (const auto& [name, e] : t.vars) {
            if (e > 0x7fffffffULL)
                throw ParseError(0, "exponent out of range");
            exps[slot[name]] = static_cast<std::uint32_t>(e);
        }
        acc[exps] += t.coeff;
    }

    WeightedPoly p = normalize(std::move(vars), acc);
    if (p.terms.empty() && !allow_zero)
        throw ParseError(0, "zero polynomial");
    return p;
}

// One printable unit: a pure-real or pure-imaginary coefficient with its
// monomial. Mixed Gaussian coefficients are emitted as two units; the
// parser's like-term merge reassembles them.
struct PrintUnit {
    bool negative;
    std::string body;
};

std::string render_monomial(const WeightedPoly& p, const Monomial& m) {
    std::string out;
    for (std::size_t i = 0; i < m.exponents.size(); ++i) {
        if (m.exponents[i] == 0)
            continue;
        if (!out.empty())
            out += "*";
        out += p.variables[i];
        if (m.exponents[i] > 1)
            out += "^" + std::to_string(m.exponents[i]);
    }
    return out;
}

PrintUnit render_unit(const Rational& value, bool imaginary, const std::string& mono) {
    PrintUnit u;
    u.negative = value < 0;
    Rational mag = abs(value);
    std::string coeff;
    if (imaginary)
        coeff = (mag == 1) ? "i" : mag.get_str() + "i";
    else if (mag != 1 || mono.empty())
        coeff = mag.get_str();
    if (coeff.empty())
        u.body = mono;
    else if (mono.empty())
        u.body = coeff;
    else
        u.body = coeff + "*" + mono;
    return u;
}

} // namespace

WeightedPoly parse_polynomial(const std::string& text) { return parse_impl(text, false); }

GaussianRational parse_gaussian(const std::string& text) {
    WeightedPoly p = parse_impl(text, true);
    if (!p.variables.empty())
        throw ParseError(0, "expected a constant, found variables");
    if (p.terms.empty())
        return GaussianRational{};
    return p.terms[0].coeff;
}

std::string to_string(const WeightedPoly& p) {
    if (p.terms.empty())
        return "0";
    std::vector<PrintUnit> units;
    for (const auto& t : p.terms) {
        std::string mono = render_monomial(p, t);
        if (t.coeff.re != 0)
            units.push_back(render_unit(t.coeff.re, false, mono));
        if (t.coeff.im != 0)
            units.push_back(render_unit(t.coeff.im, true, mono));
    }
    std::string out;
    for (std::size_t i = 0; i < units.size(); ++i) {
        if (i == 0)
            out += units[i].negative ? "-" : "";
        else
            out += units[i].negative ? " - " : " + ";
        out += units[i].body;
    }
    return out;
}

WeightInference infer_weights(const WeightedPoly& p) {
    WeightInference result;
    if (p.terms.empty())
        throw std::invalid_argument("infer_weights: empty polynomial");
    std::int64_t n = static_cast<std::int64_t>(p.variables.size());
    std::int64_t t = static_cast<std::int64_t>(p.terms.size());

    // unknowns (b_0,...,b_{n-1}, d); one homogeneous equation per term
    RationalMatrix system(t, n + 1);
    for (std::int64_t r = 0; r < t; ++r) {
        for (std::int64_t c = 0; c < n; ++c)
            system.at(r, c) = Rational(static_cast<long>(
                p.terms[static_cast<std::size_t>(r)].exponents[static_cast<std::size_t>(c)]));
        system.at(r, n) = Rational(-1);
    }
    RationalMatrix kernel = system.kernel_basis();
    result.solution_dim = kernel.cols();

    if (kernel.cols() == 0) {
        result.kind = WeightInference::Kind::none;
        return result;
    }
    if (kernel.cols() > 1) {
        if (auto bp = detect_brieskorn_pham(p)) {
            BigInt l = bp->lcm();
            WeightSystem ws;
            ws.degree = Rational(l);
            for (std::int64_t v : bp->a)
                ws.weights.push_back(make_rational(l, BigInt(v)));
            result.kind = WeightInference::Kind::found;
            result.system = std::move(ws);
            return result;
        }
        result.kind = WeightInference::Kind::ambiguous;
        return result;
    }

    std::vector<Rational> v(static_cast<std::size_t>(n) + 1);
    for (std::int64_t i = 0; i <= n; ++i)
        v[static_cast<std::size_t>(i)] = kernel.at(i, 0);
    // orient the ray so the weights come out positive
    int want = 0;
    for (std::int64_t i = 0; i < n && want == 0; ++i)
        want = sgn(v[static_cast<std::size_t>(i)]);
    if (want < 0)
        for (auto& x : v)
            x = -x;
    for (std::int64_t i = 0; i < n; ++i)
        if (v[static_cast<std::size_t>(i)] <= 0) {
            result.kind = WeightInference::Kind::none;
            return result;
        }
    Rational d = v[static_cast<std::size_t>(n)];
    if (d <= 0) {
        result.kind = WeightInference::Kind::none;
        return result;
    }

    // least scaling making all weights positive integers
    BigInt den_lcm = 1;
    for (std::int64_t i = 0; i < n; ++i)
        den_lcm = big_lcm(den_lcm, v[static_cast<std::size_t>(i)].get_den());
    BigInt num_gcd = 0;
    for (std::int64_t i = 0; i < n; ++i)
        num_gcd = big_gcd(num_gcd, BigInt(v[static_cast<std::size_t>(i)].get_num() * den_lcm /
                                          v[static_cast<std::size_t>(i)].get_den()));
    Rational scale = make_rational(den_lcm, num_gcd);

    WeightSystem ws;
    for (std::int64_t i = 0; i < n; ++i)
        ws.weights.push_back(v[static_cast<std::size_t>(i)] * scale);
    ws.degree = d * scale;
    result.kind = WeightInference::Kind::found;
    result.system = std::move(ws);
    return result;
}

std::optional<ExponentVector> detect_brieskorn_pham(const WeightedPoly& p) {
    std::size_t n = p.variables.size();
    if (n < 2 || p.terms.size() != n)
        return std::nullopt;
    std::vector<std::int64_t> a(n, 0);
    for (const auto& t : p.terms) {
        std::size_t var = n;
        for (std::size_t i = 0; i < n; ++i) {
            if (t.exponents[i] == 0)
                continue;
            if (var != n)
                return std::nullopt; // mixed term
            var = i;
        }
        if (var == n || t.exponents[var] < 2 || a[var] != 0)
            return std::nullopt;
        a[var] = t.exponents[var];
    }
    for (std::int64_t e : a)
        if (e == 0)
            return std::nullopt;
    return ExponentVector(std::move(a));
}

bool is_weighted_homogeneous(const WeightedPoly& p, const WeightSystem& w) {
    if (w.weights.size() != p.variables.size())
        return false;
    for (const auto& t : p.terms) {
        Rational s = 0;
        for (std::size_t i = 0; i < w.weights.size(); ++i)
            s += Rational(static_cast<long>(t.exponents[i])) * w.weights[i];
        if (s != w.degree)
            return false;
    }
    return true;
}

WeightedPoly zero_poly(std::vector<std::string> variables) {
    WeightedPoly p;
    p.variables = std::move(variables);
    return p;
}

WeightedPoly constant_poly(std::vector<std::string> variables, const GaussianRational& c) {
    WeightedPoly p;
    p.variables = std::move(variables);
    if (!c.is_zero())
        p.terms.push_back(Monomial{std::vector<std::uint32_t>(p.variables.size(), 0), c});
    return p;
}

WeightedPoly variable_poly(std::vector<std::string> variables, std::size_t index) {
    WeightedPoly p;
    p.variables = std::move(variables);
    if (index >= p.variables.size())
        throw std::invalid_argument("variable index out of range");
    std::vector<std::uint32_t> exps(p.variables.size(), 0);
    exps[index] = 1;
    p.terms.push_back(Monomial{std::move(exps), GaussianRational{Rational(1)}});
    return p;
}

WeightedPoly add(const WeightedPoly& a, const WeightedPoly& b) {
    require_same_ring(a, b);
    std::map<std::vector<std::uint32_t>, GaussianRational> acc;
    for (const auto& t : a.terms)
        acc[t.exponents] += t.coeff;
    for (const auto& t : b.terms)
        acc[t.exponents] += t.coeff;
    return normalize(a.variables, acc);
}

WeightedPoly sub(const WeightedPoly& a, const WeightedPoly& b) {
    return add(a, scale(GaussianRational{Rational(-1)}, b));
}

WeightedPoly scale(const GaussianRational& c, const WeightedPoly& a) {
    std::map<std::vector<std::uint32_t>, GaussianRational> acc;
    for (const auto& t : a.terms)
        acc[t.exponents] = c * t.coeff;
    return normalize(a.variables, acc);
}

WeightedPoly mul(const WeightedPoly& a, const WeightedPoly& b) {
    require_same_ring(a, b);
    std::map<std::vector<std::uint32_t>, GaussianRational> acc;
    for (const auto& s : a.terms)
        for (const auto& t : b.terms) {
            std::vector<std::uint32_t> exps(s.exponents.size());
            for (std::size_t i = 0; i < exps.size(); ++i) {
                std::uint64_t e = static_cast<std::uint64_t>(s.exponents[i]) + t.exponents[i];
                if (e > 0x7fffffffULL)
                    throw std::invalid_argument("exponent overflow in product");
                exps[i] = static_cast<std::uint32_t>(e);
            }
            acc[exps] += s.coeff * t.coeff;
        }
    return normalize(a.variables, acc);
}

WeightedPoly pow(const WeightedPoly& a, std::uint32_t e) {
    WeightedPoly acc = constant_poly(a.variables, GaussianRational{Rational(1)});
    WeightedPoly base = a;
    while (e > 0) {
        if (e & 1)
            acc = mul(acc, base);
        base = mul(base, base);
        e >>= 1;
    }
    return acc;
}

WeightedPoly substitute(const WeightedPoly& p, const std::vector<WeightedPoly>& images) {
    if (images.size() != p.variables.size())
        throw std::invalid_argument("substitute: one image per variable required");
    for (const auto& img : images)
        if (!images.empty())
            require_same_ring(images[0], img);
    std::vector<std::string> out_vars =
        images.empty() ? p.variables : images[0].variables;
    WeightedPoly result = zero_poly(out_vars);
    for (const auto& t : p.terms) {
        WeightedPoly term = constant_poly(out_vars, t.coeff);
        for (std::size_t i = 0; i < images.size(); ++i)
            if (t.exponents[i] > 0)
                term = mul(term, pow(images[i], t.exponents[i]));
        result = add(result, term);
    }
    return result;
}

bool is_zero(const WeightedPoly& p) { return p.terms.empty(); }

GaussianRational coefficient(const WeightedPoly& p, const std::vector<std::uint32_t>& exponents) {
    for (const auto& t : p.terms)
        if (t.exponents == exponents)
            return t.coeff;
    return GaussianRational{};
}

} // namespace poly
} // namespace hopfcalc
