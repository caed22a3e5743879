// hopfcalc: exact invariants of Brieskorn-Pham links and the Hopf-type
// manifolds built on them. Every subcommand prints a human-readable report
// or, with --json, a deterministic "hopfcalc/1" JSON document.
#include "hopfcalc/report.hpp"
#include "hopfcalc/tomlmini.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace hopfcalc;

Rational parse_rational(const std::string& text) {
    Rational q;
    if (q.set_str(text, 10) != 0)
        throw ParseError(0, "not a rational number: '" + text + "'");
    if (q.get_den() == 0)
        throw ParseError(0, "zero denominator in '" + text + "'");
    q.canonicalize();
    return q;
}

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> parts;
    std::string current;
    for (char c : text) {
        if (c == sep) {
            parts.push_back(current);
            current.clear();
        } else if (!std::isspace(static_cast<unsigned char>(c))) {
            current += c;
        }
    }
    parts.push_back(current);
    return parts;
}

ExponentVector parse_exponents_csv(const std::string& text) {
    std::vector<std::int64_t> values;
    for (const auto& part : split(text, ',')) {
        if (part.empty())
            throw ParseError(0, "empty entry in exponent list");
        values.push_back(std::stoll(part));
    }
    return ExponentVector(std::move(values));
}

RationalMatrix parse_matrix_csv(const std::string& text) {
    std::vector<std::vector<Rational>> rows;
    for (const auto& row_text : split(text, ';')) {
        std::vector<Rational> row;
        for (const auto& entry : split(row_text, ','))
            row.push_back(parse_rational(entry));
        rows.push_back(std::move(row));
    }
    return RationalMatrix::from_rows(rows);
}

std::vector<RationalMatrix> parse_matrix_list(const std::string& text) {
    std::vector<RationalMatrix> mats;
    if (text.empty())
        return mats;
    for (const auto& part : split(text, '|'))
        mats.push_back(parse_matrix_csv(part));
    return mats;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::invalid_argument("cannot open input file '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

struct SingularityInput {
    ExponentVector exponents;
    std::string echo;
};

RationalMatrix matrix_from_toml(const tomlmini::Value& v) {
    std::vector<std::vector<Rational>> rows;
    if (!v.is_array())
        throw std::invalid_argument("matrix must be an array of arrays");
    for (const auto& row_val : v.items) {
        if (!row_val.is_array())
            throw std::invalid_argument("matrix must be an array of arrays");
        std::vector<Rational> row;
        for (const auto& e : row_val.items) {
            if (e.is_integer())
                row.push_back(Rational(static_cast<long>(e.integer)));
            else if (e.is_string())
                row.push_back(parse_rational(e.str));
            else
                throw std::invalid_argument("matrix entries must be integers or rationals");
        }
        rows.push_back(std::move(row));
    }
    return RationalMatrix::from_rows(rows);
}

struct TomlInput {
    std::optional<SingularityInput> singularity;
    std::optional<RationalMatrix> action;
    std::optional<std::int64_t> bundle_p;
    std::optional<BigInt> tau;
};

TomlInput load_toml(const std::string& path) {
    TomlInput out;
    tomlmini::Document doc = tomlmini::parse(read_file(path));
    if (const auto* exps = doc.find("singularity", "exponents")) {
        if (!exps->is_array())
            throw std::invalid_argument("[singularity] exponents must be an array");
        std::vector<std::int64_t> values;
        std::string echo;
        for (const auto& e : exps->items) {
            if (!e.is_integer())
                throw std::invalid_argument("[singularity] exponents must be integers");
            values.push_back(e.integer);
            echo += (echo.empty() ? "" : ",") + std::to_string(e.integer);
        }
        out.singularity = SingularityInput{ExponentVector(std::move(values)), echo};
    } else if (const auto* poly_text = doc.find("singularity", "poly")) {
        if (!poly_text->is_string())
            throw std::invalid_argument("[singularity] poly must be a string");
        poly::WeightedPoly p = poly::parse_polynomial(poly_text->str);
        auto bp = poly::detect_brieskorn_pham(p);
        if (!bp)
            throw std::invalid_argument("polynomial is not of Brieskorn-Pham shape");
        out.singularity = SingularityInput{*bp, poly_text->str};
    }
    if (const auto* action = doc.find("quotient", "action"))
        out.action = matrix_from_toml(*action);
    if (const auto* p = doc.find("bundle", "p")) {
        if (!p->is_integer())
            throw std::invalid_argument("[bundle] p must be an integer");
        out.bundle_p = p->integer;
    }
    if (const auto* tau = doc.find("bundle", "tau")) {
        if (tau->is_integer())
            out.tau = BigInt(static_cast<long>(tau->integer));
        else if (tau->is_string())
            out.tau = big_from_string(tau->str);
        else
            throw std::invalid_argument("[bundle] tau must be an integer or decimal string");
    }
    return out;
}

SingularityInput resolve_singularity(const std::string& exponents_csv, const std::string& poly_text,
                                     const std::optional<TomlInput>& toml) {
    if (!exponents_csv.empty())
        return {parse_exponents_csv(exponents_csv), exponents_csv};
    if (!poly_text.empty()) {
        poly::WeightedPoly p = poly::parse_polynomial(poly_text);
        auto bp = poly::detect_brieskorn_pham(p);
        if (!bp)
            throw std::invalid_argument(
                "polynomial parsed but is not of Brieskorn-Pham shape (one pure power per "
                "variable, exponents >= 2)");
        return {*bp, poly_text};
    }
    if (toml && toml->singularity)
        return *toml->singularity;
    throw std::invalid_argument("provide --exponents, --poly or --input");
}

report::TableMode parse_mode(const std::string& mode) {
    if (mode == "theorem")
        return report::TableMode::theorem;
    if (mode == "derivation")
        return report::TableMode::derivation;
    if (mode == "both")
        return report::TableMode::both;
    throw std::invalid_argument("--mode must be theorem, derivation or both");
}

std::vector<GaussianRational> parse_univariate(const std::string& text) {
    std::string trimmed;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c)))
            trimmed += c;
    if (trimmed.empty() || trimmed == "0")
        return {};
    poly::WeightedPoly p = poly::parse_polynomial(text);
    if (p.variables.size() > 1)
        throw std::invalid_argument("f must be a univariate polynomial in X1");
    if (p.variables.size() == 1 && p.variables[0] != "X1")
        throw std::invalid_argument("f must use the variable X1");
    std::vector<GaussianRational> coeffs;
    for (const auto& term : p.terms) {
        std::uint32_t degree = term.exponents.empty() ? 0 : term.exponents[0];
        if (coeffs.size() <= degree)
            coeffs.resize(degree + 1);
        coeffs[degree] = term.coeff;
    }
    return coeffs;
}

void emit(const report::Json& doc, bool json) {
    if (json)
        std::cout << report::to_json_string(doc);
    else
        std::cout << report::render_text(doc);
}

int finish_link_like(const report::Json& doc, bool json) {
    emit(doc, json);
    if (report::oracle_disagrees(doc)) {
        std::cerr << "error: oracle-mismatch: brute-force oracle disagrees with the divisor "
                     "pipeline\n";
        return 1;
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact invariants of Brieskorn-Pham links and homological Hopf manifolds"};
    app.require_subcommand(1);

    // shared option storage
    std::string exponents_csv, poly_text, input_path, action_csv, finite_csv, rho_csv, deck_csv;
    std::string mode_text = "both", variant_text = "both", alpha_text, beta_text, f_text = "0";
    std::string e1_text, target_text, tau_text;
    std::int64_t opt_n = 0, opt_p = -1, opt_k = 1, opt_rank = 1, opt_middle_betti = 0;
    std::int64_t iterations = 50;
    std::uint64_t cap = 100000;
    std::int64_t weight_cap = -1;
    double epsilon = 1e-9;
    bool json = false, oracle = false, probe = false;

    auto add_singularity_opts = [&](CLI::App* cmd) {
        cmd->add_option("--exponents", exponents_csv, "Brieskorn-Pham exponents, e.g. 2,3,5");
        cmd->add_option("--poly", poly_text, "polynomial text, e.g. \"z0^3+z1^6+z2^2\"");
        cmd->add_option("--input", input_path, "TOML input file");
    };
    auto add_json = [&](CLI::App* cmd) { cmd->add_flag("--json", json, "emit JSON"); };

    CLI::App* cmd_analyze = app.add_subcommand("analyze", "full invariant bundle");
    add_singularity_opts(cmd_analyze);
    cmd_analyze->add_option("--tau", tau_text, "override tau (complete-intersection input)");
    cmd_analyze->add_option("--action", action_csv, "middle deck action, rows ';', entries ','");
    cmd_analyze->add_option("--finite", finite_csv, "finite-part generators, matrices '|'");
    cmd_analyze->add_option("--p", opt_p, "restrict bundle tables to one p");
    cmd_analyze->add_option("--mode", mode_text, "theorem|derivation|both (default both)");
    cmd_analyze->add_flag("--oracle", oracle, "run the brute-force cross-check");
    cmd_analyze->add_option("--cap", cap, "oracle tuple cap (default 100000)");
    cmd_analyze->add_option("--k", opt_k, "codimension for the finiteness criterion");
    add_json(cmd_analyze);

    CLI::App* cmd_link = app.add_subcommand("link", "monodromy divisor and sphere tests");
    add_singularity_opts(cmd_link);
    cmd_link->add_flag("--oracle", oracle, "run the brute-force cross-check");
    cmd_link->add_option("--cap", cap, "oracle tuple cap (default 100000)");
    add_json(cmd_link);

    CLI::App* cmd_milnor = app.add_subcommand("milnor", "Milnor algebra dimension and basis");
    add_singularity_opts(cmd_milnor);
    cmd_milnor->add_option("--weight-counts-cap", weight_cap,
                           "also list per-weight basis counts when tau <= cap");
    add_json(cmd_milnor);

    CLI::App* cmd_coh = app.add_subcommand("cohomology", "bundle cohomology tables");
    add_singularity_opts(cmd_coh);
    cmd_coh->add_option("--n", opt_n, "complex dimension (alternative to --exponents)");
    cmd_coh->add_option("--tau", tau_text, "tau for the cover table");
    cmd_coh->add_option("--p", opt_p, "restrict to one p");
    cmd_coh->add_option("--mode", mode_text, "theorem|derivation|both (default both)");
    std::string kind_text = "bvdv";
    cmd_coh->add_option("--kind", kind_text, "bvdv|hopf (default bvdv)");
    add_json(cmd_coh);

    CLI::App* cmd_quot = app.add_subcommand("quotient", "quotient Betti numbers and verdict");
    add_singularity_opts(cmd_quot);
    cmd_quot->add_option("--n", opt_n, "complex dimension (alternative to --exponents)");
    cmd_quot->add_option("--middle-betti", opt_middle_betti, "middle Betti number of the link");
    cmd_quot->add_option("--action", action_csv, "middle deck action, rows ';', entries ','");
    cmd_quot->add_option("--finite", finite_csv, "finite-part generators, matrices '|'");
    add_json(cmd_quot);

    CLI::App* cmd_ls = app.add_subcommand("local-system", "local-system cohomology dims");
    cmd_ls->add_option("--n", opt_n, "complex dimension")->required();
    cmd_ls->add_option("--rank", opt_rank, "fiber rank");
    cmd_ls->add_option("--rho", rho_csv, "generator action on the fiber")->required();
    cmd_ls->add_option("--middle-betti", opt_middle_betti, "middle Betti number of the cover");
    cmd_ls->add_option("--deck", deck_csv, "deck action on the middle cohomology");
    add_json(cmd_ls);

    CLI::App* cmd_auto = app.add_subcommand("autocheck", "automorphism finiteness criterion");
    add_singularity_opts(cmd_auto);
    cmd_auto->add_option("--k", opt_k, "codimension (1 for hypersurfaces)");
    add_json(cmd_auto);

    CLI::App* cmd_quadric = app.add_subcommand("quadric", "Danilov-Gizatullin automorphism");
    cmd_quadric->add_option("--n", opt_n, "ambient variables X1..Xn (default 4)");
    cmd_quadric->add_option("--alpha", alpha_text, "alpha, Gaussian rational")->required();
    cmd_quadric->add_option("--beta", beta_text, "beta, Gaussian rational")->required();
    cmd_quadric->add_option("--f", f_text, "f(X1), e.g. \"X1^2-1/2*X1\" (default 0)");
    cmd_quadric->add_option("--variant", variant_text, "paper|corrected|both (default both)");
    cmd_quadric->add_flag("--probe", probe, "run the numeric orbit probe");
    cmd_quadric->add_option("--iterations", iterations, "probe iterations (default 50)");
    cmd_quadric->add_option("--epsilon", epsilon, "probe epsilon (default 1e-9)");
    add_json(cmd_quadric);

    CLI::App* cmd_hodge = app.add_subcommand("hodge", "Hodge-deRham degeneration feasibility");
    cmd_hodge->add_option("--n", opt_n, "grid size (p,q in 0..n)")->required();
    cmd_hodge->add_option("--e1", e1_text, "E1 grid, rows (fixed p) ';', entries ','")->required();
    cmd_hodge->add_option("--target", target_text, "target Betti vector, length 2n+1")->required();
    add_json(cmd_hodge);

    try {
        app.parse(argc, argv);

        std::optional<TomlInput> toml;
        if (!input_path.empty())
            toml = load_toml(input_path);

        if (cmd_link->parsed()) {
            SingularityInput s = resolve_singularity(exponents_csv, poly_text, toml);
            return finish_link_like(report::link_report(s.exponents, oracle, cap), json);
        }
        if (cmd_milnor->parsed()) {
            SingularityInput s = resolve_singularity(exponents_csv, poly_text, toml);
            std::optional<BigInt> wc;
            if (weight_cap >= 0)
                wc = BigInt(static_cast<long>(weight_cap));
            emit(report::milnor_report(s.exponents, wc), json);
            return 0;
        }
        if (cmd_auto->parsed()) {
            SingularityInput s = resolve_singularity(exponents_csv, poly_text, toml);
            emit(report::autocheck_report(s.exponents, opt_k), json);
            return 0;
        }
        if (cmd_coh->parsed()) {
            std::optional<BigInt> tau;
            if (!tau_text.empty())
                tau = big_from_string(tau_text);
            std::int64_t n = opt_n;
            if (!exponents_csv.empty() || !poly_text.empty() || (toml && toml->singularity)) {
                SingularityInput s = resolve_singularity(exponents_csv, poly_text, toml);
                n = s.exponents.hypersurface_dim();
                if (!tau)
                    tau = milnor::milnor_number(s.exponents);
            }
            if (toml && toml->bundle_p && opt_p < 0)
                opt_p = *toml->bundle_p;
            std::optional<std::int64_t> only_p;
            if (opt_p >= 0)
                only_p = opt_p;
            emit(report::cohomology_report(n, tau, only_p, parse_mode(mode_text),
                                           kind_text == "bvdv"),
                 json);
            return 0;
        }
        if (cmd_quot->parsed()) {
            std::optional<RationalMatrix> action;
            if (!action_csv.empty())
                action = parse_matrix_csv(action_csv);
            else if (toml && toml->action)
                action = toml->action;
            std::int64_t n = opt_n, b = opt_middle_betti;
            if (!exponents_csv.empty() || !poly_text.empty() || (toml && toml->singularity)) {
                SingularityInput s = resolve_singularity(exponents_csv, poly_text, toml);
                n = s.exponents.hypersurface_dim();
                link::LinkReport lr = link::classify_link(s.exponents);
                if (!lr.middle_betti.fits_slong_p())
                    throw Refusal("size", "middle Betti number does not fit in 64 bits");
                b = lr.middle_betti.get_si();
            }
            emit(report::quotient_report(n, b, action, parse_matrix_list(finite_csv)), json);
            return 0;
        }
        if (cmd_ls->parsed()) {
            groupcoh::LocalSystemRep rep;
            rep.rho_t = parse_matrix_csv(rho_csv);
            rep.rank = rep.rho_t.rows();
            if (opt_rank != 1 && opt_rank != rep.rank)
                throw std::invalid_argument("--rank disagrees with the --rho matrix size");
            if (!deck_csv.empty())
                rep.deck_on_mid = parse_matrix_csv(deck_csv);
            emit(report::local_system_report(opt_n, rep, opt_middle_betti), json);
            return 0;
        }
        if (cmd_quadric->parsed()) {
            autos::QuadricAutoParams params;
            params.n = opt_n > 0 ? opt_n : 4;
            params.alpha = poly::parse_gaussian(alpha_text);
            params.beta = poly::parse_gaussian(beta_text);
            params.f = parse_univariate(f_text);
            bool both = variant_text == "both";
            if (!both)
                params.variant =
                    variant_text == "paper" ? autos::Variant::paper : autos::Variant::corrected;
            if (variant_text != "both" && variant_text != "paper" && variant_text != "corrected")
                throw std::invalid_argument("--variant must be paper, corrected or both");
            emit(report::quadric_report(params, both, probe, iterations, epsilon), json);
            return 0;
        }
        if (cmd_hodge->parsed()) {
            hopfcoh::E1Table table;
            table.n = opt_n;
            auto rows = split(e1_text, ';');
            if (static_cast<std::int64_t>(rows.size()) != opt_n + 1)
                throw std::invalid_argument("--e1 needs n+1 rows");
            for (std::int64_t p = 0; p <= opt_n; ++p) {
                auto entries = split(rows[static_cast<std::size_t>(p)], ',');
                if (static_cast<std::int64_t>(entries.size()) != opt_n + 1)
                    throw std::invalid_argument("--e1 rows need n+1 entries");
                for (std::int64_t q = 0; q <= opt_n; ++q) {
                    std::int64_t v = std::stoll(entries[static_cast<std::size_t>(q)]);
                    if (v != 0)
                        table.entries[{p, q}] = v;
                }
            }
            for (const auto& t : split(target_text, ','))
                table.target.push_back(std::stoll(t));
            emit(report::hodge_report(table), json);
            return 0;
        }
        if (cmd_analyze->parsed()) {
            SingularityInput s = resolve_singularity(exponents_csv, poly_text, toml);
            report::AnalyzeOptions options;
            options.exponents = s.exponents;
            options.input_echo = s.echo;
            if (!tau_text.empty())
                options.tau_override = big_from_string(tau_text);
            else if (toml && toml->tau)
                options.tau_override = toml->tau;
            if (!action_csv.empty())
                options.action = parse_matrix_csv(action_csv);
            else if (toml && toml->action)
                options.action = toml->action;
            options.finite_part = parse_matrix_list(finite_csv);
            if (toml && toml->bundle_p && opt_p < 0)
                opt_p = *toml->bundle_p;
            if (opt_p >= 0)
                options.bundle_p = opt_p;
            options.mode = parse_mode(mode_text);
            options.run_oracle = oracle;
            options.oracle_cap = cap;
            options.autos_k = opt_k;
            return finish_link_like(report::analyze_report(options), json);
        }
        std::cerr << "error: usage: no subcommand selected\n";
        return 2;
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: usage: " << e.what() << "\n";
        return 2;
    } catch (const ParseError& e) {
        std::cerr << "error: parse: " << e.what() << " (byte " << e.offset() << ")\n";
        return 2;
    } catch (const Refusal& e) {
        std::cerr << "error: " << e.code() << ": " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: usage: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: internal: " << e.what() << "\n";
        return 1;
    }
}
