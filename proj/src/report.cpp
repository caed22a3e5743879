#include "hopfcalc/report.hpp"

#include <algorithm>
#include <sstream>

namespace hopfcalc {
namespace report {

namespace {

Json envelope(const std::string& command) {
    Json j;
    j["schema"] = kSchema;
    j["command"] = command;
    return j;
}

Json exponents_json(const ExponentVector& a) {
    Json arr = Json::array();
    for (std::int64_t v : a.a)
        arr.push_back(v);
    return arr;
}

Json bigints_json(const std::vector<BigInt>& values) {
    Json arr = Json::array();
    for (const auto& v : values)
        arr.push_back(to_string(v));
    return arr;
}

Json betti_json(const std::vector<std::int64_t>& values) {
    Json arr = Json::array();
    for (std::int64_t v : values)
        arr.push_back(to_string(BigInt(v)));
    return arr;
}

Json matrix_json(const RationalMatrix& m) {
    Json rows = Json::array();
    for (std::int64_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::int64_t j = 0; j < m.cols(); ++j)
            row.push_back(m.at(i, j).get_str());
        rows.push_back(std::move(row));
    }
    return rows;
}

Json divisor_json(const link::CyclicDivisor& d) {
    Json arr = Json::array();
    // leading factor (largest m) first
    for (auto it = d.entries.rbegin(); it != d.entries.rend(); ++it) {
        Json entry;
        entry["m"] = to_string(it->first);
        entry["s"] = to_string(it->second);
        arr.push_back(std::move(entry));
    }
    return arr;
}

Json table_json(std::int64_t p, const std::optional<std::string>& mode,
                const hopfcoh::TableRow& row) {
    Json t;
    t["p"] = p;
    if (mode)
        t["mode"] = *mode;
    Json entries = Json::array();
    for (const auto& [q, entry] : row.dims)
        entries.push_back(entry.to_string());
    t["entries"] = std::move(entries);
    t["clipped"] = to_string(row.clipped);
    return t;
}

std::int64_t to_int64_checked(const BigInt& v, const std::string& what) {
    if (!v.fits_slong_p())
        throw Refusal("size", what + " does not fit in 64 bits");
    return v.get_si();
}

Json link_section(const ExponentVector& a, bool run_oracle, std::uint64_t cap,
                  std::vector<std::string>& warnings) {
    link::CyclicDivisor divisor = link::char_divisor(a);
    link::LinkReport lr = link::classify_link(a);
    Json j;
    j["exponents"] = exponents_json(a);
    j["link_dimension"] = lr.link_dimension;
    j["divisor"] = divisor_json(divisor);
    j["eig1_multiplicity"] = to_string(lr.eig1_multiplicity);
    if (lr.delta_at_one)
        j["delta_at_one"] = to_string(*lr.delta_at_one);
    else
        j["delta_at_one"] = nullptr;
    j["q_sphere"] = lr.q_sphere;
    j["z_sphere"] = lr.z_sphere;
    j["middle_betti"] = to_string(lr.middle_betti);
    j["sphere_caveat"] =
        lr.caveat == link::SphereCaveat::low_dimension ? "low_dimension" : "none";
    if (lr.caveat == link::SphereCaveat::low_dimension)
        warnings.push_back("link dimension " + std::to_string(lr.link_dimension) +
                           " is below 5: homology-sphere status is exact, but the upgrade to "
                           "a topological sphere needs dimension >= 5");
    if (run_oracle) {
        link::OracleResult oracle = link::brute_force_oracle(a, cap);
        Json o;
        o["multiplicity"] = to_string(BigInt(static_cast<unsigned long>(oracle.multiplicity)));
        bool mult_agrees =
            lr.eig1_multiplicity == BigInt(static_cast<unsigned long>(oracle.multiplicity));
        bool value_agrees = true;
        if (oracle.product) {
            o["log2_abs"] = oracle.product->log2_abs;
            o["arg"] = oracle.product->arg;
            if (lr.delta_at_one) {
                double err = link::oracle_relative_error(*lr.delta_at_one, *oracle.product);
                o["relative_error"] = err;
                value_agrees = err <= 1e-6;
            }
        }
        o["agrees"] = mult_agrees && value_agrees;
        j["oracle"] = std::move(o);
        if (!(mult_agrees && value_agrees))
            warnings.push_back("brute-force oracle disagrees with the divisor pipeline");
    }
    return j;
}

Json quotient_section(std::int64_t n, std::int64_t middle_betti,
                      const std::optional<RationalMatrix>& action,
                      const std::vector<RationalMatrix>& finite_part,
                      std::vector<std::string>& warnings) {
    if (middle_betti > 2000)
        throw Refusal("quotient-size",
                      "middle Betti number too large for explicit matrix bookkeeping");
    groupcoh::DeckAction deck;
    deck.n = n;
    deck.middle_betti = middle_betti;
    deck.action_mid = action ? *action : RationalMatrix::identity(middle_betti);
    deck.finite_part = finite_part;

    Json j;
    j["n"] = n;
    j["middle_betti"] = to_string(BigInt(middle_betti));
    j["action_provenance"] = action ? "user-supplied" : "default-identity";
    if (!action && middle_betti > 0)
        warnings.push_back("middle deck action defaulted to the identity; no formula for it "
                           "is available, pass --action to supply one");
    if (action)
        j["action"] = matrix_json(*action);
    j["betti"] = betti_json(groupcoh::quotient_betti(deck));
    j["is_homological_hopf"] = groupcoh::is_homological_hopf(deck);
    return j;
}

Json cohomology_section(std::int64_t n, const std::optional<BigInt>& tau,
                        const std::optional<std::int64_t>& only_p, TableMode mode, bool bvdv,
                        std::vector<std::string>& warnings) {
    Json j;
    j["n"] = n;
    j["kind"] = bvdv ? "bvdv" : "hopf";
    if (tau)
        j["tau"] = to_string(*tau);
    Json tables = Json::array();
    std::vector<std::int64_t> ps;
    if (only_p)
        ps.push_back(*only_p);
    else
        for (std::int64_t p = 0; p <= n; ++p)
            ps.push_back(p);
    bool modes_shown = false;
    for (std::int64_t p : ps) {
        if (!bvdv || p == 0) {
            tables.push_back(table_json(p, std::nullopt, hopfcoh::hopf_omega_table(n, p)));
            continue;
        }
        if (mode == TableMode::theorem || mode == TableMode::both)
            tables.push_back(table_json(
                p, "theorem", hopfcoh::bvdv_omega_table(n, p, hopfcoh::BvdvMode::theorem)));
        if (mode == TableMode::derivation || mode == TableMode::both)
            tables.push_back(table_json(
                p, "derivation", hopfcoh::bvdv_omega_table(n, p, hopfcoh::BvdvMode::derivation)));
        if (mode == TableMode::both)
            modes_shown = true;
    }
    j["tables"] = std::move(tables);
    if (tau) {
        Json cover = Json::array();
        for (std::int64_t p : ps) {
            Json row;
            row["p"] = p;
            Json entries = Json::array();
            for (const auto& [q, entry] : hopfcoh::cover_omega_dims(n, p, *tau))
                entries.push_back(entry.to_string());
            row["entries"] = std::move(entries);
            cover.push_back(std::move(row));
        }
        j["cover"] = std::move(cover);
    }
    if (modes_shown)
        warnings.push_back("theorem statement and internal derivation disagree on the finite "
                           "block's center (n-p-1 vs n-p); both tables are shown");
    return j;
}

Json local_system_section(std::int64_t n, const groupcoh::LocalSystemRep& rep,
                          std::int64_t middle_betti, std::vector<std::string>& warnings) {
    std::vector<std::int64_t> dims = groupcoh::local_system_cohomology(n, rep, middle_betti);
    Json j;
    j["n"] = n;
    j["rank"] = rep.rank;
    j["middle_betti"] = to_string(BigInt(middle_betti));
    j["dims"] = betti_json(dims);

    std::vector<std::int64_t> blanket(static_cast<std::size_t>(2 * n) + 1, 0);
    blanket[0] = blanket[1] = 1;
    blanket[static_cast<std::size_t>(2 * n - 1)] = blanket[static_cast<std::size_t>(2 * n)] = 1;
    if (dims != blanket)
        warnings.push_back(
            "local-system dimensions differ from the source's blanket claim "
            "(1,1,0,...,0,1,1); that claim matches trivial monodromy only, the general "
            "kernel/cokernel values are reported (see README, documented discrepancies)");
    return j;
}

Json autos_section(const ExponentVector& a, std::int64_t k) {
    autos::FinitenessResult f = autos::finiteness_condition(a, k);
    Json j;
    j["exponents"] = exponents_json(a);
    j["k"] = k;
    j["sum"] = f.sum.get_str();
    j["finite_automorphism_criterion"] = f.holds;
    return j;
}

Json gaussian_json(const GaussianRational& z) { return to_string(z); }

Json quadric_variant_section(const autos::QuadricAutoParams& params, bool probe,
                             std::int64_t iterations, double epsilon,
                             std::vector<std::string>& warnings) {
    autos::PolyMap map = autos::build_quadric_auto(params);
    Json j;
    j["variant"] = params.variant == autos::Variant::paper ? "paper" : "corrected";
    Json comps = Json::array();
    for (const auto& c : map.components)
        comps.push_back(poly::to_string(c));
    j["map"] = std::move(comps);

    autos::InvarianceResult inv = autos::verify_quadric_invariance(map, params.n);
    Json invariance;
    invariance["preserved"] = inv.preserved;
    invariance["multiplier"] = gaussian_json(inv.multiplier);
    invariance["residual"] = poly::to_string(inv.residual);
    j["invariance"] = std::move(invariance);
    if (!inv.preserved)
        warnings.push_back(
            std::string(params.variant == autos::Variant::paper ? "paper" : "corrected") +
            " variant does not preserve the quadric; residual " + poly::to_string(inv.residual));

    autos::JacobianSpectrum spectrum = autos::jacobian_spectrum(params);
    if (const auto* eigs = std::get_if<std::vector<GaussianRational>>(&spectrum)) {
        Json arr = Json::array();
        for (const auto& e : *eigs)
            arr.push_back(gaussian_json(e));
        j["jacobian_eigenvalues"] = std::move(arr);
        j["contracting"] = autos::contraction_check(*eigs);
    } else {
        const auto& cp = std::get<autos::CharPoly>(spectrum);
        Json arr = Json::array();
        for (const auto& c : cp.coeffs)
            arr.push_back(gaussian_json(c));
        j["jacobian_char_poly"] = std::move(arr);
    }

    if (probe) {
        std::vector<std::vector<std::complex<double>>> samples;
        std::size_t n = static_cast<std::size_t>(params.n);
        std::vector<std::complex<double>> e1(n, 0.0), e3(n, 0.0), mixed(n, 1.0);
        e1[0] = 1.0;
        e3[2] = 1.0;
        samples.push_back(e1);
        samples.push_back(e3);
        samples.push_back(mixed);
        Json verdicts = Json::array();
        for (const auto& v : autos::orbit_probe(map, samples, iterations, epsilon)) {
            Json s;
            s["rejected_origin"] = v.rejected_origin;
            s["reached_epsilon"] = v.reached_epsilon;
            s["norms_decreasing"] = v.norms_decreasing;
            s["near_fixed_point"] = v.near_fixed_point;
            s["final_norm"] = v.final_norm;
            s["min_displacement"] = v.min_displacement;
            s["iterations_run"] = v.iterations_run;
            verdicts.push_back(std::move(s));
        }
        j["orbit_probe"] = std::move(verdicts);
        j["orbit_probe_note"] = "numeric probe only; evidence, not a proof";
    }
    return j;
}

} // namespace

Json milnor_report(const ExponentVector& a, const std::optional<BigInt>& weight_count_cap) {
    Json j = envelope("milnor");
    j["input"] = {{"exponents", exponents_json(a)}};
    milnor::MilnorAlgebraDesc desc = milnor::describe(a);
    Json m;
    m["tau"] = to_string(desc.tau);
    Json bounds = Json::array();
    for (std::int64_t b : desc.basis_bounds)
        bounds.push_back(b);
    m["basis_bounds"] = std::move(bounds);
    m["fixed_subspace_dim"] = milnor::fixed_subspace_dim(a);
    if (weight_count_cap) {
        Json counts;
        for (const auto& [r, c] : milnor::scaling_weight_counts(a, *weight_count_cap))
            counts[r.get_str()] = to_string(c);
        m["weight_counts"] = std::move(counts);
    }
    j["milnor"] = std::move(m);
    j["warnings"] = Json::array();
    return j;
}

Json link_report(const ExponentVector& a, bool run_oracle, std::uint64_t cap) {
    Json j = envelope("link");
    j["input"] = {{"exponents", exponents_json(a)}};
    std::vector<std::string> warnings;
    j["link"] = link_section(a, run_oracle, cap, warnings);
    j["warnings"] = warnings;
    return j;
}

Json quotient_report(std::int64_t n, std::int64_t middle_betti,
                     const std::optional<RationalMatrix>& action,
                     const std::vector<RationalMatrix>& finite_part) {
    Json j = envelope("quotient");
    j["input"] = {{"n", n}, {"middle_betti", to_string(BigInt(middle_betti))}};
    std::vector<std::string> warnings;
    j["quotient"] = quotient_section(n, middle_betti, action, finite_part, warnings);
    j["warnings"] = warnings;
    return j;
}

Json cohomology_report(std::int64_t n, const std::optional<BigInt>& tau,
                       const std::optional<std::int64_t>& only_p, TableMode mode, bool bvdv) {
    Json j = envelope("cohomology");
    Json input;
    input["n"] = n;
    if (tau)
        input["tau"] = to_string(*tau);
    j["input"] = std::move(input);
    std::vector<std::string> warnings;
    j["cohomology"] = cohomology_section(n, tau, only_p, mode, bvdv, warnings);
    j["warnings"] = warnings;
    return j;
}

Json local_system_report(std::int64_t n, const groupcoh::LocalSystemRep& rep,
                         std::int64_t middle_betti) {
    Json j = envelope("local-system");
    j["input"] = {{"n", n}, {"rank", rep.rank}};
    std::vector<std::string> warnings;
    j["local_system"] = local_system_section(n, rep, middle_betti, warnings);
    j["warnings"] = warnings;
    return j;
}

Json autocheck_report(const ExponentVector& a, std::int64_t k) {
    Json j = envelope("autocheck");
    j["input"] = {{"exponents", exponents_json(a)}, {"k", k}};
    j["autos"] = autos_section(a, k);
    j["warnings"] = Json::array();
    return j;
}

Json quadric_report(const autos::QuadricAutoParams& params, bool both_variants, bool probe,
                    std::int64_t iterations, double epsilon) {
    Json j = envelope("quadric");
    Json f = Json::array();
    for (const auto& c : params.f)
        f.push_back(to_string(c));
    j["input"] = {{"n", params.n},
                  {"alpha", to_string(params.alpha)},
                  {"beta", to_string(params.beta)},
                  {"f", std::move(f)}};
    std::vector<std::string> warnings;
    Json variants = Json::array();
    if (both_variants) {
        autos::QuadricAutoParams p = params;
        p.variant = autos::Variant::paper;
        variants.push_back(quadric_variant_section(p, probe, iterations, epsilon, warnings));
        p.variant = autos::Variant::corrected;
        variants.push_back(quadric_variant_section(p, probe, iterations, epsilon, warnings));
    } else {
        variants.push_back(quadric_variant_section(params, probe, iterations, epsilon, warnings));
    }
    j["quadric"] = {{"variants", std::move(variants)}};
    j["warnings"] = warnings;
    return j;
}

Json hodge_report(const hopfcoh::E1Table& e1) {
    Json j = envelope("hodge");
    Json grid = Json::array();
    for (std::int64_t p = 0; p <= e1.n; ++p) {
        Json row = Json::array();
        for (std::int64_t q = 0; q <= e1.n; ++q)
            row.push_back(e1.at(p, q));
        grid.push_back(std::move(row));
    }
    Json target = Json::array();
    for (std::int64_t t : e1.target)
        target.push_back(t);
    j["input"] = {{"n", e1.n}, {"e1", grid}, {"target", target}};

    Json h;
    auto solution = hopfcoh::hodge_derham_feasible(e1);
    h["feasible"] = solution.has_value();
    if (solution) {
        Json ranks = Json::array();
        for (const auto& [pq, r] : *solution) {
            if (r == 0)
                continue;
            Json entry;
            entry["p"] = pq.first;
            entry["q"] = pq.second;
            entry["rank"] = r;
            ranks.push_back(std::move(entry));
        }
        h["d1_ranks"] = std::move(ranks);
        Json e2 = Json::array();
        auto rank_at = [&](std::int64_t p, std::int64_t q) -> std::int64_t {
            auto it = solution->find({p, q});
            return it == solution->end() ? 0 : it->second;
        };
        for (std::int64_t p = 0; p <= e1.n; ++p) {
            Json row = Json::array();
            for (std::int64_t q = 0; q <= e1.n; ++q)
                row.push_back(e1.at(p, q) - rank_at(p, q) - rank_at(p - 1, q));
            e2.push_back(std::move(row));
        }
        h["e2"] = std::move(e2);
    }
    j["hodge"] = std::move(h);
    j["warnings"] = Json::array();
    return j;
}

Json analyze_report(const AnalyzeOptions& options) {
    Json j = envelope("analyze");
    const ExponentVector& a = options.exponents;
    std::int64_t n = a.hypersurface_dim();

    Json input;
    input["exponents"] = exponents_json(a);
    if (!options.input_echo.empty())
        input["text"] = options.input_echo;
    if (options.tau_override)
        input["tau_override"] = to_string(*options.tau_override);
    j["input"] = std::move(input);

    std::vector<std::string> warnings;

    BigInt tau = options.tau_override ? *options.tau_override : milnor::milnor_number(a);
    if (options.tau_override)
        warnings.push_back("tau overridden by user input (complete-intersection pathway); "
                           "basis data reflects the Brieskorn-Pham exponents only");
    Json m;
    m["tau"] = to_string(tau);
    {
        milnor::MilnorAlgebraDesc desc = milnor::describe(a);
        Json bounds = Json::array();
        for (std::int64_t b : desc.basis_bounds)
            bounds.push_back(b);
        m["basis_bounds"] = std::move(bounds);
        m["fixed_subspace_dim"] = milnor::fixed_subspace_dim(a);
    }
    j["milnor"] = std::move(m);

    j["link"] = link_section(a, options.run_oracle, options.oracle_cap, warnings);
    BigInt mb = big_from_string(j["link"]["middle_betti"].get<std::string>());

    if (n >= 2) {
        std::int64_t b = to_int64_checked(mb, "middle Betti number");
        j["quotient"] = quotient_section(n, b, options.action, options.finite_part, warnings);
    } else {
        warnings.push_back("quotient Betti bookkeeping needs complex dimension n >= 2; skipped");
    }

    if (n >= 3) {
        j["cohomology"] =
            cohomology_section(n, tau, options.bundle_p, options.mode, true, warnings);
    } else {
        warnings.push_back("bundle-cohomology tables need n >= 3; skipped");
    }

    Json canonical;
    canonical["kind"] = "bvdv";
    canonical["coefficients"] = bigints_json(hopfcoh::canonical_divisor_bvdv(a).coefficients);
    j["canonical"] = std::move(canonical);

    if (n >= 3 && j.contains("quotient")) {
        std::int64_t b2 = 0;
        const auto& betti = j["quotient"]["betti"];
        if (betti.size() > 2)
            b2 = to_int64_checked(big_from_string(betti[2].get<std::string>()), "b2");
        hopfcoh::TableRow sheaf_row = hopfcoh::hopf_omega_table(n, 0);
        Json picard;
        picard["b2"] = b2;
        picard["statement"] = hopfcoh::to_string(hopfcoh::picard_statement(sheaf_row, b2));
        j["picard"] = std::move(picard);
    }

    j["autos"] = autos_section(a, options.autos_k);
    j["warnings"] = warnings;
    return j;
}

bool oracle_disagrees(const Json& report) {
    if (report.contains("link") && report["link"].contains("oracle"))
        return !report["link"]["oracle"]["agrees"].get<bool>();
    return false;
}

std::string to_json_string(const Json& report) { return report.dump(2) + "\n"; }

namespace {

void render_value(std::ostringstream& out, const std::string& key, const Json& value, int indent);

void render_object(std::ostringstream& out, const Json& obj, int indent) {
    for (const auto& [key, value] : obj.items())
        render_value(out, key, value, indent);
}

bool is_scalar_array(const Json& arr) {
    return std::all_of(arr.begin(), arr.end(),
                       [](const Json& v) { return !v.is_object() && !v.is_array(); });
}

std::string scalar_to_text(const Json& v) {
    if (v.is_string())
        return v.get<std::string>();
    return v.dump();
}

void render_value(std::ostringstream& out, const std::string& key, const Json& value,
                  int indent) {
    std::string pad(static_cast<std::size_t>(indent), ' ');
    if (value.is_object()) {
        out << pad << key << ":\n";
        render_object(out, value, indent + 2);
    } else if (value.is_array()) {
        if (is_scalar_array(value)) {
            out << pad << key << ": ";
            for (std::size_t i = 0; i < value.size(); ++i)
                out << (i ? " " : "") << scalar_to_text(value[i]);
            out << "\n";
        } else {
            out << pad << key << ":\n";
            for (const auto& item : value) {
                out << pad << "  -\n";
                render_object(out, item, indent + 4);
            }
        }
    } else {
        out << pad << key << ": " << scalar_to_text(value) << "\n";
    }
}

} // namespace

std::string render_text(const Json& report) {
    std::ostringstream out;
    render_object(out, report, 0);
    return out.str();
}

} // namespace report
} // namespace hopfcalc
