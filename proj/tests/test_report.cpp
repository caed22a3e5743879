#include "hopfcalc/report.hpp"
#include "hopfcalc/tomlmini.hpp"

#include <doctest.h>

using namespace hopfcalc;

TEST_CASE("toml subset reader") {
    std::string text =
        "# comment\n"
        "[singularity]\n"
        "exponents = [2, 3, 5]\n"
        "poly = \"z0^2 + z1^2\"\n"
        "\n"
        "[quotient]\n"
        "action = [[1, 0], [0, \"1/2\"]]\n"
        "[bundle]\n"
        "p = 2\n";
    tomlmini::Document doc = tomlmini::parse(text);
    const auto* exps = doc.find("singularity", "exponents");
    REQUIRE(exps != nullptr);
    REQUIRE(exps->is_array());
    CHECK(exps->items.size() == 3);
    CHECK(exps->items[1].integer == 3);
    CHECK(doc.find("singularity", "poly")->str == "z0^2 + z1^2");
    const auto* action = doc.find("quotient", "action");
    REQUIRE(action != nullptr);
    CHECK(action->items[1].items[1].str == "1/2");
    CHECK(doc.find("bundle", "p")->integer == 2);
    CHECK(doc.find("bundle", "tau") == nullptr);

    CHECK_THROWS_AS(tomlmini::parse("[unclosed\n"), ParseError);
    CHECK_THROWS_AS(tomlmini::parse("key 5\n"), ParseError);
    CHECK_THROWS_AS(tomlmini::parse("a = [1, \n"), ParseError);
    CHECK_THROWS_AS(tomlmini::parse("a = 1\na = 2\n"), ParseError);
}

TEST_CASE("link report carries the expected fields") {
    report::Json j = report::link_report(ExponentVector({2, 3, 5}), true, 100000);
    CHECK(j["schema"] == "hopfcalc/1");
    CHECK(j["link"]["delta_at_one"] == "1");
    CHECK(j["link"]["z_sphere"] == true);
    CHECK(j["link"]["oracle"]["agrees"] == true);
    CHECK_FALSE(report::oracle_disagrees(j));
    // big integers are serialized as decimal strings
    CHECK(j["link"]["eig1_multiplicity"].is_string());
    CHECK(j["link"]["middle_betti"].is_string());
}

TEST_CASE("json serialization round-trips byte for byte") {
    report::AnalyzeOptions options;
    options.exponents = ExponentVector({2, 2, 2, 2});
    options.input_echo = "2,2,2,2";
    options.run_oracle = true;
    report::Json j = report::analyze_report(options);
    std::string serialized = report::to_json_string(j);
    report::Json reparsed = report::Json::parse(serialized);
    CHECK(report::to_json_string(reparsed) == serialized);
    // a second build of the same report is byte-identical
    CHECK(report::to_json_string(report::analyze_report(options)) == serialized);
}

TEST_CASE("analyze report wires the sections together") {
    report::AnalyzeOptions options;
    options.exponents = ExponentVector({2, 2, 2, 2});
    report::Json j = report::analyze_report(options);
    CHECK(j["milnor"]["tau"] == "1");
    CHECK(j["link"]["middle_betti"] == "1");
    CHECK(j["quotient"]["action_provenance"] == "default-identity");
    CHECK(j["quotient"]["betti"][3] == "2");
    CHECK(j["quotient"]["is_homological_hopf"] == false);
    CHECK(j["canonical"]["coefficients"][0] == "-2");
    CHECK(j["picard"]["statement"] == "undetermined"); // b2 = 1 here
    bool has_default_warning = false;
    for (const auto& w : j["warnings"])
        if (w.get<std::string>().find("default") != std::string::npos)
            has_default_warning = true;
    CHECK(has_default_warning);

    // a Q-sphere input: picard resolves and the quotient is homological Hopf
    report::AnalyzeOptions sphere;
    sphere.exponents = ExponentVector({2, 3, 5, 7});
    report::Json s = report::analyze_report(sphere);
    if (s["link"]["q_sphere"] == true) {
        CHECK(s["quotient"]["is_homological_hopf"] == true);
        CHECK(s["picard"]["statement"] == "Pic = C*");
    }
}

TEST_CASE("local system report warns on the documented discrepancy") {
    groupcoh::LocalSystemRep trivial{1, RationalMatrix::identity(1), std::nullopt};
    report::Json ok = report::local_system_report(2, trivial, 0);
    CHECK(ok["local_system"]["dims"] ==
          report::Json::array({"1", "1", "0", "1", "1"}));
    CHECK(ok["warnings"].empty());

    groupcoh::LocalSystemRep twisted{1, RationalMatrix(1, 1), std::nullopt};
    twisted.rho_t.at(0, 0) = Rational(2);
    report::Json warned = report::local_system_report(2, twisted, 0);
    CHECK(warned["local_system"]["dims"] ==
          report::Json::array({"0", "0", "0", "0", "0"}));
    REQUIRE(warned["warnings"].size() == 1);
    CHECK(warned["warnings"][0].get<std::string>().find("blanket claim") != std::string::npos);
}

TEST_CASE("cohomology report prints both modes with a warning") {
    report::Json j =
        report::cohomology_report(5, BigInt(8), std::nullopt, report::TableMode::both, true);
    CHECK(j["cohomology"]["tables"].size() == 1 + 2 * 5); // p=0 once, p>=1 twice
    REQUIRE(j["warnings"].size() == 1);
    CHECK(j["warnings"][0].get<std::string>().find("disagree") != std::string::npos);
    // cover rows are included when tau is known
    CHECK(j["cohomology"]["cover"].size() == 6);
}

TEST_CASE("text rendering is non-empty and deterministic") {
    report::Json j = report::link_report(ExponentVector({2, 2, 2}), false, 1000);
    std::string text = report::render_text(j);
    CHECK(text.find("delta_at_one: 2") != std::string::npos);
    CHECK(text == report::render_text(j));
}
