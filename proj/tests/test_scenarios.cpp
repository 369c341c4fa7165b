#include <stdexcept>
#include <string>

#include "doctest.h"
#include "sghilb/format.hpp"
#include "sghilb/groebner.hpp"
#include "sghilb/scenarios.hpp"

using namespace sghilb;

namespace {

std::string message_of(const std::string& text) {
    try {
        parse_cases(text);
    } catch (const std::exception& e) {
        return e.what();
    }
    return "";
}

const char* kMinimalCase =
    "case tiny\n"
    "ring x y\n"
    "poly 1\n"
    "gotzmann 1\n"
    "hf 0 1\n"
    "borel A reg 1 tangent 1 : x\n"
    "end\n";

}  // namespace

TEST_CASE("the embedded dataset parses into five cases") {
    const auto& cases = builtin_cases();
    REQUIRE(cases.size() == 5);
    CHECK(cases[0].id == "gotzmann-h1");
    CHECK(cases[1].id == "gotzmann-h2");
    CHECK(cases[2].id == "plane-h1");
    CHECK(cases[3].id == "curves-4d-minus-1-h1");
    CHECK(cases[4].id == "twisted-h1");

    CHECK(find_case("plane-h1") == &cases[2]);
    CHECK(find_case("nope") == nullptr);
}

TEST_CASE("case contents land in the right slots") {
    const auto* c = find_case("plane-h1");
    REQUIRE(c != nullptr);
    CHECK(c->ctx.num_vars() == 3);
    CHECK(c->polynomial == HilbertPoly::constant(4));
    CHECK(c->gotzmann == 4);
    CHECK(c->h_ideal == std::vector<std::int64_t>{0, 0, 2, 6, 11, 17});

    REQUIRE(c->stable.size() == 2);
    CHECK(c->stable[0].name == "I0p");  // lex segment leads the list
    CHECK(c->stable[0].regularity == 4);
    CHECK(c->stable[0].tangent == 9);
    CHECK(c->saturated.size() == 2);
    CHECK(c->components.size() == 2);
    CHECK(c->saturations.size() == 2);
    CHECK(c->expansions.size() == 1);

    REQUIRE(c->specializations.size() == 2);
    CHECK(c->specializations[0].mode == SpecializationClaim::Mode::search);
    CHECK(c->specializations[1].mode == SpecializationClaim::Mode::grevlex);

    const auto* h1 = find_case("gotzmann-h1");
    REQUIRE(h1 != nullptr);
    REQUIRE(h1->specializations.size() == 3);
    CHECK(h1->specializations[1].mode == SpecializationClaim::Mode::weight);
    CHECK(h1->specializations[1].weight == std::vector<std::int64_t>{5, 1, 1, 1});

    const auto* h2 = find_case("gotzmann-h2");
    REQUIRE(h2 != nullptr);
    CHECK(h2->gammas.size() == 1);
    CHECK(h2->transforms.size() == 1);
    CHECK(h2->lex_initials.size() == 1);
    CHECK(h2->gin_equalities.size() == 1);
    REQUIRE(h2->families.size() == 4);
    CHECK(h2->families[3].kind == FamilySpec::Kind::complete_intersection);
    CHECK(h2->families[3].degrees == std::vector<int>{2, 2});
}

TEST_CASE("name resolution") {
    const auto* c = find_case("gotzmann-h1");
    REQUIRE(c != nullptr);
    CHECK(c->find_stable("I1") != nullptr);
    CHECK(c->find_stable("S1") == nullptr);
    CHECK(c->find_saturated("S1") != nullptr);
    CHECK(c->find_component("M0") != nullptr);
    CHECK(c->find_point("W") != nullptr);
    CHECK(c->find_family("m0") != nullptr);

    CHECK(c->resolve_ideal("M0").generators.size() == 6);
    CHECK(ideal_equal(c->resolve_ideal("I1"), c->find_stable("I1")->ideal.to_graded_ideal()));
    CHECK_THROWS_AS(c->resolve_ideal("nope"), std::out_of_range);
}

TEST_CASE("inline dataset text parses") {
    auto cases = parse_cases(kMinimalCase);
    REQUIRE(cases.size() == 1);
    CHECK(cases[0].id == "tiny");
    CHECK(cases[0].stable.size() == 1);
    CHECK(cases[0].stable[0].ideal == MonomialIdeal(cases[0].ctx, {Monomial(2, {1, 0})}));
    CHECK(parse_cases("").empty());
    CHECK(parse_cases("# only comments\n\n").empty());
}

TEST_CASE("parser failures name the offending line") {
    CHECK(message_of("case a\nring x y\npoly 1\ngotzmann 1\nhf 0 1\n"
                     "borel A reg 1 tangent 1 : x\n"
                     "borel A reg 1 tangent 1 : x\nend\n")
              .find("line 7: duplicate name 'A'") != std::string::npos);

    CHECK(message_of("case a\nwibble 3\nend\n").find("unknown keyword 'wibble'") !=
          std::string::npos);

    CHECK(message_of("case a\nring x y\npoly 1\ngotzmann 1\nhf 0 1\n"
                     "borel A reg 1 tangent 1 : x\nsaturation B = A\nend\n")
              .find("unknown ideal 'B'") != std::string::npos);

    // Non-invertible coordinate change.
    CHECK(message_of("case a\nring x y\npoly 1\ngotzmann 1\nhf 0 1\n"
                     "borel A reg 1 tangent 1 : x\n"
                     "gamma g : x -> x + y ; y -> x + y\nend\n")
              .find("line 7") != std::string::npos);

    // A borel entry that is not strongly stable.
    CHECK(message_of("case a\nring x y\npoly 1\ngotzmann 1\nhf 0 2\n"
                     "borel A reg 2 tangent 1 : y^2\nend\n")
              .find("not strongly stable") != std::string::npos);

    CHECK(message_of("case a\nring x y\nend\n").find("missing") != std::string::npos);
    CHECK(message_of("case a\nring x y\n").find("unterminated") != std::string::npos);
    CHECK(message_of("borel A reg 1 tangent 1 : x\n").find("expected 'case <id>'") !=
          std::string::npos);
    CHECK(message_of(kMinimalCase + std::string(kMinimalCase)).find("duplicate case id") !=
          std::string::npos);
}

TEST_CASE("run_case recomputes and confirms a full case") {
    const auto* c = find_case("plane-h1");
    REQUIRE(c != nullptr);
    auto report = run_case(*c);
    CHECK(report.case_id == "plane-h1");
    for (const auto& chk : report.checks) {
        CAPTURE(chk.name);
        CAPTURE(chk.expected);
        CAPTURE(chk.computed);
        CHECK(chk.pass);
    }
    CHECK(report.all_passed());
    CHECK(report.failures() == 0);
    CHECK(report.checks.size() == 32);
}

TEST_CASE("run_case flags a tampered expectation") {
    ScenarioCase copy = *find_case("plane-h1");
    copy.stable[0].tangent = 7;  // recorded value is 9
    auto report = run_case(copy);
    CHECK(report.failures() == 1);
    for (const auto& chk : report.checks) {
        if (chk.name == "tangent:I0p") {
            CHECK_FALSE(chk.pass);
            CHECK(chk.expected == "7");
            CHECK(chk.computed == "9");
        } else {
            CHECK(chk.pass);
        }
    }
}

TEST_CASE("family sampling is deterministic per seed") {
    const auto* c = find_case("plane-h1");
    REQUIRE(c != nullptr);
    auto a = sample_family_member(*c, "m1", 5);
    auto b = sample_family_member(*c, "m1", 5);
    REQUIRE(a.generators.size() == b.generators.size());
    for (std::size_t i = 0; i < a.generators.size(); ++i)
        CHECK(a.generators[i] == b.generators[i]);
    CHECK(hilbert_function(a, 5).h_ideal == c->h_ideal);

    const auto* h2 = find_case("gotzmann-h2");
    REQUIRE(h2 != nullptr);
    auto ci = sample_family_member(*h2, "m3", 1);
    CHECK(ci.generators.size() == 2);
    CHECK(ci.max_generator_degree() == 2);

    CHECK_THROWS_AS(sample_family_member(*c, "zeta", 1), std::runtime_error);
}
