#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "sghilb/borel.hpp"
#include "sghilb/order.hpp"
#include "sghilb/scenarios.hpp"
#include "support.hpp"

using namespace sghilb;
using testsupport::mono_ideal;

TEST_CASE("borel partial order") {
    Monomial z2(3, {0, 0, 2}), xz(3, {1, 0, 1}), y2(3, {0, 2, 0}), x2(3, {2, 0, 0});
    CHECK(borel_leq(z2, xz));
    CHECK(borel_leq(z2, z2));
    CHECK(borel_leq(xz, x2));
    CHECK_FALSE(borel_leq(xz, z2));
    // y^2 and xz are incomparable.
    CHECK_FALSE(borel_leq(y2, xz));
    CHECK_FALSE(borel_leq(xz, y2));

    CHECK_THROWS_AS(borel_leq(z2, Monomial(3, {1, 0, 0})), std::invalid_argument);
    CHECK_THROWS_AS(borel_leq(z2, Monomial(2, {0, 2})), std::invalid_argument);

    // borel_leq(a, b) implies a <= b under lex: exhaust degree 3 in 4 vars.
    auto ctx = RingContext::standard(4);
    auto lex = MonomialOrder::lex();
    for (const auto& a : monomials_of_degree(ctx, 3, lex))
        for (const auto& b : monomials_of_degree(ctx, 3, lex))
            if (borel_leq(a, b)) CHECK(lex.compare(a, b) <= 0);
}

TEST_CASE("raising moves") {
    auto raises = borel_raises(Monomial(3, {1, 0, 1}));  // xz -> {x^2, xy}
    REQUIRE(raises.size() == 2);
    bool saw_x2 = false, saw_xy = false;
    for (const auto& m : raises) {
        saw_x2 = saw_x2 || m == Monomial(3, {2, 0, 0});
        saw_xy = saw_xy || m == Monomial(3, {1, 1, 0});
    }
    CHECK(saw_x2);
    CHECK(saw_xy);
    CHECK(borel_raises(Monomial(3, {3, 0, 0})).empty());
    CHECK(borel_raises(Monomial::one(3)).empty());
}

TEST_CASE("strong stability and witnesses") {
    auto ctx = RingContext::standard(3);
    CHECK(is_strongly_stable(mono_ideal(ctx, "x^2, x*y, y^3")));
    CHECK(is_strongly_stable(mono_ideal(ctx, "x^2, x*y, x*z^2, y^4")));
    CHECK_FALSE(is_strongly_stable(mono_ideal(ctx, "x^2, y^2")));

    auto w = strongly_stable_witness(mono_ideal(ctx, "x^2, y^2"));
    REQUIRE(w.has_value());
    CHECK(*w == Monomial(3, {1, 1, 0}));  // raising y^2 lands on xy, missing
    CHECK_FALSE(strongly_stable_witness(mono_ideal(ctx, "x^2, x*y, y^3")).has_value());
    CHECK(is_strongly_stable(MonomialIdeal(ctx, {})));
}

TEST_CASE("saturation of the recorded lex segments") {
    auto ctx = RingContext::standard(4);
    auto I0p = mono_ideal(ctx, "x^2, x*y, x*z, x*t^4, y^5, y^4*z^2");
    auto S0 = mono_ideal(ctx, "x, y^5, y^4*z^2");
    CHECK(saturate(I0p) == S0);
    CHECK(saturate_strongly_stable(I0p) == S0);
    CHECK_FALSE(is_saturated(I0p));
    CHECK(is_saturated(S0));

    auto T = mono_ideal(ctx, "x^2, x*y, x*z, x*t^2, y^4, y^3*z");
    CHECK(saturate(T) == mono_ideal(ctx, "x, y^4, y^3*z"));
    CHECK(saturate_strongly_stable(T) == saturate(T));

    CHECK_THROWS_AS(saturate_strongly_stable(mono_ideal(ctx, "y^2")), std::invalid_argument);

    // saturate handles non-stable input through the per-variable route:
    // z*(x, y, z) drops its irrelevant factor.
    auto ctx3 = RingContext::standard(3);
    CHECK(saturate(mono_ideal(ctx3, "x*z, y*z, z^2")) == mono_ideal(ctx3, "z"));
    CHECK(is_saturated(mono_ideal(RingContext::standard(2), "x^2")));
    CHECK(saturate(MonomialIdeal(ctx3, {})).is_zero_ideal());
}

TEST_CASE("strongly stable enumeration by hilbert function") {
    auto ctx = RingContext::standard(3);
    std::vector<std::int64_t> h{0, 0, 2, 6, 11, 17};
    auto result = enumerate_borel_with_hf(ctx, h);
    CHECK(result.complete);
    REQUIRE(result.ideals.size() == 2);
    CHECK(result.ideals[0] == mono_ideal(ctx, "x^2, x*y, x*z^2, y^4"));  // lex segment first
    CHECK(result.ideals[1] == mono_ideal(ctx, "x^2, x*y, y^3"));
    CHECK(result.h_ideal == h);
    for (const auto& I : result.ideals) CHECK(is_strongly_stable(I));

    auto capped = enumerate_borel_with_hf(ctx, h, std::nullopt, 1);
    CHECK_FALSE(capped.complete);
}

TEST_CASE("saturated enumeration by hilbert polynomial") {
    auto ctx = RingContext::standard(4);
    auto p = HilbertPoly::parse("3*d + 1");
    auto result = enumerate_saturated_borel_with_hp(ctx, p, 4);
    CHECK(result.complete);
    REQUIRE(result.ideals.size() == 3);
    CHECK(result.ideals[0] == mono_ideal(ctx, "x, y^4, y^3*z"));
    CHECK(result.ideals[1] == mono_ideal(ctx, "x^2, x*y, x*z, y^3"));
    CHECK(result.ideals[2] == mono_ideal(ctx, "x^2, x*y, y^2"));
    for (const auto& I : result.ideals) {
        CHECK(is_saturated(I));
        auto hd = hilbert_function(I, 8);
        CHECK(hd.h_quotient(8) == p.eval(8));
    }
}

TEST_CASE("expansions recover the non-saturated stratum members") {
    const auto* c = find_case("gotzmann-h1");
    REQUIRE(c != nullptr);
    auto S0 = c->find_saturated("S0")->ideal;
    auto expansions = nonsat_expansions(S0, c->h_ideal);
    REQUIRE(expansions.size() == 1);
    CHECK(expansions[0] == c->find_stable("I0p")->ideal);

    // S3 = <x^2, x*y, y^3> has quotient polynomial 4d but the wrong function,
    // so it admits no expansion on this stratum.
    auto S3 = c->find_saturated("S3")->ideal;
    CHECK(nonsat_expansions(S3, c->h_ideal).empty());
}

TEST_CASE("every dataset case enumerates completely") {
    for (const auto& c : builtin_cases()) {
        auto byhf = enumerate_borel_with_hf(c.ctx, c.h_ideal);
        CHECK(byhf.complete);
        CHECK(byhf.ideals.size() == c.stable.size());

        auto bysat = enumerate_saturated_borel_with_hp(c.ctx, c.polynomial, c.gotzmann);
        CHECK(bysat.complete);
        CHECK(bysat.ideals.size() == c.saturated.size());
    }
}
