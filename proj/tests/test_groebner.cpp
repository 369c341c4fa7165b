#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "sghilb/format.hpp"
#include "sghilb/groebner.hpp"
#include "sghilb/parse.hpp"
#include "sghilb/scenarios.hpp"
#include "support.hpp"

using namespace sghilb;
using testsupport::ideal_of;
using testsupport::mono_ideal;

TEST_CASE("reduced basis of a binomial ideal") {
    auto ctx = RingContext::standard(2);
    auto I = ideal_of(ctx, "x^2 - y^2, x*y");
    auto gb = groebner_basis(I, MonomialOrder::grevlex());

    REQUIRE(gb.elements.size() == 3);
    CHECK(gb.reduced);
    // Sorted by leading monomial, ascending: xy < x^2 < y^3 under grevlex.
    CHECK(gb.elements[0] == parse_polynomial("x*y", ctx));
    CHECK(gb.elements[1] == parse_polynomial("x^2 - y^2", ctx));
    CHECK(gb.elements[2] == parse_polynomial("y^3", ctx));

    CHECK(initial_ideal(I, MonomialOrder::grevlex()) == mono_ideal(ctx, "x*y, x^2, y^3"));

    CHECK(normal_form(parse_polynomial("x^3", ctx), gb).is_zero());
    auto r = normal_form(parse_polynomial("x^3 + y^2", ctx), gb);
    CHECK(r == parse_polynomial("y^2", ctx));

    CHECK(ideal_contains(I, parse_polynomial("x^3", ctx)));
    CHECK(ideal_contains(gb, parse_polynomial("x^4 - y^4", ctx)));
    CHECK_FALSE(ideal_contains(I, parse_polynomial("y^2", ctx)));
}

TEST_CASE("normal form rejects a polynomial sorted under another order") {
    auto ctx = RingContext::standard(2);
    auto gb = groebner_basis(ideal_of(ctx, "x^2"), MonomialOrder::grevlex());
    auto p = parse_polynomial("x^2 + y^2", ctx, MonomialOrder::lex());
    CHECK_THROWS_AS(normal_form(p, gb), std::invalid_argument);
}

TEST_CASE("grevlex initial ideal of a deformed component representative") {
    // One generator is a binomial; its grevlex lead restores the stable ideal.
    auto ctx = RingContext::standard(4);
    auto M1 = ideal_of(ctx, "x^2 - x*t, x*y, x*z, y^4*z, y^5");
    CHECK(initial_ideal(M1, MonomialOrder::grevlex()) ==
          mono_ideal(ctx, "x^2, x*y, x*z, y^5, y^4*z"));
    // Under lex the same binomial degenerates the same way.
    CHECK(initial_ideal(M1, MonomialOrder::lex()) ==
          mono_ideal(ctx, "x^2, x*y, x*z, y^5, y^4*z"));
}

TEST_CASE("coordinate change matches the recorded transform") {
    const auto* c = find_case("gotzmann-h2");
    REQUIRE(c != nullptr);
    const auto* g = c->find_gamma("g");
    REQUIRE(g != nullptr);

    auto moved = apply_coordinate_change(c->resolve_ideal("M2"), g->change);
    CHECK(ideal_equal(moved, c->resolve_ideal("GK2")));

    // The recorded lex initial ideal of the transformed point.
    CHECK(initial_ideal(c->resolve_ideal("GK2"), MonomialOrder::lex()) ==
          c->find_stable("I0p")->ideal);

    // gamma: x -> x+t, y -> x+y, z -> x, t -> z, written as the matrix whose
    // column j is the image of variable j.
    CHECK(g->change.entry(0, 0) == 1);
    CHECK(g->change.entry(3, 0) == 1);
    CHECK(g->change.entry(0, 1) == 1);
    CHECK(g->change.entry(1, 1) == 1);
    CHECK(g->change.entry(0, 2) == 1);
    CHECK(g->change.entry(2, 3) == 1);
    CHECK(g->change.entry(1, 0) == 0);
    CHECK(g->change.is_invertible());
}

TEST_CASE("coordinate change rejects bad input") {
    auto ctx = RingContext::standard(2);
    auto I = ideal_of(ctx, "x^2");
    CoordinateChange singular(2, {1, 1, 1, 1});
    CHECK_THROWS_AS(apply_coordinate_change(I, singular), std::invalid_argument);
    CHECK_THROWS_AS(apply_coordinate_change(I, CoordinateChange::identity(3)),
                    std::invalid_argument);
    CHECK(ideal_equal(apply_coordinate_change(I, CoordinateChange::identity(2)), I));
}

TEST_CASE("taylor syzygies of a monomial generating set") {
    auto ctx = RingContext::standard(3);
    auto gens = parse_polynomial_list("x^2, x*y, y^3", ctx);
    auto syz = syzygy_generators(ctx, gens, MonomialOrder::grevlex());
    CHECK(syz.source == SyzygySource::taylor);  // default picks taylor on monomials
    CHECK(syz.generator_count == 3);
    CHECK(syz.syzygies.size() == 3);  // one exchange relation per pair

    for (const auto& s : syz.syzygies) {
        REQUIRE(s.size() == gens.size());
        auto sum = Polynomial::zero(MonomialOrder::grevlex());
        for (std::size_t i = 0; i < gens.size(); ++i) sum = sum + s[i] * gens[i];
        CHECK(sum.is_zero());
    }
}

TEST_CASE("schreyer syzygies cover non-monomial generators") {
    auto ctx = RingContext::standard(4);
    auto gens = parse_polynomial_list("x^2 - x*t, x*y, x*z, y^4*z, y^5", ctx);

    CHECK_THROWS_AS(syzygy_generators(ctx, gens, MonomialOrder::grevlex(), SyzygySource::taylor),
                    std::invalid_argument);

    auto syz = syzygy_generators(ctx, gens, MonomialOrder::grevlex());
    CHECK(syz.source == SyzygySource::schreyer);
    CHECK(syz.generator_count == 5);
    CHECK_FALSE(syz.syzygies.empty());
    for (const auto& s : syz.syzygies) {
        auto sum = Polynomial::zero(MonomialOrder::grevlex());
        for (std::size_t i = 0; i < gens.size(); ++i) sum = sum + s[i] * gens[i];
        CHECK(sum.is_zero());

        // Homogeneous columns: deg s[i] + deg gens[i] constant over nonzero entries.
        int total = -1;
        for (std::size_t i = 0; i < gens.size(); ++i) {
            if (s[i].is_zero()) continue;
            CHECK(s[i].is_homogeneous());
            int d = s[i].degree() + gens[i].degree();
            if (total < 0) total = d;
            CHECK(d == total);
        }
    }
}

TEST_CASE("ideal equality is membership both ways") {
    auto ctx = RingContext::standard(3);
    auto I = ideal_of(ctx, "x^2 - y^2, x*y");
    auto J = ideal_of(ctx, "x*y, y^3, x^2 - y^2");  // same ideal, redundant list
    CHECK(ideal_equal(I, J));
    CHECK_FALSE(ideal_equal(I, ideal_of(ctx, "x^2, x*y")));
    CHECK_THROWS_AS(ideal_equal(I, ideal_of(RingContext::standard(2), "x^2")),
                    std::invalid_argument);
}
