#include <random>
#include <stdexcept>

#include "doctest.h"
#include "sghilb/geometry.hpp"
#include "sghilb/groebner.hpp"
#include "sghilb/scenarios.hpp"
#include "support.hpp"

using namespace sghilb;
using testsupport::ideal_of;
using testsupport::mono_ideal;

TEST_CASE("random coordinate changes are bounded, invertible, reproducible") {
    std::mt19937_64 rng(7);
    auto g = random_coordinate_change(4, rng, 5);
    CHECK(g.is_invertible());
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            CHECK(g.entry(i, j) <= 5);
            CHECK(g.entry(i, j) >= -5);
        }

    std::mt19937_64 rng2(7);
    CHECK(g == random_coordinate_change(4, rng2, 5));
}

TEST_CASE("generic initial ideal of a line and of a deformed representative") {
    auto ctx2 = RingContext::standard(2);
    auto g = gin(ideal_of(ctx2, "y"));
    CHECK(g.agreed);
    CHECK(g.ideal == mono_ideal(ctx2, "x"));

    const auto* c = find_case("gotzmann-h1");
    REQUIRE(c != nullptr);
    auto gm = gin(c->resolve_ideal("M1"));
    CHECK(gm.agreed);
    CHECK(gm.ideal == c->find_stable("I1")->ideal);
    CHECK(is_strongly_stable(gm.ideal));

    CHECK_THROWS_AS(gin(ideal_of(ctx2, "y"), MonomialOrder::grevlex(), 1, 1),
                    std::invalid_argument);
}

TEST_CASE("gin agreement is recorded, not assumed") {
    auto ctx = RingContext::standard(2);
    auto g = gin(ideal_of(ctx, "x^2, y^3"), MonomialOrder::grevlex(), kDefaultGinSeed, 4);
    CHECK(g.trials == 4);
    CHECK(g.seed == kDefaultGinSeed);
    CHECK(g.agreed);
    // hf is preserved by the generic change of coordinates.
    CHECK(hilbert_function(g.ideal, 5).h_ideal ==
          hilbert_function(mono_ideal(ctx, "x^2, y^3"), 5).h_ideal);
}

TEST_CASE("tangent space of a hyperplane") {
    auto I = mono_ideal(RingContext::standard(4), "x");
    auto t = tangent_dimension(I);
    CHECK(t.dimension == 3);
    CHECK(t.unknown_count == 3);
    CHECK(t.constraint_rank == 0);
    CHECK(t.syzygy_source == SyzygySource::taylor);
}

TEST_CASE("tangent dimensions match the frozen dataset values") {
    const auto* c = find_case("gotzmann-h1");
    REQUIRE(c != nullptr);
    CHECK(tangent_dimension(c->find_stable("I1")->ideal).dimension == 24);
    CHECK(tangent_dimension(c->find_stable("I0p")->ideal).dimension == 25);
    CHECK(tangent_dimension(c->resolve_ideal("M1")).dimension == 22);
}

TEST_CASE("the tangent dimension is presentation independent") {
    auto ctx = RingContext::standard(3);
    auto I = mono_ideal(ctx, "x^2, x*y, x*z^2, y^4");
    auto taylor = tangent_dimension(I, SyzygySource::taylor);
    auto schreyer = tangent_dimension(I, SyzygySource::schreyer);
    CHECK(taylor.dimension == schreyer.dimension);
    CHECK(taylor.dimension == 9);

    // The graded overload routes monomial input to the taylor presentation.
    auto routed = tangent_dimension(I.to_graded_ideal());
    CHECK(routed.syzygy_source == SyzygySource::taylor);
    CHECK(routed.dimension == 9);

    // Non-monomial generators cannot take the taylor presentation.
    const auto* c = find_case("gotzmann-h1");
    REQUIRE(c != nullptr);
    CHECK_THROWS_AS(tangent_dimension(c->resolve_ideal("M1"), SyzygySource::taylor),
                    std::invalid_argument);
}

TEST_CASE("weight initial ideals and the degeneration search") {
    const auto* c = find_case("gotzmann-h2");
    REQUIRE(c != nullptr);
    auto Q3 = c->resolve_ideal("Q3");
    auto I2 = c->find_stable("I2")->ideal;

    CHECK(weight_initial_ideal(Q3, WeightVector{{5, 1, 1, 1}, OrderKind::grevlex}) == I2);
    // A zero weight vector with grevlex tie-break is the grevlex fibre, which
    // is a different ideal here.
    CHECK(weight_initial_ideal(Q3, WeightVector{{0, 0, 0, 0}, OrderKind::grevlex}) != I2);

    auto w = find_specialization_weight(Q3, I2);
    REQUIRE(w.has_value());
    CHECK(w->entries == std::vector<std::int64_t>{0, 0, 1, 0});
    CHECK(weight_initial_ideal(Q3, *w) == I2);

    // Every weight fibre keeps the Hilbert function, so a target with
    // dim_2 = 3 is out of reach from dim_2 = 2.
    auto off = mono_ideal(c->ctx, "x^2, x*y, y^2");
    CHECK_FALSE(find_specialization_weight(Q3, off, 2).has_value());
}

TEST_CASE("specialization witnesses carry the full flatness check") {
    const auto* c = find_case("gotzmann-h1");
    REQUIRE(c != nullptr);
    auto W = c->resolve_ideal("W");
    auto I0p = c->find_stable("I0p")->ideal;

    auto chk = verify_specialization(W, I0p, WeightVector{{5, 1, 1, 1}, OrderKind::grevlex});
    CHECK(chk.ok());
    CHECK(chk.initial_matches);
    CHECK(chk.hilbert_matches);
    CHECK(chk.tangent_semicontinuous);
    CHECK(chk.tangent_at_ideal == 22);
    CHECK(chk.tangent_at_target == 25);

    // The same weight does not send M1 to I0p: wrong special fibre.
    auto M1 = c->resolve_ideal("M1");
    auto bad = verify_specialization(M1, I0p, WeightVector{{0, 0, 0, 0}, OrderKind::grevlex});
    CHECK_FALSE(bad.initial_matches);
    CHECK_FALSE(bad.ok());
}

TEST_CASE("regularity of general ideals goes through gin") {
    const auto* c = find_case("gotzmann-h1");
    REQUIRE(c != nullptr);
    // Strongly stable input short-circuits to the top generator degree.
    CHECK(regularity(c->find_stable("I0p")->ideal.to_graded_ideal()) == 6);
    CHECK(regularity(c->resolve_ideal("M1")) == 5);

    // A sampled complete intersection of two quadrics has regularity 3.
    const auto* h2 = find_case("gotzmann-h2");
    REQUIRE(h2 != nullptr);
    auto ci = sample_family_member(*h2, "m3", 11);
    CHECK(regularity(ci) == 3);
}
