#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "sghilb/monomial.hpp"
#include "sghilb/order.hpp"
#include "sghilb/ring.hpp"

using namespace sghilb;

TEST_CASE("standard rings use short names through four variables") {
    auto r3 = RingContext::standard(3);
    CHECK(r3.num_vars() == 3);
    CHECK(r3.var_name(0) == "x");
    CHECK(r3.var_name(2) == "z");
    CHECK(r3.var_index("y") == 1);
    CHECK(r3.var_index("t") == -1);

    auto r4 = RingContext::standard(4);
    CHECK(r4.var_name(3) == "t");

    auto r5 = RingContext::standard(5);
    CHECK(r5.var_name(0) == "x0");
    CHECK(r5.var_name(4) == "x4");

    CHECK(r3 != r4);
    CHECK(r3 == RingContext({"x", "y", "z"}));
}

TEST_CASE("ring validation rejects bad variable lists") {
    CHECK_THROWS_AS(RingContext({}), std::invalid_argument);
    CHECK_THROWS_AS(RingContext({"x", "x"}), std::invalid_argument);
    CHECK_THROWS_AS(RingContext({"x", ""}), std::invalid_argument);
    CHECK_THROWS_AS(RingContext::standard(0), std::invalid_argument);
    CHECK_THROWS_AS(RingContext::standard(kMaxVars + 1), std::invalid_argument);

    auto r = RingContext::standard(2);
    CHECK(r.max_total_degree() == 16);
    r.set_max_total_degree(40);
    CHECK(r.max_total_degree() == 40);
    CHECK_THROWS_AS(r.set_max_total_degree(0), std::invalid_argument);
}

TEST_CASE("monomial arithmetic") {
    Monomial xz(3, {1, 0, 1});
    Monomial yy(3, {0, 2, 0});
    CHECK(xz.degree() == 2);
    CHECK(Monomial::one(3).is_one());
    CHECK(Monomial::variable(3, 1, 4) == Monomial(3, {0, 4, 0}));

    auto prod = xz * yy;
    CHECK(prod == Monomial(3, {1, 2, 1}));
    CHECK(prod.divide_exact(yy) == xz);
    CHECK_THROWS_AS(xz.divide_exact(yy), std::invalid_argument);

    CHECK(xz.divides(prod));
    CHECK_FALSE(prod.divides(xz));
    CHECK(xz.coprime_with(yy));
    CHECK_FALSE(xz.coprime_with(prod));

    CHECK(Monomial::lcm(xz, yy) == Monomial(3, {1, 2, 1}));
    CHECK(Monomial::gcd(prod, xz) == xz);
    CHECK(xz.times_var(2, 3) == Monomial(3, {1, 0, 4}));
}

TEST_CASE("exponents are capped at 255") {
    Monomial m(2);
    CHECK_THROWS_AS(m.set_exponent(0, 256), std::invalid_argument);
    CHECK_THROWS_AS(m.set_exponent(0, -1), std::invalid_argument);
    m.set_exponent(0, 200);
    Monomial n(2, {100, 0});
    CHECK_THROWS_AS(m * n, std::overflow_error);
}

TEST_CASE("lex and grevlex disagree exactly where they should") {
    // Three variables: y^3 beats x*z^2 under grevlex (smaller trailing
    // exponent), loses under lex (smaller leading exponent).
    Monomial y3(3, {0, 3, 0}), xz2(3, {1, 0, 2});
    CHECK(MonomialOrder::grevlex().greater(y3, xz2));
    CHECK(MonomialOrder::lex().less(y3, xz2));

    // Four variables: the same split for y^4*z vs x*t^4.
    Monomial y4z(4, {0, 4, 1, 0}), xt4(4, {1, 0, 0, 4});
    CHECK(MonomialOrder::grevlex().greater(y4z, xt4));
    CHECK(MonomialOrder::lex().greater(xt4, y4z));

    // Degree dominates everything under grevlex.
    CHECK(MonomialOrder::grevlex().greater(Monomial(3, {0, 0, 3}), Monomial(3, {2, 0, 0})));
}

TEST_CASE("weight orders break ties and validate input") {
    auto w = MonomialOrder::weight({5, 1, 1, 1});
    Monomial xz2(4, {1, 0, 2, 0}), y3(4, {0, 3, 0, 0});
    CHECK(w.greater(xz2, y3));  // weights 7 vs 3

    // Equal weight falls through to the tie-break.
    auto wz = MonomialOrder::weight({0, 0, 0, 0}, OrderKind::lex);
    Monomial y4z(4, {0, 4, 1, 0}), xt4(4, {1, 0, 0, 4});
    CHECK(wz.greater(xt4, y4z));

    CHECK_THROWS_AS(MonomialOrder::weight({}), std::invalid_argument);
    CHECK_THROWS_AS(MonomialOrder::weight({1, 2}, OrderKind::weight), std::invalid_argument);
    CHECK_THROWS_AS(w.compare(Monomial(3), Monomial(3)), std::invalid_argument);
    CHECK_THROWS_AS(MonomialOrder::grevlex().compare(Monomial(3), Monomial(4)),
                    std::invalid_argument);

    CHECK(MonomialOrder::weight({1, 2}) == MonomialOrder::weight({1, 2}));
    CHECK(MonomialOrder::weight({1, 2}) != MonomialOrder::weight({1, 2}, OrderKind::lex));
    CHECK(MonomialOrder::lex() != MonomialOrder::grevlex());
}

TEST_CASE("a zero weight vector with grevlex tie-break is plain grevlex") {
    auto ctx = RingContext::standard(3);
    auto zero = MonomialOrder::weight({0, 0, 0});
    auto grevlex = MonomialOrder::grevlex();
    for (int d = 1; d <= 4; ++d) {
        auto monos = monomials_of_degree(ctx, d, grevlex);
        for (std::size_t i = 0; i < monos.size(); ++i)
            for (std::size_t j = 0; j < monos.size(); ++j)
                CHECK(zero.compare(monos[i], monos[j]) == grevlex.compare(monos[i], monos[j]));
    }
}

TEST_CASE("monomials_of_degree is complete and strictly descending") {
    auto ctx = RingContext::standard(3);
    for (const auto& ord : {MonomialOrder::lex(), MonomialOrder::grevlex(),
                            MonomialOrder::weight({3, 1, 2})}) {
        auto monos = monomials_of_degree(ctx, 4, ord);
        CHECK(static_cast<int>(monos.size()) == 15);
        for (const auto& m : monos) CHECK(m.degree() == 4);
        for (std::size_t i = 0; i + 1 < monos.size(); ++i)
            CHECK(ord.greater(monos[i], monos[i + 1]));
    }
}
