#pragma once

// Helpers shared by the unit suites and the acceptance gate: ideal literals
// over a ring, a seeded random-ideal source, and the invariance battery run
// both on random ideals and on the shipped dataset.

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <unordered_set>
#include <vector>

#include "sghilb/borel.hpp"
#include "sghilb/format.hpp"
#include "sghilb/geometry.hpp"
#include "sghilb/groebner.hpp"
#include "sghilb/hilbert.hpp"
#include "sghilb/parse.hpp"
#include "sghilb/scenarios.hpp"

namespace testsupport {

using namespace sghilb;

inline GradedIdeal ideal_of(const RingContext& ctx, const std::string& gens) {
    return GradedIdeal(ctx, parse_polynomial_list(gens, ctx));
}

inline MonomialIdeal mono_ideal(const RingContext& ctx, const std::string& gens) {
    std::vector<Monomial> ms;
    for (const auto& p : parse_polynomial_list(gens, ctx)) ms.push_back(p.leading_monomial());
    return MonomialIdeal(ctx, std::move(ms));
}

// Random homogeneous ideals in 2 or 3 variables: 1..3 generators of degree
// 1..6 with coefficients in [-9, 9], a quarter of them purely monomial.
class RandomIdeals {
public:
    explicit RandomIdeals(std::uint64_t seed) : rng_(seed) {}

    std::mt19937_64& rng() { return rng_; }

    Polynomial form(const RingContext& ctx, int degree, bool monomial_only) {
        auto monos = monomials_of_degree(ctx, degree, MonomialOrder::grevlex());
        if (monomial_only)
            return Polynomial::monomial_term(1, monos[rng_() % monos.size()],
                                             MonomialOrder::grevlex());
        for (;;) {
            std::vector<Term> terms;
            for (const auto& m : monos) {
                long c = static_cast<long>(rng_() % 19) - 9;
                if (c != 0) terms.push_back(Term{mpq_class(c), m});
            }
            if (!terms.empty())
                return Polynomial::from_terms(std::move(terms), MonomialOrder::grevlex());
        }
    }

    GradedIdeal next() {
        RingContext ctx = RingContext::standard(2 + static_cast<int>(rng_() % 2));
        bool monomial_only = (rng_() % 4) == 0;
        int count = 1 + static_cast<int>(rng_() % 3);
        std::vector<Polynomial> gens;
        for (int i = 0; i < count; ++i)
            gens.push_back(form(ctx, 1 + static_cast<int>(rng_() % 6), monomial_only));
        return GradedIdeal(ctx, std::move(gens));
    }

private:
    std::mt19937_64 rng_;
};

struct BatteryResult {
    int ideals = 0;
    int checks = 0;
    std::vector<std::string> failures;

    bool ok() const { return failures.empty(); }
};

// Reachability oracle for the Borel partial order: b is above a when b can
// be reached from a by raising moves.
inline bool borel_leq_bfs(const Monomial& a, const Monomial& b) {
    std::unordered_set<Monomial, MonomialHash> seen{a};
    std::vector<Monomial> frontier{a};
    while (!frontier.empty()) {
        std::vector<Monomial> next;
        for (const auto& m : frontier) {
            if (m == b) return true;
            for (const auto& r : borel_raises(m))
                if (seen.insert(r).second) next.push_back(r);
        }
        frontier = std::move(next);
    }
    return false;
}

namespace detail {

inline void expect(BatteryResult& r, bool pass, const std::string& what) {
    ++r.checks;
    if (!pass) r.failures.push_back(what);
}

// The invariance checks run on one ideal: Groebner flatness under several
// orders, tangent semicontinuity at the grevlex fibre, gin stability,
// flatness and idempotence, presentation independence of the tangent space,
// and the strongly stable saturation shortcut.
inline void check_one(BatteryResult& r, const GradedIdeal& I, std::mt19937_64& rng,
                      const std::string& tag) {
    const auto grevlex = MonomialOrder::grevlex();
    int depth = std::min(I.max_generator_degree() + 3, I.ctx.max_total_degree());
    auto h = hilbert_function(I, depth).h_ideal;

    auto in_lex = initial_ideal(I, MonomialOrder::lex());
    expect(r, hilbert_function(in_lex, depth).h_ideal == h, tag + ": lex flatness");
    auto in_grev = initial_ideal(I, grevlex);
    expect(r, hilbert_function(in_grev, depth).h_ideal == h, tag + ": grevlex flatness");

    std::vector<std::int64_t> w;
    for (int i = 0; i < I.ctx.num_vars(); ++i)
        w.push_back(static_cast<std::int64_t>(rng() % 4));
    auto in_w = weight_initial_ideal(I, WeightVector{w, OrderKind::grevlex});
    expect(r, hilbert_function(in_w, depth).h_ideal == h, tag + ": weight flatness");

    // The Schreyer-presented tangent computation on a dense rational ideal
    // explodes with the reduced basis (23 elements and syzygies of degree 20
    // for three dense sextics in 3 variables), so tangent checks stay on
    // shapes where the presentation is tame; flatness and gin cover the rest.
    bool tangent_tractable = I.ctx.num_vars() <= 2 || I.all_generators_monomial();
    if (!tangent_tractable) {
        auto gb = groebner_basis(I, grevlex);
        int top = 0;
        for (const auto& p : gb.elements) top = std::max(top, p.degree());
        tangent_tractable = gb.elements.size() <= 10 && top <= 8;
    }
    std::int64_t t_ideal = -1;
    if (tangent_tractable) {
        t_ideal = tangent_dimension(I).dimension;
        expect(r, tangent_dimension(in_grev).dimension >= t_ideal,
               tag + ": tangent semicontinuity at the grevlex fibre");
    }

    // A single trial lands on a non-generic coordinate change with small but
    // real probability at this entry range, so disagreement earns a reseed;
    // only persistent disagreement is a failure.
    auto robust_gin = [&](const GradedIdeal& J) {
        auto g = gin(J, grevlex, 1 + static_cast<std::uint64_t>(rng()), 2);
        for (int attempt = 1; attempt < 4 && !g.agreed; ++attempt)
            g = gin(J, grevlex, 1 + static_cast<std::uint64_t>(rng()), 2);
        return g;
    };
    auto g = robust_gin(I);
    expect(r, g.agreed, tag + ": gin trials agree");
    if (g.agreed) {
        expect(r, is_strongly_stable(g.ideal), tag + ": gin strongly stable");
        expect(r, hilbert_function(g.ideal, depth).h_ideal == h, tag + ": gin flatness");
        auto gg = robust_gin(g.ideal.to_graded_ideal());
        expect(r, gg.agreed && gg.ideal == g.ideal, tag + ": gin idempotent");
        if (tangent_tractable)
            expect(r, tangent_dimension(g.ideal).dimension >= t_ideal,
                   tag + ": tangent semicontinuity at the generic fibre");
        if (is_strongly_stable(g.ideal))
            expect(r, saturate(g.ideal) == saturate_strongly_stable(g.ideal),
                   tag + ": strongly stable saturation shortcut");
    }

    expect(r,
           tangent_dimension(in_grev, SyzygySource::taylor).dimension ==
               tangent_dimension(in_grev, SyzygySource::schreyer).dimension,
           tag + ": taylor and schreyer tangent dimensions agree");
}

}  // namespace detail

// `count` random ideals plus random same-degree monomial pairs against the
// Borel reachability oracle.
inline BatteryResult run_randomized_battery(int count, std::uint64_t seed) {
    BatteryResult r;
    RandomIdeals gen(seed);
    for (int i = 0; i < count; ++i) {
        auto I = gen.next();
        ++r.ideals;
        detail::check_one(r, I, gen.rng(), "random ideal " + std::to_string(i));
    }
    std::mt19937_64& rng = gen.rng();
    for (int i = 0; i < 200; ++i) {
        RingContext ctx = RingContext::standard(2 + static_cast<int>(rng() % 3));
        int d = 1 + static_cast<int>(rng() % 6);
        auto monos = monomials_of_degree(ctx, d, MonomialOrder::grevlex());
        const auto& a = monos[rng() % monos.size()];
        const auto& b = monos[rng() % monos.size()];
        detail::expect(r, borel_leq(a, b) == borel_leq_bfs(a, b),
                       "borel order vs reachability on pair " + std::to_string(i));
    }
    return r;
}

// The same invariance checks across every ideal shipped in the dataset.
inline BatteryResult run_corpus_battery(std::uint64_t seed) {
    BatteryResult r;
    std::mt19937_64 rng(seed);
    for (const auto& c : builtin_cases()) {
        for (const auto& b : c.stable) {
            ++r.ideals;
            detail::check_one(r, b.ideal.to_graded_ideal(), rng, c.id + "/" + b.name);
        }
        for (const auto& s : c.saturated) {
            ++r.ideals;
            detail::check_one(r, s.ideal.to_graded_ideal(), rng, c.id + "/" + s.name);
        }
        for (const auto& comp : c.components) {
            ++r.ideals;
            detail::check_one(r, comp.representative, rng, c.id + "/" + comp.name);
        }
        for (const auto& p : c.points) {
            ++r.ideals;
            detail::check_one(r, p.ideal, rng, c.id + "/" + p.name);
        }
    }
    return r;
}

}  // namespace testsupport
