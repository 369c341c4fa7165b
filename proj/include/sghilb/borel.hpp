#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "sghilb/hilbert.hpp"
#include "sghilb/monomial.hpp"
#include "sghilb/monomial_ideal.hpp"
#include "sghilb/ring.hpp"

namespace sghilb {

// Borel partial order on monomials of equal degree: borel_leq(a, b) holds
// when b is obtained from a by raising moves x_j -> x_i with i < j,
// equivalently when every exponent prefix sum of b dominates that of a.
// Throws on degree or ring-size mismatch. borel_leq(a, b) implies a <=_lex b.
bool borel_leq(const Monomial& a, const Monomial& b);

// All monomials x_i * m / x_j obtained from m by one raising move (i < j,
// x_j | m). Results share m's degree and are lex-greater than m.
std::vector<Monomial> borel_raises(const Monomial& m);

// Strongly stable = closed under raising moves; checking the minimal
// generators suffices.
bool is_strongly_stable(const MonomialIdeal& ideal);
// A raised generator multiple missing from the ideal, when one exists.
std::optional<Monomial> strongly_stable_witness(const MonomialIdeal& ideal);

// I : (x_0, ..., x_n)^infty via per-variable saturations and intersection.
MonomialIdeal saturate(const MonomialIdeal& ideal);
// Strongly stable shortcut: delete every power of the last variable from the
// generators. Throws std::invalid_argument unless the input is strongly stable.
MonomialIdeal saturate_strongly_stable(const MonomialIdeal& ideal);
bool is_saturated(const MonomialIdeal& ideal);

struct BorelEnumeration {
    std::vector<std::int64_t> h_ideal;  // resolved prefix used, 0..degree_bound (hf search only)
    int degree_bound = 0;
    std::vector<MonomialIdeal> ideals;  // canonically sorted
    bool complete = true;               // false when the node cap was reached
    std::uint64_t nodes = 0;
};

// All strongly stable ideals whose Hilbert function matches h_ideal
// (h_ideal[d] = dim I_d) through degree D. D defaults to the full prefix,
// which sees every candidate's generators as long as the prefix reaches the
// deepest lex-segment generator (the lex segment maximizes regularity and
// strongly stable generators stay within it); an explicit larger D extends
// the prefix by the certified Hilbert polynomial.
BorelEnumeration enumerate_borel_with_hf(const RingContext& ctx,
                                         const std::vector<std::int64_t>& h_ideal,
                                         std::optional<int> D = std::nullopt,
                                         std::uint64_t node_cap = 1000000);

// All saturated strongly stable ideals with Hilbert polynomial p_{S/I} = p
// and minimal generators in degrees <= max_gen_degree. Generators of such
// ideals avoid the last variable, so the search runs over last-variable-free
// layers with two-sided Hilbert-polynomial pruning.
BorelEnumeration enumerate_saturated_borel_with_hp(const RingContext& ctx, const HilbertPoly& p,
                                                   int max_gen_degree,
                                                   std::uint64_t node_cap = 1000000);

// All strongly stable ideals with the given Hilbert function through degree
// D = h_ideal.size() - 1 whose saturation equals saturate(sat).
std::vector<MonomialIdeal> nonsat_expansions(const MonomialIdeal& sat,
                                             const std::vector<std::int64_t>& h_ideal);

}  // namespace sghilb
