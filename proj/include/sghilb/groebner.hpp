#pragma once

#include <cstddef>
#include <vector>

#include "sghilb/ideal.hpp"
#include "sghilb/monomial_ideal.hpp"
#include "sghilb/order.hpp"
#include "sghilb/polynomial.hpp"

namespace sghilb {

struct GroebnerBasis {
    MonomialOrder order;
    std::vector<Polynomial> elements;  // sorted by leading monomial, ascending
    bool reduced = false;
};

// Full multivariate division: every term of the result is reducible by no
// element of gb. Requires p's sort order to match gb.order (zero excepted).
// p - result lies in the ideal generated by gb.elements, exactly.
Polynomial normal_form(const Polynomial& p, const GroebnerBasis& gb);

// Buchberger completion with the normal selection strategy (smallest lcm
// first) and both classical skip criteria, followed by minimalization and
// full interreduction. The result is the unique reduced basis: monic
// elements, pairwise irreducible, sorted by leading monomial.
GroebnerBasis groebner_basis(const GradedIdeal& ideal, const MonomialOrder& ord);

// in_ord(I): leading monomials of the reduced basis.
MonomialIdeal initial_ideal(const GradedIdeal& ideal, const MonomialOrder& ord);

enum class SyzygySource { taylor, schreyer };

struct SyzygyList {
    std::size_t generator_count = 0;
    SyzygySource source = SyzygySource::taylor;
    // Each entry s satisfies sum_i s[i] * gens[i] == 0; s is homogeneous:
    // deg s[i] + deg gens[i] is constant over the nonzero components.
    std::vector<std::vector<Polynomial>> syzygies;
};

// Generators of the full first syzygy module of the *given* generating set.
//   taylor    pairwise lcm-exchange relations; input must be monomials
//   schreyer  tracked Buchberger completion, S-pair relations of the
//             completed basis (all pairs) mapped back to the input, plus the
//             re-division discrepancy columns; works for any input
// The default picks taylor for all-monomial input, schreyer otherwise.
SyzygyList syzygy_generators(const RingContext& ctx, const std::vector<Polynomial>& gens,
                             const MonomialOrder& ord);
SyzygyList syzygy_generators(const RingContext& ctx, const std::vector<Polynomial>& gens,
                             const MonomialOrder& ord, SyzygySource source);

// Substitute x_j -> sum_i gamma(i,j) x_i in every generator. gamma must be
// invertible; generators come back primitive-normalized.
GradedIdeal apply_coordinate_change(const GradedIdeal& ideal, const CoordinateChange& gamma);

bool ideal_contains(const GradedIdeal& ideal, const Polynomial& p,
                    const MonomialOrder& ord = MonomialOrder::grevlex());
bool ideal_contains(const GroebnerBasis& gb, const Polynomial& p);
bool ideal_equal(const GradedIdeal& a, const GradedIdeal& b,
                 const MonomialOrder& ord = MonomialOrder::grevlex());

}  // namespace sghilb
