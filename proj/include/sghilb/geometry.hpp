#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "sghilb/groebner.hpp"
#include "sghilb/ideal.hpp"
#include "sghilb/monomial_ideal.hpp"

namespace sghilb {

inline constexpr std::uint64_t kDefaultGinSeed = 2026;

// Random invertible change of coordinates with integer entries drawn
// uniformly from [-bound, bound]; singular draws are rejected and redrawn.
CoordinateChange random_coordinate_change(int num_vars, std::mt19937_64& rng,
                                          int bound = 99);

// in_ord of a random coordinate change of the ideal, repeated over `trials`
// independent draws. `agreed` records that every trial produced the same
// ideal and that the common result is strongly stable, the two signatures of
// a generic draw in characteristic zero. Callers must check it: when false,
// `ideal` is merely the first trial's initial ideal.
struct GinResult {
    MonomialIdeal ideal;
    MonomialOrder order;
    int trials = 0;
    std::uint64_t seed = 0;
    bool agreed = false;
};

GinResult gin(const GradedIdeal& ideal,
              const MonomialOrder& ord = MonomialOrder::grevlex(),
              std::uint64_t seed = kDefaultGinSeed, int trials = 3);

// dim_K Hom(I, S/I)_0 together with the bookkeeping that produced it. The
// unknowns are the coefficients of the generator images over the standard
// monomials of S/I in each generator's degree; every syzygy of the chosen
// generating set imposes linear conditions and the dimension is
// unknown_count - constraint_rank. Monomial ideals are presented by their
// minimal generators with the pairwise lcm-exchange syzygies, everything else
// by its reduced grevlex basis with Schreyer syzygies; the dimension does not
// depend on that choice.
struct TangentReport {
    std::int64_t dimension = 0;
    std::int64_t unknown_count = 0;
    std::int64_t constraint_rank = 0;
    SyzygySource syzygy_source = SyzygySource::taylor;
};

TangentReport tangent_dimension(const GradedIdeal& ideal);
TangentReport tangent_dimension(const GradedIdeal& ideal, SyzygySource source);
TangentReport tangent_dimension(const MonomialIdeal& ideal);
TangentReport tangent_dimension(const MonomialIdeal& ideal, SyzygySource source);

// A weight vector with its tie-break. The tie-break keeps the order total,
// so in_w is monomial without any genericity assumption on w.
struct WeightVector {
    std::vector<std::int64_t> entries;
    OrderKind tie_break = OrderKind::grevlex;

    MonomialOrder order() const { return MonomialOrder::weight(entries, tie_break); }
};

MonomialIdeal weight_initial_ideal(const GradedIdeal& ideal, const WeightVector& w);

// First w in [0, max_entry]^(n+1), scanned with the last coordinate moving
// fastest and grevlex tie-break, such that in_w(ideal) == target. A cheap
// necessary test (the w-lead of every generator lies in target) gates each
// Groebner run.
std::optional<WeightVector> find_specialization_weight(const GradedIdeal& ideal,
                                                       const MonomialIdeal& target,
                                                       int max_entry = 6);

// Flat-degeneration witness check: in_w(ideal) == target, the Hilbert
// functions agree through max_degree, and the tangent dimension does not drop
// at the special fibre. max_degree < 0 picks max generator degree plus two.
struct SpecializationCheck {
    bool initial_matches = false;
    bool hilbert_matches = false;
    bool tangent_semicontinuous = false;
    std::int64_t tangent_at_ideal = 0;
    std::int64_t tangent_at_target = 0;

    bool ok() const {
        return initial_matches && hilbert_matches && tangent_semicontinuous;
    }
};

SpecializationCheck verify_specialization(const GradedIdeal& ideal,
                                          const MonomialIdeal& target,
                                          const WeightVector& w, int max_degree = -1);

// Castelnuovo-Mumford regularity of an arbitrary homogeneous ideal via
// gin_grevlex; strongly stable input short-circuits to the max generator
// degree. Throws when the generic trials disagree.
int regularity(const GradedIdeal& ideal, std::uint64_t seed = kDefaultGinSeed,
               int trials = 3);

}  // namespace sghilb
