#pragma once

#include <cstdint>
#include <vector>

#include "sghilb/ideal.hpp"
#include "sghilb/linalg.hpp"
#include "sghilb/order.hpp"
#include "sghilb/polynomial.hpp"

namespace sghilb {

// Degree-slice linear algebra on homogeneous ideals, computed directly from
// generator multiples by exact rank. Deliberately independent of the
// Buchberger machinery so the two can cross-check each other.

// Coefficients of homogeneous p over the chosen degree-d monomial basis.
std::vector<mpq_class> coefficient_vector(const Polynomial& p,
                                          const std::vector<Monomial>& basis);

// Row space of I_d, spanned by {m * g : g generator, deg(m g) = d}.
RowSpace ideal_degree_span(const GradedIdeal& ideal, int degree);

// dim_K I_d.
std::int64_t ideal_dimension_in_degree(const GradedIdeal& ideal, int degree);

// Is the homogeneous polynomial p an element of I? (Degree-slice membership.)
bool in_degree_span(const GradedIdeal& ideal, const Polynomial& p);

// Build an ideal from prescribed graded slices: slices[d] spans the intended
// degree-d piece J_d (degrees beyond the list are generated by what came
// before). Verifies S_1 J_{d-1} lands inside the prescribed J_d and returns a
// minimal generating set: each degree contributes a basis of J_d modulo
// S_1 J_{d-1}. Throws std::invalid_argument when the slices do not stack to
// an ideal.
std::vector<Polynomial> minimal_generators_from_slices(
    const RingContext& ctx, const std::vector<std::vector<Polynomial>>& slices);

}  // namespace sghilb
