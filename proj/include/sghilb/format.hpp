#pragma once

#include <string>
#include <vector>

#include "sghilb/ideal.hpp"
#include "sghilb/monomial_ideal.hpp"
#include "sghilb/polynomial.hpp"
#include "sghilb/ring.hpp"

namespace sghilb {

std::string to_string(const Monomial& m, const RingContext& ctx);

// Canonical printing: terms descending grevlex, coefficients scaled to
// coprime integers with positive leading coefficient ("x^2 - x*t").
std::string to_string(const Polynomial& p, const RingContext& ctx);

// Raw printing: the polynomial exactly as stored (rational coefficients,
// its own sort order).
std::string to_string_exact(const Polynomial& p, const RingContext& ctx);

std::string to_string(const MonomialIdeal& ideal);
std::vector<std::string> generator_strings(const MonomialIdeal& ideal);
std::vector<std::string> generator_strings(const GradedIdeal& ideal);

std::string to_string(const mpq_class& q);

}  // namespace sghilb
