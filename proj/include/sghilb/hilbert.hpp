#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sghilb/ideal.hpp"
#include "sghilb/monomial_ideal.hpp"
#include "sghilb/ring.hpp"

namespace sghilb {

// Exact univariate polynomial in the degree variable d; used for Hilbert
// polynomials p_{S/I}.
class HilbertPoly {
public:
    HilbertPoly() = default;  // zero
    explicit HilbertPoly(std::vector<mpq_class> ascending_coeffs);

    static HilbertPoly constant(mpq_class c) { return HilbertPoly({std::move(c)}); }
    // Unique interpolating polynomial through the given (d, value) points.
    static HilbertPoly from_points(const std::vector<std::pair<std::int64_t, mpq_class>>& pts);
    // Binomial coefficient C(d + shift, k) as a polynomial in d.
    static HilbertPoly binomial_in_d(std::int64_t shift, int k);
    // "4*d - 1", "3*d+1", "4" (the variable must be called d).
    static HilbertPoly parse(std::string_view text);

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<mpq_class>& coefficients() const { return c_; }
    mpq_class eval(std::int64_t d) const;
    mpq_class leading_coefficient() const;

    HilbertPoly operator+(const HilbertPoly& o) const;
    HilbertPoly operator-(const HilbertPoly& o) const;
    bool operator==(const HilbertPoly& o) const { return c_ == o.c_; }
    bool operator!=(const HilbertPoly& o) const { return !(*this == o); }

    // Sign of eval(d) for all sufficiently large d: -1, 0, or +1.
    int eventual_sign() const;

    std::string to_string() const;

private:
    std::vector<mpq_class> c_;  // ascending powers, no trailing zeros
};

mpz_class binomial(std::int64_t n, std::int64_t k);
// Number of degree-d monomials in num_vars variables.
std::int64_t monomial_count(int num_vars, int d);

// Hilbert data in the ideal convention: h_ideal[d] = dim_K I_d.
struct HilbertData {
    RingContext ctx;
    std::vector<std::int64_t> h_ideal;  // indices 0..max_degree()

    int max_degree() const { return static_cast<int>(h_ideal.size()) - 1; }
    std::int64_t h_quotient(int d) const {
        return monomial_count(ctx.num_vars(), d) - h_ideal.at(d);
    }

    // Filled by hilbert_polynomial():
    std::optional<HilbertPoly> polynomial;  // p_{S/I}
    int stable_from = -1;  // h_quotient(d) == polynomial(d) for all d >= stable_from
};

HilbertData hilbert_function(const MonomialIdeal& ideal, int max_degree);
// Non-monomial generators go through the grevlex initial ideal (flatness).
HilbertData hilbert_function(const GradedIdeal& ideal, int max_degree);

// Interpolates p_{S/I} from the top of the prefix and certifies it against at
// least two extra degrees; fills hd.polynomial / hd.stable_from and returns
// the polynomial. Throws std::runtime_error when the prefix is too short to
// certify.
const HilbertPoly& hilbert_polynomial(HilbertData& hd);

// h_ideal extended through degree D using the certified polynomial.
std::vector<std::int64_t> extend_h_ideal(const HilbertData& hd, int D);

// The lex-segment ideal realizing the given Hilbert function: degree-d piece
// spanned by the h_ideal[d] lex-greatest monomials. D defaults to the prefix
// end; a larger D extends the prefix by the certified Hilbert polynomial.
// Throws std::invalid_argument when h is not an admissible Hilbert function.
MonomialIdeal lex_segment(const RingContext& ctx, const std::vector<std::int64_t>& h_ideal,
                          std::optional<int> D = std::nullopt);

// Castelnuovo-Mumford regularity of a strongly stable monomial ideal: the
// maximal minimal-generator degree. Non-strongly-stable input is an error;
// route general ideals through gin (geometry module).
int regularity(const MonomialIdeal& ideal);

// Gotzmann number of a Hilbert polynomial: the length of its unique binomial
// decomposition p(d) = sum_i C(d + a_i - (i-1), a_i). Throws
// std::invalid_argument when p admits no such decomposition.
int gotzmann_bound(const HilbertPoly& p);

}  // namespace sghilb
