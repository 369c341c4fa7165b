#pragma once

#include <cstdint>
#include <vector>

#include "sghilb/ideal.hpp"
#include "sghilb/monomial.hpp"
#include "sghilb/order.hpp"
#include "sghilb/ring.hpp"

namespace sghilb {

// Canonical comparison used to sort minimal generators and enumeration layers:
// ascending degree, descending lex within a degree (the usual listing order
// x^2, x*y, x*z, x*t^4, y^5, y^4*z^2).
bool generator_list_before(const Monomial& a, const Monomial& b);

// A monomial ideal held by its unique minimal generating set (an antichain
// under divisibility), canonically sorted.
class MonomialIdeal {
public:
    MonomialIdeal(RingContext ctx, std::vector<Monomial> generators);

    const RingContext& ctx() const { return ctx_; }
    const std::vector<Monomial>& min_gens() const { return gens_; }
    bool is_zero_ideal() const { return gens_.empty(); }
    bool is_unit_ideal() const { return gens_.size() == 1 && gens_.front().is_one(); }

    int max_generator_degree() const {
        int d = 0;
        for (const auto& g : gens_) d = std::max(d, g.degree());
        return d;
    }

    bool contains(const Monomial& m) const {
        for (const auto& g : gens_)
            if (g.divides(m)) return true;
        return false;
    }

    // dim_K of the degree-d graded piece (count of degree-d monomials in the ideal).
    std::int64_t dim_in_degree(int d) const;

    std::vector<Monomial> monomials_in_degree(int d, const MonomialOrder& ord) const;
    // Degree-d monomials NOT in the ideal: the standard monomial basis of (S/I)_d.
    std::vector<Monomial> standard_monomials(int d, const MonomialOrder& ord) const;

    GradedIdeal to_graded_ideal(const MonomialOrder& ord = MonomialOrder::grevlex()) const;

    bool operator==(const MonomialIdeal& o) const {
        return ctx_ == o.ctx_ && gens_ == o.gens_;
    }
    bool operator!=(const MonomialIdeal& o) const { return !(*this == o); }

    // Deterministic ideal-level ordering: lexicographic over the canonical
    // generator lists. Used to sort enumeration output.
    static bool list_before(const MonomialIdeal& a, const MonomialIdeal& b);

private:
    RingContext ctx_;
    std::vector<Monomial> gens_;
};

}  // namespace sghilb
