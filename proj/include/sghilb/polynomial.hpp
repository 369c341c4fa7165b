#pragma once

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "sghilb/order.hpp"

namespace sghilb {

struct Term {
    mpq_class coeff;
    Monomial mono;
};

// A polynomial with exact rational coefficients, terms kept strictly
// descending under a stated monomial order. Zero has no terms.
class Polynomial {
public:
    Polynomial() : order_(MonomialOrder::grevlex()) {}
    explicit Polynomial(MonomialOrder ord) : order_(std::move(ord)) {}

    static Polynomial zero(MonomialOrder ord) { return Polynomial(std::move(ord)); }

    // Accepts terms in any order, merges equal monomials, drops zero coefficients.
    static Polynomial from_terms(std::vector<Term> terms, MonomialOrder ord);

    static Polynomial monomial_term(mpq_class c, Monomial m, MonomialOrder ord) {
        return from_terms({Term{std::move(c), m}}, std::move(ord));
    }

    const std::vector<Term>& terms() const { return terms_; }
    const MonomialOrder& order() const { return order_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_monomial() const { return terms_.size() == 1; }
    int num_vars() const { return terms_.empty() ? 0 : terms_.front().mono.num_vars(); }

    const Term& leading_term() const {
        if (terms_.empty()) throw std::logic_error("Polynomial: leading term of zero");
        return terms_.front();
    }
    const Monomial& leading_monomial() const { return leading_term().mono; }
    const mpq_class& leading_coefficient() const { return leading_term().coeff; }

    // Maximum total degree over terms; -1 for the zero polynomial.
    int degree() const {
        int d = -1;
        for (const auto& t : terms_) d = std::max(d, t.mono.degree());
        return d;
    }

    bool is_homogeneous() const {
        for (const auto& t : terms_)
            if (t.mono.degree() != terms_.front().mono.degree()) return false;
        return true;
    }

    // Same terms re-sorted under another order.
    Polynomial resorted(const MonomialOrder& ord) const {
        return from_terms(terms_, ord);
    }

    Polynomial operator-() const;
    Polynomial operator+(const Polynomial& q) const;
    Polynomial operator-(const Polynomial& q) const;
    Polynomial operator*(const Polynomial& q) const;

    Polynomial scaled(const mpq_class& c) const;
    // this * (c * m), preserving sortedness in O(terms).
    Polynomial times_term(const mpq_class& c, const Monomial& m) const;

    // Divide by rational content and normalize sign so coefficients become
    // coprime integers with positive leading coefficient. Returns the factor f
    // with original == f * primitive. Zero stays zero with factor 1.
    mpq_class make_primitive();
    Polynomial primitive() const {
        Polynomial p = *this;
        p.make_primitive();
        return p;
    }

    void make_monic() {
        if (terms_.empty()) return;
        mpq_class lc = terms_.front().coeff;
        for (auto& t : terms_) t.coeff /= lc;
    }

    // Structural equality: same order and identical term lists.
    bool operator==(const Polynomial& q) const {
        if (order_ != q.order_ || terms_.size() != q.terms_.size()) return false;
        for (std::size_t i = 0; i < terms_.size(); ++i)
            if (terms_[i].mono != q.terms_[i].mono || terms_[i].coeff != q.terms_[i].coeff)
                return false;
        return true;
    }
    bool operator!=(const Polynomial& q) const { return !(*this == q); }

    // Equality as polynomials, ignoring the stated sort order.
    bool same_polynomial(const Polynomial& q) const {
        return (*this - q.resorted(order_)).is_zero();
    }

private:
    std::vector<Term> terms_;
    MonomialOrder order_;
};

}  // namespace sghilb
