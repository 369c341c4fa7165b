#include "sghilb/polynomial.hpp"

#include <algorithm>

namespace sghilb {

namespace {

void check_same_order(const Polynomial& p, const Polynomial& q) {
    if (!p.is_zero() && !q.is_zero() && p.order() != q.order())
        throw std::invalid_argument("Polynomial: mixed sort orders in arithmetic");
}

}  // namespace

Polynomial Polynomial::from_terms(std::vector<Term> terms, MonomialOrder ord) {
    std::sort(terms.begin(), terms.end(), [&](const Term& a, const Term& b) {
        return ord.greater(a.mono, b.mono);
    });
    Polynomial p(ord);
    for (auto& t : terms) {
        if (t.coeff == 0) continue;
        if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
            p.terms_.back().coeff += t.coeff;
            if (p.terms_.back().coeff == 0) p.terms_.pop_back();
        } else {
            p.terms_.push_back(std::move(t));
        }
    }
    return p;
}

Polynomial Polynomial::operator-() const {
    Polynomial p = *this;
    for (auto& t : p.terms_) t.coeff = -t.coeff;
    return p;
}

Polynomial Polynomial::operator+(const Polynomial& q) const {
    check_same_order(*this, q);
    const MonomialOrder& ord = is_zero() ? q.order() : order();
    Polynomial r(ord);
    r.terms_.reserve(terms_.size() + q.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() && j < q.terms_.size()) {
        auto c = ord.compare(terms_[i].mono, q.terms_[j].mono);
        if (c == std::strong_ordering::greater) {
            r.terms_.push_back(terms_[i++]);
        } else if (c == std::strong_ordering::less) {
            r.terms_.push_back(q.terms_[j++]);
        } else {
            mpq_class s = terms_[i].coeff + q.terms_[j].coeff;
            if (s != 0) r.terms_.push_back(Term{std::move(s), terms_[i].mono});
            ++i, ++j;
        }
    }
    for (; i < terms_.size(); ++i) r.terms_.push_back(terms_[i]);
    for (; j < q.terms_.size(); ++j) r.terms_.push_back(q.terms_[j]);
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& q) const { return *this + (-q); }

Polynomial Polynomial::times_term(const mpq_class& c, const Monomial& m) const {
    Polynomial r(order_);
    if (c == 0) return r;
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back(Term{t.coeff * c, t.mono * m});
    return r;  // multiplying every monomial by m preserves the sort
}

Polynomial Polynomial::operator*(const Polynomial& q) const {
    check_same_order(*this, q);
    const MonomialOrder& ord = is_zero() ? q.order() : order();
    std::vector<Term> acc;
    acc.reserve(terms_.size() * q.terms_.size());
    for (const auto& a : terms_)
        for (const auto& b : q.terms_)
            acc.push_back(Term{a.coeff * b.coeff, a.mono * b.mono});
    return from_terms(std::move(acc), ord);
}

Polynomial Polynomial::scaled(const mpq_class& c) const {
    Polynomial r(order_);
    if (c == 0) return r;
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back(Term{t.coeff * c, t.mono});
    return r;
}

mpq_class Polynomial::make_primitive() {
    if (terms_.empty()) return 1;
    // content = gcd(numerators) / lcm(denominators), sign of the leading term
    mpz_class num_gcd = 0, den_lcm = 1;
    for (const auto& t : terms_) {
        mpz_class n = t.coeff.get_num(), d = t.coeff.get_den();
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), n.get_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), d.get_mpz_t());
    }
    mpq_class content(num_gcd, den_lcm);
    content.canonicalize();
    if (terms_.front().coeff < 0) content = -content;
    for (auto& t : terms_) t.coeff /= content;
    return content;
}

}  // namespace sghilb
