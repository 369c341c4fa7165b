#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "sghilb/monomial.hpp"

namespace sghilb {

enum class OrderKind { lex, grevlex, weight };

// A total monomial order with x_0 > x_1 > ... > x_n.
//   lex      first differing exponent decides, larger wins
//   grevlex  total degree first, then the last differing exponent, smaller wins
//   weight   weight value w.u first, ties broken by a lex or grevlex tie-break,
//            so weight orders are always total and weight initial ideals monomial
class MonomialOrder {
public:
    static MonomialOrder lex() { return MonomialOrder(OrderKind::lex); }
    static MonomialOrder grevlex() { return MonomialOrder(OrderKind::grevlex); }
    static MonomialOrder weight(std::vector<std::int64_t> w,
                                OrderKind tie_break = OrderKind::grevlex) {
        if (tie_break == OrderKind::weight)
            throw std::invalid_argument("MonomialOrder: tie-break must be lex or grevlex");
        if (w.empty() || static_cast<int>(w.size()) > kMaxVars)
            throw std::invalid_argument("MonomialOrder: bad weight vector length");
        MonomialOrder o(OrderKind::weight);
        o.weights_ = std::move(w);
        o.tie_ = tie_break;
        return o;
    }

    OrderKind kind() const { return kind_; }
    OrderKind tie_break() const { return tie_; }
    const std::vector<std::int64_t>& weights() const { return weights_; }

    std::strong_ordering compare(const Monomial& a, const Monomial& b) const {
        if (a.num_vars() != b.num_vars())
            throw std::invalid_argument("MonomialOrder: mismatched variable counts");
        if (kind_ == OrderKind::weight &&
            static_cast<int>(weights_.size()) != a.num_vars())
            throw std::invalid_argument("MonomialOrder: weight length != variable count");
        switch (kind_) {
            case OrderKind::lex: return compare_lex(a, b);
            case OrderKind::grevlex: return compare_grevlex(a, b);
            case OrderKind::weight: {
                std::int64_t wa = 0, wb = 0;
                for (int i = 0; i < a.num_vars(); ++i) {
                    wa += weights_[i] * a[i];
                    wb += weights_[i] * b[i];
                }
                if (wa != wb) return wa <=> wb;
                return tie_ == OrderKind::lex ? compare_lex(a, b) : compare_grevlex(a, b);
            }
        }
        throw std::logic_error("MonomialOrder: bad kind");
    }

    bool greater(const Monomial& a, const Monomial& b) const {
        return compare(a, b) == std::strong_ordering::greater;
    }
    bool less(const Monomial& a, const Monomial& b) const {
        return compare(a, b) == std::strong_ordering::less;
    }

    bool operator==(const MonomialOrder& o) const {
        if (kind_ != o.kind_) return false;
        if (kind_ != OrderKind::weight) return true;
        return weights_ == o.weights_ && tie_ == o.tie_;
    }
    bool operator!=(const MonomialOrder& o) const { return !(*this == o); }

    std::string describe() const;

private:
    explicit MonomialOrder(OrderKind k) : kind_(k) {}

    static std::strong_ordering compare_lex(const Monomial& a, const Monomial& b) {
        for (int i = 0; i < a.num_vars(); ++i)
            if (a[i] != b[i]) return a[i] <=> b[i];
        return std::strong_ordering::equal;
    }
    static std::strong_ordering compare_grevlex(const Monomial& a, const Monomial& b) {
        if (a.degree() != b.degree()) return a.degree() <=> b.degree();
        for (int i = a.num_vars() - 1; i >= 0; --i)
            if (a[i] != b[i]) return b[i] <=> a[i];  // smaller trailing exponent wins
        return std::strong_ordering::equal;
    }

    OrderKind kind_;
    std::vector<std::int64_t> weights_;
    OrderKind tie_ = OrderKind::grevlex;
};

// All monomials of the given total degree, sorted strictly descending under ord.
std::vector<Monomial> monomials_of_degree(const RingContext& ctx, int degree,
                                          const MonomialOrder& ord);

}  // namespace sghilb
