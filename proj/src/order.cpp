#include "sghilb/order.hpp"

#include <algorithm>

namespace sghilb {

std::string MonomialOrder::describe() const {
    switch (kind_) {
        case OrderKind::lex: return "lex";
        case OrderKind::grevlex: return "grevlex";
        case OrderKind::weight: {
            std::string s = "weight:";
            for (std::size_t i = 0; i < weights_.size(); ++i) {
                if (i) s += ',';
                s += std::to_string(weights_[i]);
            }
            s += tie_ == OrderKind::lex ? "/lex" : "/grevlex";
            return s;
        }
    }
    return "?";
}

std::vector<Monomial> monomials_of_degree(const RingContext& ctx, int degree,
                                          const MonomialOrder& ord) {
    std::vector<Monomial> out = monomials_of_degree_unsorted(ctx, degree);
    std::sort(out.begin(), out.end(), [&](const Monomial& a, const Monomial& b) {
        return ord.greater(a, b);
    });
    return out;
}

}  // namespace sghilb
