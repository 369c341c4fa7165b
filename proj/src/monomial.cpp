#include "sghilb/monomial.hpp"

#include <stdexcept>

namespace sghilb {

std::vector<Monomial> monomials_of_degree_unsorted(const RingContext& ctx, int degree) {
    if (degree < 0) throw std::invalid_argument("monomials_of_degree: negative degree");
    if (degree > ctx.max_total_degree())
        throw std::invalid_argument("monomials_of_degree: degree exceeds ring degree cap");
    const int n = ctx.num_vars();
    std::vector<Monomial> out;
    Monomial m(n);
    // Walk exponent vectors in colex fashion: place `rest` into positions i..n-1.
    auto rec = [&](auto&& self, int i, int rest) -> void {
        if (i == n - 1) {
            m.set_exponent(i, rest);
            out.push_back(m);
            m.set_exponent(i, 0);
            return;
        }
        for (int e = rest; e >= 0; --e) {
            m.set_exponent(i, e);
            self(self, i + 1, rest - e);
        }
        m.set_exponent(i, 0);
    };
    rec(rec, 0, degree);
    return out;
}

}  // namespace sghilb
