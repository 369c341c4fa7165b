#include "sghilb/monomial_ideal.hpp"

#include <algorithm>

namespace sghilb {

bool generator_list_before(const Monomial& a, const Monomial& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    static const MonomialOrder kLex = MonomialOrder::lex();
    return kLex.greater(a, b);
}

MonomialIdeal::MonomialIdeal(RingContext ctx, std::vector<Monomial> generators)
    : ctx_(std::move(ctx)) {
    for (const auto& g : generators)
        if (g.num_vars() != ctx_.num_vars())
            throw std::invalid_argument("MonomialIdeal: generator from a different ring");
    // minimalize: keep only divisibility-minimal monomials, once each
    std::sort(generators.begin(), generators.end(), generator_list_before);
    generators.erase(std::unique(generators.begin(), generators.end()), generators.end());
    for (const auto& g : generators) {
        bool redundant = false;
        for (const auto& kept : gens_)
            if (kept.divides(g)) { redundant = true; break; }
        if (!redundant) gens_.push_back(g);
    }
}

std::int64_t MonomialIdeal::dim_in_degree(int d) const {
    std::int64_t count = 0;
    for (const auto& m : monomials_of_degree_unsorted(ctx_, d))
        if (contains(m)) ++count;
    return count;
}

std::vector<Monomial> MonomialIdeal::monomials_in_degree(int d, const MonomialOrder& ord) const {
    std::vector<Monomial> out;
    for (const auto& m : monomials_of_degree(ctx_, d, ord))
        if (contains(m)) out.push_back(m);
    return out;
}

std::vector<Monomial> MonomialIdeal::standard_monomials(int d, const MonomialOrder& ord) const {
    std::vector<Monomial> out;
    for (const auto& m : monomials_of_degree(ctx_, d, ord))
        if (!contains(m)) out.push_back(m);
    return out;
}

GradedIdeal MonomialIdeal::to_graded_ideal(const MonomialOrder& ord) const {
    std::vector<Polynomial> gens;
    gens.reserve(gens_.size());
    for (const auto& m : gens_)
        gens.push_back(Polynomial::monomial_term(1, m, ord));
    return GradedIdeal(ctx_, std::move(gens));
}

bool MonomialIdeal::list_before(const MonomialIdeal& a, const MonomialIdeal& b) {
    const auto& ga = a.min_gens();
    const auto& gb = b.min_gens();
    for (std::size_t i = 0; i < ga.size() && i < gb.size(); ++i) {
        if (ga[i] != gb[i])
            return generator_list_before(ga[i], gb[i]);
    }
    return ga.size() < gb.size();
}

}  // namespace sghilb
