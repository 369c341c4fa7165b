#include "sghilb/span.hpp"

#include <stdexcept>
#include <unordered_map>

namespace sghilb {

namespace {

std::unordered_map<Monomial, std::size_t, MonomialHash> index_basis(
    const std::vector<Monomial>& basis) {
    std::unordered_map<Monomial, std::size_t, MonomialHash> idx;
    idx.reserve(basis.size());
    for (std::size_t i = 0; i < basis.size(); ++i) idx.emplace(basis[i], i);
    return idx;
}

}  // namespace

std::vector<mpq_class> coefficient_vector(const Polynomial& p,
                                          const std::vector<Monomial>& basis) {
    auto idx = index_basis(basis);
    std::vector<mpq_class> row(basis.size(), mpq_class(0));
    for (const auto& t : p.terms()) {
        auto it = idx.find(t.mono);
        if (it == idx.end())
            throw std::invalid_argument("coefficient_vector: monomial outside the basis");
        row[it->second] = t.coeff;
    }
    return row;
}

RowSpace ideal_degree_span(const GradedIdeal& ideal, int degree) {
    const std::vector<Monomial> basis =
        monomials_of_degree(ideal.ctx, degree, MonomialOrder::grevlex());
    auto idx = index_basis(basis);
    RowSpace space(basis.size());
    for (const auto& g : ideal.generators) {
        const int dg = g.degree();
        if (dg > degree) continue;
        for (const auto& m : monomials_of_degree_unsorted(ideal.ctx, degree - dg)) {
            std::vector<mpq_class> row(basis.size(), mpq_class(0));
            for (const auto& t : g.terms()) row[idx.at(t.mono * m)] = t.coeff;
            space.add(std::move(row));
        }
    }
    return space;
}

std::int64_t ideal_dimension_in_degree(const GradedIdeal& ideal, int degree) {
    return static_cast<std::int64_t>(ideal_degree_span(ideal, degree).dimension());
}

bool in_degree_span(const GradedIdeal& ideal, const Polynomial& p) {
    if (p.is_zero()) return true;
    if (!p.is_homogeneous())
        throw std::invalid_argument("in_degree_span: inhomogeneous polynomial");
    const int d = p.degree();
    const std::vector<Monomial> basis =
        monomials_of_degree(ideal.ctx, d, MonomialOrder::grevlex());
    RowSpace space = ideal_degree_span(ideal, d);
    return space.contains(coefficient_vector(p, basis));
}

std::vector<Polynomial> minimal_generators_from_slices(
    const RingContext& ctx, const std::vector<std::vector<Polynomial>>& slices) {
    std::vector<Polynomial> gens;
    for (std::size_t d = 0; d < slices.size(); ++d) {
        const std::vector<Monomial> basis =
            monomials_of_degree(ctx, static_cast<int>(d), MonomialOrder::grevlex());
        // span of S_1 * (ideal generated so far), restricted to degree d
        GradedIdeal so_far(ctx, gens);
        RowSpace space = ideal_degree_span(so_far, static_cast<int>(d));

        // the prescribed slice must contain it
        RowSpace prescribed(basis.size());
        for (const auto& p : slices[d]) {
            if (p.is_zero()) continue;
            if (!p.is_homogeneous() || p.degree() != static_cast<int>(d))
                throw std::invalid_argument(
                    "minimal_generators_from_slices: slice entry of wrong degree");
            prescribed.add(coefficient_vector(p, basis));
        }
        for (const auto& g : gens) {
            const int dg = g.degree();
            if (dg > static_cast<int>(d)) continue;
            for (const auto& m : monomials_of_degree_unsorted(ctx, static_cast<int>(d) - dg)) {
                Polynomial shifted = g.times_term(1, m);
                if (prescribed.independent(coefficient_vector(shifted, basis)))
                    throw std::invalid_argument(
                        "minimal_generators_from_slices: slices do not form an ideal");
            }
        }

        // new generators: slice elements independent of the running span
        for (const auto& p : slices[d]) {
            if (p.is_zero()) continue;
            auto row = coefficient_vector(p, basis);
            if (space.add(row)) {
                Polynomial g = p;
                g.make_primitive();
                gens.push_back(std::move(g));
                // adding a generator extends the span by all its multiples of
                // this degree, but in degree d the generator itself is the only
                // multiple, so the incremental row above is exact
            }
        }
    }
    return gens;
}

}  // namespace sghilb
