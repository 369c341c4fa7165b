#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <vector>

#include "sghilb/polynomial.hpp"
#include "sghilb/ring.hpp"

namespace sghilb {

// A homogeneous ideal given by nonzero homogeneous generators.
struct GradedIdeal {
    RingContext ctx;
    std::vector<Polynomial> generators;

    GradedIdeal(RingContext context, std::vector<Polynomial> gens)
        : ctx(std::move(context)) {
        generators.reserve(gens.size());
        for (auto& g : gens) {
            if (g.is_zero()) continue;  // zero generators are redundant, drop them
            if (g.num_vars() != ctx.num_vars())
                throw std::invalid_argument("GradedIdeal: generator from a different ring");
            if (!g.is_homogeneous())
                throw std::invalid_argument("GradedIdeal: inhomogeneous generator");
            generators.push_back(std::move(g));
        }
    }

    bool is_zero_ideal() const { return generators.empty(); }

    bool all_generators_monomial() const {
        for (const auto& g : generators)
            if (!g.is_monomial()) return false;
        return true;
    }

    int max_generator_degree() const {
        int d = 0;
        for (const auto& g : generators) d = std::max(d, g.degree());
        return d;
    }
};

// An invertible linear change of coordinates gamma. Column j holds the image
// of x_j, i.e. gamma sends x_j to sum_i entry(i,j) * x_i.
class CoordinateChange {
public:
    CoordinateChange(int num_vars, std::vector<mpq_class> entries_row_major);

    static CoordinateChange identity(int num_vars);

    int num_vars() const { return n_; }
    const mpq_class& entry(int i, int j) const { return m_.at(i * n_ + j); }

    mpq_class determinant() const;
    bool is_invertible() const { return determinant() != 0; }
    CoordinateChange inverse() const;  // throws std::domain_error when singular
    CoordinateChange compose(const CoordinateChange& inner) const;  // this after inner

    bool operator==(const CoordinateChange& o) const { return n_ == o.n_ && m_ == o.m_; }

private:
    int n_;
    std::vector<mpq_class> m_;  // (n+1) x (n+1), row major
};

}  // namespace sghilb
