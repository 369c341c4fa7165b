#include "sghilb/geometry.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <unordered_map>
#include <utility>

#include "sghilb/borel.hpp"
#include "sghilb/hilbert.hpp"
#include "sghilb/linalg.hpp"

namespace sghilb {

CoordinateChange random_coordinate_change(int num_vars, std::mt19937_64& rng, int bound) {
    if (bound < 1 || bound > 1000000)
        throw std::invalid_argument("random_coordinate_change: bad entry bound");
    const std::uint64_t span = 2 * static_cast<std::uint64_t>(bound) + 1;
    for (;;) {
        std::vector<mpq_class> entries;
        entries.reserve(static_cast<std::size_t>(num_vars) * num_vars);
        for (int i = 0; i < num_vars * num_vars; ++i)
            entries.emplace_back(static_cast<long>(rng() % span) - bound);
        CoordinateChange gamma(num_vars, std::move(entries));
        if (gamma.is_invertible()) return gamma;
    }
}

GinResult gin(const GradedIdeal& ideal, const MonomialOrder& ord, std::uint64_t seed,
              int trials) {
    if (trials < 2) throw std::invalid_argument("gin: need at least 2 trials to cross-check");
    std::mt19937_64 rng(seed);
    std::optional<MonomialIdeal> first;
    bool all_equal = true;
    for (int t = 0; t < trials; ++t) {
        CoordinateChange gamma = random_coordinate_change(ideal.ctx.num_vars(), rng);
        MonomialIdeal in = initial_ideal(apply_coordinate_change(ideal, gamma), ord);
        if (!first)
            first.emplace(std::move(in));
        else if (in != *first)
            all_equal = false;
    }
    bool agreed = all_equal && is_strongly_stable(*first);
    return GinResult{std::move(*first), ord, trials, seed, agreed};
}

namespace {

// Standard monomial bases of S/lead keyed by degree. Enumerates against a
// private ring copy whose degree cap has been lifted to the largest syzygy
// degree, since that can exceed the caller's cap.
class StandardBasisTable {
public:
    StandardBasisTable(const RingContext& ctx, const MonomialIdeal& lead, int max_degree)
        : ctx_(ctx), lead_(lead) {
        if (max_degree > ctx_.max_total_degree())
            ctx_.set_max_total_degree(std::min(max_degree, 250));
    }

    const std::vector<Monomial>& basis(int d) {
        auto it = bases_.find(d);
        if (it != bases_.end()) return it->second;
        std::vector<Monomial> picked;
        for (const auto& m : monomials_of_degree(ctx_, d, MonomialOrder::grevlex()))
            if (!lead_.contains(m)) picked.push_back(m);
        auto pos = bases_.emplace(d, std::move(picked)).first;
        auto& idx = index_[d];
        for (std::size_t k = 0; k < pos->second.size(); ++k)
            idx.emplace(pos->second[k], k);
        return pos->second;
    }

    std::size_t position(const Monomial& m) {
        basis(m.degree());
        const auto& idx = index_.at(m.degree());
        auto it = idx.find(m);
        if (it == idx.end())
            throw std::logic_error("StandardBasisTable: monomial not in the standard basis");
        return it->second;
    }

private:
    RingContext ctx_;
    const MonomialIdeal& lead_;
    std::map<int, std::vector<Monomial>> bases_;
    std::map<int, std::unordered_map<Monomial, std::size_t, MonomialHash>> index_;
};

// Shared tangent computation. gens must generate the ideal, gb must be a
// grevlex basis of it with lead as its leading-term ideal, and the syzygies
// of gens must generate the full first syzygy module for the map phi to be
// well defined by its values on gens.
TangentReport tangent_core(const RingContext& ctx, const std::vector<Polynomial>& gens,
                           const GroebnerBasis& gb, const MonomialIdeal& lead,
                           SyzygySource source) {
    TangentReport report;
    report.syzygy_source = source;
    if (gens.empty() || lead.is_unit_ideal()) return report;

    SyzygyList syz = syzygy_generators(ctx, gens, gb.order, source);

    int max_degree = 0;
    for (const auto& g : gens) max_degree = std::max(max_degree, g.degree());
    for (const auto& s : syz.syzygies)
        for (std::size_t i = 0; i < s.size(); ++i)
            if (!s[i].is_zero())
                max_degree = std::max(max_degree, s[i].degree() + gens[i].degree());
    StandardBasisTable table(ctx, lead, max_degree);

    std::vector<std::size_t> offset(gens.size(), 0);
    std::size_t unknowns = 0;
    for (std::size_t i = 0; i < gens.size(); ++i) {
        offset[i] = unknowns;
        unknowns += table.basis(gens[i].degree()).size();
    }
    report.unknown_count = static_cast<std::int64_t>(unknowns);

    // A syzygy sum_i a_i g_i == 0 forces sum_i a_i phi(g_i) == 0 in S/I.
    // Writing phi(g_i) over the unknowns and reducing each a_i * m to normal
    // form yields one linear row per standard monomial in the syzygy degree.
    RowSpace rows(unknowns);
    for (const auto& s : syz.syzygies) {
        int sdeg = -1;
        for (std::size_t i = 0; i < s.size(); ++i)
            if (!s[i].is_zero()) {
                sdeg = s[i].degree() + gens[i].degree();
                break;
            }
        if (sdeg < 0) continue;
        const auto& conditions = table.basis(sdeg);
        if (conditions.empty()) continue;
        std::vector<std::vector<mpq_class>> block(
            conditions.size(), std::vector<mpq_class>(unknowns, mpq_class(0)));
        for (std::size_t i = 0; i < s.size(); ++i) {
            if (s[i].is_zero()) continue;
            const auto& source_basis = table.basis(gens[i].degree());
            for (std::size_t k = 0; k < source_basis.size(); ++k) {
                Polynomial nf = normal_form(s[i].times_term(1, source_basis[k]), gb);
                for (const auto& t : nf.terms())
                    block[table.position(t.mono)][offset[i] + k] += t.coeff;
            }
        }
        for (auto& row : block) rows.add(std::move(row));
    }
    report.constraint_rank = static_cast<std::int64_t>(rows.dimension());
    report.dimension = report.unknown_count - report.constraint_rank;
    return report;
}

}  // namespace

TangentReport tangent_dimension(const MonomialIdeal& ideal, SyzygySource source) {
    const MonomialOrder ord = MonomialOrder::grevlex();
    GroebnerBasis gb{ord, {}, true};
    for (const auto& m : ideal.min_gens())
        gb.elements.push_back(Polynomial::monomial_term(1, m, ord));
    std::sort(gb.elements.begin(), gb.elements.end(),
              [&](const Polynomial& a, const Polynomial& b) {
                  return ord.less(a.leading_monomial(), b.leading_monomial());
              });
    return tangent_core(ideal.ctx(), gb.elements, gb, ideal, source);
}

TangentReport tangent_dimension(const MonomialIdeal& ideal) {
    return tangent_dimension(ideal, SyzygySource::taylor);
}

TangentReport tangent_dimension(const GradedIdeal& ideal, SyzygySource source) {
    if (ideal.is_zero_ideal()) {
        TangentReport report;
        report.syzygy_source = source;
        return report;
    }
    if (ideal.all_generators_monomial()) {
        std::vector<Monomial> gens;
        gens.reserve(ideal.generators.size());
        for (const auto& g : ideal.generators) gens.push_back(g.leading_monomial());
        return tangent_dimension(MonomialIdeal(ideal.ctx, std::move(gens)), source);
    }
    if (source == SyzygySource::taylor)
        throw std::invalid_argument("tangent_dimension: taylor syzygies need monomial generators");
    GroebnerBasis gb = groebner_basis(ideal, MonomialOrder::grevlex());
    std::vector<Monomial> leads;
    leads.reserve(gb.elements.size());
    for (const auto& g : gb.elements) leads.push_back(g.leading_monomial());
    MonomialIdeal lead(ideal.ctx, std::move(leads));
    return tangent_core(ideal.ctx, gb.elements, gb, lead, SyzygySource::schreyer);
}

TangentReport tangent_dimension(const GradedIdeal& ideal) {
    return tangent_dimension(ideal, ideal.all_generators_monomial()
                                        ? SyzygySource::taylor
                                        : SyzygySource::schreyer);
}

MonomialIdeal weight_initial_ideal(const GradedIdeal& ideal, const WeightVector& w) {
    return initial_ideal(ideal, w.order());
}

namespace {

bool weight_leads_land_in(const GradedIdeal& ideal, const MonomialOrder& ord,
                          const MonomialIdeal& target) {
    for (const auto& g : ideal.generators) {
        const Monomial* best = nullptr;
        for (const auto& t : g.terms())
            if (!best || ord.greater(t.mono, *best)) best = &t.mono;
        if (best && !target.contains(*best)) return false;
    }
    return true;
}

}  // namespace

std::optional<WeightVector> find_specialization_weight(const GradedIdeal& ideal,
                                                       const MonomialIdeal& target,
                                                       int max_entry) {
    if (max_entry < 0 || max_entry > 255)
        throw std::invalid_argument("find_specialization_weight: bad entry bound");
    if (target.ctx() != ideal.ctx)
        throw std::invalid_argument("find_specialization_weight: mismatched rings");
    const int n = ideal.ctx.num_vars();
    std::vector<std::int64_t> w(n, 0);
    for (;;) {
        WeightVector cand{w, OrderKind::grevlex};
        MonomialOrder ord = cand.order();
        if (weight_leads_land_in(ideal, ord, target) && initial_ideal(ideal, ord) == target)
            return cand;
        int i = n - 1;
        while (i >= 0 && w[i] == max_entry) w[i--] = 0;
        if (i < 0) return std::nullopt;
        ++w[i];
    }
}

SpecializationCheck verify_specialization(const GradedIdeal& ideal,
                                          const MonomialIdeal& target,
                                          const WeightVector& w, int max_degree) {
    SpecializationCheck out;
    out.initial_matches = (weight_initial_ideal(ideal, w) == target);
    int d = max_degree >= 0
                ? max_degree
                : std::max(ideal.max_generator_degree(), target.max_generator_degree()) + 2;
    out.hilbert_matches =
        hilbert_function(ideal, d).h_ideal == hilbert_function(target, d).h_ideal;
    out.tangent_at_ideal = tangent_dimension(ideal).dimension;
    out.tangent_at_target = tangent_dimension(target).dimension;
    out.tangent_semicontinuous = out.tangent_at_target >= out.tangent_at_ideal;
    return out;
}

int regularity(const GradedIdeal& ideal, std::uint64_t seed, int trials) {
    if (ideal.is_zero_ideal()) throw std::invalid_argument("regularity: zero ideal");
    if (ideal.all_generators_monomial()) {
        std::vector<Monomial> gens;
        gens.reserve(ideal.generators.size());
        for (const auto& g : ideal.generators) gens.push_back(g.leading_monomial());
        MonomialIdeal mono(ideal.ctx, std::move(gens));
        if (is_strongly_stable(mono)) return regularity(mono);
    }
    GinResult g = gin(ideal, MonomialOrder::grevlex(), seed, trials);
    if (!g.agreed)
        throw std::runtime_error("regularity: generic initial trials disagreed, reseed or raise trials");
    return regularity(g.ideal);
}

}  // namespace sghilb
