#include "sghilb/groebner.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

namespace sghilb {

namespace {

// S-pair cofactors: spoly(f,g) = uf*f - ug*g cancels the leading terms.
struct Cofactors {
    mpq_class cf, cg;
    Monomial mf, mg;
};

Cofactors spair_cofactors(const Polynomial& f, const Polynomial& g) {
    const Monomial L = Monomial::lcm(f.leading_monomial(), g.leading_monomial());
    return Cofactors{
        1 / f.leading_coefficient(),
        1 / g.leading_coefficient(),
        L.divide_exact(f.leading_monomial()),
        L.divide_exact(g.leading_monomial()),
    };
}

// One full division pass. When `track` is non-null it receives, for every
// reduction step against basis[k], the subtracted factor (c, m, k) so callers
// can maintain exact bookkeeping of the quotients.
Polynomial divide_full(
    Polynomial h, const std::vector<Polynomial>& basis,
    const std::function<void(std::size_t, const mpq_class&, const Monomial&)>* track = nullptr) {
    std::vector<Term> remainder;
    while (!h.is_zero()) {
        bool reduced = false;
        const Monomial& lm = h.leading_monomial();
        for (std::size_t k = 0; k < basis.size(); ++k) {
            if (basis[k].is_zero()) continue;
            if (!basis[k].leading_monomial().divides(lm)) continue;
            mpq_class c = h.leading_coefficient() / basis[k].leading_coefficient();
            Monomial m = lm.divide_exact(basis[k].leading_monomial());
            h = h - basis[k].times_term(c, m);
            if (track) (*track)(k, c, m);
            reduced = true;
            break;
        }
        if (!reduced) {
            remainder.push_back(h.leading_term());
            h = h - Polynomial::monomial_term(h.leading_coefficient(), h.leading_monomial(),
                                              h.order());
        }
    }
    return Polynomial::from_terms(std::move(remainder), h.order());
}

// Pending S-pair, ordered by the normal selection strategy.
struct Pair {
    int degree;
    Monomial lcm;
    std::size_t i, j;
};

struct PairLess {
    const MonomialOrder* ord;
    bool operator()(const Pair& a, const Pair& b) const {
        if (a.degree != b.degree) return a.degree < b.degree;
        auto c = ord->compare(a.lcm, b.lcm);
        if (c != std::strong_ordering::equal) return c == std::strong_ordering::less;
        if (a.i != b.i) return a.i < b.i;
        return a.j < b.j;
    }
};

// Buchberger completion. Extends `basis` in place until every S-polynomial
// reduces to zero; `on_reduction` mirrors each reduction step and each new
// element for the syzygy-tracking path (may be null).
struct CompletionHooks {
    // reduction of the current working polynomial against basis[k] by (c, m)
    std::function<void(std::size_t, const mpq_class&, const Monomial&)> on_step;
    // start of a new S-pair (i, j)
    std::function<void(std::size_t, std::size_t)> on_spair;
    // the fully reduced nonzero result was appended to the basis, scaled by 1/content
    std::function<void(const mpq_class&)> on_append;
};

void buchberger_complete(std::vector<Polynomial>& basis, const MonomialOrder& ord,
                         const CompletionHooks* hooks) {
    std::set<Pair, PairLess> pending(PairLess{&ord});
    auto push_pairs_with = [&](std::size_t j) {
        for (std::size_t i = 0; i < j; ++i) {
            Monomial L = Monomial::lcm(basis[i].leading_monomial(), basis[j].leading_monomial());
            pending.insert(Pair{L.degree(), L, i, j});
        }
    };
    for (std::size_t j = 0; j < basis.size(); ++j) push_pairs_with(j);

    auto is_pending = [&](std::size_t a, std::size_t b) {
        if (a > b) std::swap(a, b);
        Monomial L = Monomial::lcm(basis[a].leading_monomial(), basis[b].leading_monomial());
        return pending.count(Pair{L.degree(), L, a, b}) > 0;
    };

    while (!pending.empty()) {
        Pair p = *pending.begin();
        pending.erase(pending.begin());

        const Polynomial& f = basis[p.i];
        const Polynomial& g = basis[p.j];
        // First criterion: coprime leading monomials reduce to zero.
        if (f.leading_monomial().coprime_with(g.leading_monomial())) continue;
        // Chain criterion: some third leading monomial divides the lcm and both
        // flanking pairs were already considered.
        bool skip = false;
        for (std::size_t k = 0; k < basis.size() && !skip; ++k) {
            if (k == p.i || k == p.j) continue;
            if (!basis[k].leading_monomial().divides(p.lcm)) continue;
            if (!is_pending(p.i, k) && !is_pending(p.j, k)) skip = true;
        }
        if (skip) continue;

        Cofactors co = spair_cofactors(f, g);
        Polynomial s = f.times_term(co.cf, co.mf) - g.times_term(co.cg, co.mg);
        if (hooks && hooks->on_spair) hooks->on_spair(p.i, p.j);
        Polynomial h = divide_full(std::move(s), basis, hooks ? &hooks->on_step : nullptr);
        if (h.is_zero()) continue;
        mpq_class content = h.make_primitive();
        if (hooks && hooks->on_append) hooks->on_append(content);
        basis.push_back(std::move(h));
        push_pairs_with(basis.size() - 1);
    }
}

}  // namespace

Polynomial normal_form(const Polynomial& p, const GroebnerBasis& gb) {
    if (p.is_zero()) return p;
    if (p.order() != gb.order)
        throw std::invalid_argument("normal_form: polynomial sorted under a different order");
    return divide_full(p, gb.elements);
}

GroebnerBasis groebner_basis(const GradedIdeal& ideal, const MonomialOrder& ord) {
    if (ord.kind() == OrderKind::weight &&
        static_cast<int>(ord.weights().size()) != ideal.ctx.num_vars())
        throw std::invalid_argument("groebner_basis: weight length != variable count");

    std::vector<Polynomial> basis;
    basis.reserve(ideal.generators.size());
    for (const auto& g : ideal.generators) {
        Polynomial h = g.resorted(ord);
        h.make_primitive();
        basis.push_back(std::move(h));
    }
    buchberger_complete(basis, ord, nullptr);

    // Minimalize: keep leading monomials that form an antichain.
    std::vector<Polynomial> minimal;
    std::sort(basis.begin(), basis.end(), [&](const Polynomial& a, const Polynomial& b) {
        return ord.less(a.leading_monomial(), b.leading_monomial());
    });
    for (auto& g : basis) {
        bool redundant = false;
        for (const auto& kept : minimal)
            if (kept.leading_monomial().divides(g.leading_monomial())) {
                redundant = true;
                break;
            }
        if (!redundant) minimal.push_back(std::move(g));
    }

    // Interreduce tails until stable, then normalize to monic.
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < minimal.size(); ++i) {
            std::vector<Polynomial> others;
            others.reserve(minimal.size() - 1);
            for (std::size_t k = 0; k < minimal.size(); ++k)
                if (k != i) others.push_back(minimal[k]);
            Polynomial r = divide_full(minimal[i], others);
            r.make_primitive();
            if (r != minimal[i]) {
                minimal[i] = std::move(r);
                changed = true;
            }
        }
    }
    for (auto& g : minimal) g.make_monic();

    GroebnerBasis gb{ord, std::move(minimal), true};
    return gb;
}

MonomialIdeal initial_ideal(const GradedIdeal& ideal, const MonomialOrder& ord) {
    GroebnerBasis gb = groebner_basis(ideal, ord);
    std::vector<Monomial> lead;
    lead.reserve(gb.elements.size());
    for (const auto& g : gb.elements) lead.push_back(g.leading_monomial());
    return MonomialIdeal(ideal.ctx, std::move(lead));
}

namespace {

std::vector<Polynomial> zero_vector(std::size_t n, const MonomialOrder& ord) {
    return std::vector<Polynomial>(n, Polynomial::zero(ord));
}

void vector_sub_scaled(std::vector<Polynomial>& v, const std::vector<Polynomial>& w,
                       const mpq_class& c, const Monomial& m) {
    for (std::size_t i = 0; i < v.size(); ++i)
        if (!w[i].is_zero()) v[i] = v[i] - w[i].times_term(c, m);
}

// Divide the whole syzygy vector by its rational content (primitive integer
// coefficients, first nonzero component's leading coefficient positive).
void normalize_syzygy(std::vector<Polynomial>& v) {
    mpz_class num_gcd = 0, den_lcm = 1;
    const mpq_class* first = nullptr;
    for (const auto& p : v)
        for (const auto& t : p.terms()) {
            if (!first) first = &t.coeff;
            mpz_class n = t.coeff.get_num(), d = t.coeff.get_den();
            mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), n.get_mpz_t());
            mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), d.get_mpz_t());
        }
    if (!first) return;
    mpq_class content(num_gcd, den_lcm);
    content.canonicalize();
    if (*first < 0) content = -content;
    for (auto& p : v) p = p.scaled(1 / content);
}

SyzygyList taylor_syzygies(const RingContext& ctx, const std::vector<Polynomial>& gens,
                           const MonomialOrder& ord) {
    for (const auto& g : gens)
        if (!g.is_monomial())
            throw std::invalid_argument("syzygy_generators: taylor needs monomial generators");
    SyzygyList out;
    out.generator_count = gens.size();
    out.source = SyzygySource::taylor;
    for (std::size_t i = 0; i < gens.size(); ++i)
        for (std::size_t j = i + 1; j < gens.size(); ++j) {
            const Monomial L =
                Monomial::lcm(gens[i].leading_monomial(), gens[j].leading_monomial());
            auto v = zero_vector(gens.size(), ord);
            v[i] = Polynomial::monomial_term(1 / gens[i].leading_coefficient(),
                                             L.divide_exact(gens[i].leading_monomial()), ord);
            v[j] = Polynomial::monomial_term(-1 / gens[j].leading_coefficient(),
                                             L.divide_exact(gens[j].leading_monomial()), ord);
            normalize_syzygy(v);
            out.syzygies.push_back(std::move(v));
        }
    (void)ctx;
    return out;
}

SyzygyList schreyer_syzygies(const RingContext& ctx, const std::vector<Polynomial>& gens,
                             const MonomialOrder& ord) {
    (void)ctx;
    const std::size_t r = gens.size();
    SyzygyList out;
    out.generator_count = r;
    out.source = SyzygySource::schreyer;
    if (r == 0) return out;

    // Phase 1: complete to a basis, tracking every element as an exact
    // combination of the input generators.
    std::vector<Polynomial> basis;
    std::vector<std::vector<Polynomial>> expr;  // basis[k] == sum_l expr[k][l] * gens[l]
    for (std::size_t l = 0; l < r; ++l) {
        Polynomial h = gens[l].resorted(ord);
        mpq_class content = h.make_primitive();
        basis.push_back(h);
        auto e = zero_vector(r, ord);
        e[l] = Polynomial::monomial_term(1 / content, Monomial::one(ctx.num_vars()), ord);
        expr.push_back(std::move(e));
    }

    std::vector<Polynomial> work;  // expression vector of the S-poly being reduced
    CompletionHooks hooks;
    hooks.on_spair = [&](std::size_t i, std::size_t j) {
        Cofactors co = spair_cofactors(basis[i], basis[j]);
        work = zero_vector(r, ord);
        for (std::size_t l = 0; l < r; ++l) {
            work[l] = expr[i][l].times_term(co.cf, co.mf) - expr[j][l].times_term(co.cg, co.mg);
        }
    };
    hooks.on_step = [&](std::size_t k, const mpq_class& c, const Monomial& m) {
        vector_sub_scaled(work, expr[k], c, m);
    };
    hooks.on_append = [&](const mpq_class& content) {
        auto e = work;
        for (auto& p : e) p = p.scaled(1 / content);
        expr.push_back(std::move(e));
    };
    buchberger_complete(basis, ord, &hooks);

    auto emit = [&](std::vector<Polynomial> v) {
        for (const auto& p : v)
            if (!p.is_zero()) {
                normalize_syzygy(v);
                out.syzygies.push_back(std::move(v));
                return;
            }
    };

    // Phase 2: Schreyer relations of the completed basis, every pair, mapped
    // back through the tracking expressions.
    const std::size_t s = basis.size();
    for (std::size_t i = 0; i < s; ++i)
        for (std::size_t j = i + 1; j < s; ++j) {
            Cofactors co = spair_cofactors(basis[i], basis[j]);
            Polynomial sp = basis[i].times_term(co.cf, co.mf) - basis[j].times_term(co.cg, co.mg);
            auto tau = zero_vector(s, ord);
            tau[i] = Polynomial::monomial_term(co.cf, co.mf, ord);
            tau[j] = Polynomial::monomial_term(-co.cg, co.mg, ord);
            std::function<void(std::size_t, const mpq_class&, const Monomial&)> on_step =
                [&](std::size_t k, const mpq_class& c, const Monomial& m) {
                    tau[k] = tau[k] - Polynomial::monomial_term(c, m, ord);
                };
            Polynomial rem = divide_full(std::move(sp), basis, &on_step);
            if (!rem.is_zero())
                throw std::logic_error("schreyer_syzygies: completed basis failed to reduce");
            // sigma_l = sum_k tau_k * expr[k][l]
            auto sigma = zero_vector(r, ord);
            for (std::size_t k = 0; k < s; ++k) {
                if (tau[k].is_zero()) continue;
                for (std::size_t l = 0; l < r; ++l)
                    if (!expr[k][l].is_zero()) sigma[l] = sigma[l] + tau[k] * expr[k][l];
            }
            emit(std::move(sigma));
        }

    // Phase 3: re-divide each input generator by the basis; the discrepancy
    // columns e_l - A q are syzygies of the input too.
    for (std::size_t l = 0; l < r; ++l) {
        auto delta = zero_vector(r, ord);
        delta[l] = Polynomial::monomial_term(1, Monomial::one(ctx.num_vars()), ord);
        std::function<void(std::size_t, const mpq_class&, const Monomial&)> on_step =
            [&](std::size_t k, const mpq_class& c, const Monomial& m) {
                vector_sub_scaled(delta, expr[k], c, m);
            };
        Polynomial rem = divide_full(gens[l].resorted(ord), basis, &on_step);
        if (!rem.is_zero())
            throw std::logic_error("schreyer_syzygies: generator failed to re-divide");
        emit(std::move(delta));
    }

    // Deduplicate structurally identical relations.
    std::vector<std::vector<Polynomial>> unique;
    for (auto& v : out.syzygies) {
        bool seen = false;
        for (const auto& u : unique) {
            bool same = true;
            for (std::size_t l = 0; l < r && same; ++l) same = u[l] == v[l];
            if (same) {
                seen = true;
                break;
            }
        }
        if (!seen) unique.push_back(std::move(v));
    }
    out.syzygies = std::move(unique);

    // Every emitted relation must annihilate the generators exactly.
    for (const auto& v : out.syzygies) {
        Polynomial sum = Polynomial::zero(ord);
        for (std::size_t l = 0; l < r; ++l)
            if (!v[l].is_zero()) sum = sum + v[l] * gens[l].resorted(ord);
        if (!sum.is_zero()) throw std::logic_error("syzygy_generators: relation check failed");
    }
    return out;
}

}  // namespace

SyzygyList syzygy_generators(const RingContext& ctx, const std::vector<Polynomial>& gens,
                             const MonomialOrder& ord, SyzygySource source) {
    for (const auto& g : gens) {
        if (g.is_zero()) throw std::invalid_argument("syzygy_generators: zero generator");
        if (!g.is_homogeneous())
            throw std::invalid_argument("syzygy_generators: inhomogeneous generator");
    }
    SyzygyList out = source == SyzygySource::taylor ? taylor_syzygies(ctx, gens, ord)
                                                    : schreyer_syzygies(ctx, gens, ord);
    // Taylor relations are checked here too; Schreyer checks inline.
    if (source == SyzygySource::taylor)
        for (const auto& v : out.syzygies) {
            Polynomial sum = Polynomial::zero(ord);
            for (std::size_t l = 0; l < gens.size(); ++l)
                if (!v[l].is_zero()) sum = sum + v[l] * gens[l].resorted(ord);
            if (!sum.is_zero()) throw std::logic_error("syzygy_generators: relation check failed");
        }
    return out;
}

SyzygyList syzygy_generators(const RingContext& ctx, const std::vector<Polynomial>& gens,
                             const MonomialOrder& ord) {
    bool all_monomial = true;
    for (const auto& g : gens)
        if (!g.is_monomial()) {
            all_monomial = false;
            break;
        }
    return syzygy_generators(ctx, gens, ord,
                             all_monomial ? SyzygySource::taylor : SyzygySource::schreyer);
}

GradedIdeal apply_coordinate_change(const GradedIdeal& ideal, const CoordinateChange& gamma) {
    if (gamma.num_vars() != ideal.ctx.num_vars())
        throw std::invalid_argument("apply_coordinate_change: size mismatch");
    if (!gamma.is_invertible())
        throw std::invalid_argument("apply_coordinate_change: singular matrix");

    const int n = ideal.ctx.num_vars();
    const MonomialOrder work = MonomialOrder::grevlex();
    // Images of the variables, then per-variable power caches.
    std::vector<Polynomial> image(n, Polynomial::zero(work));
    for (int j = 0; j < n; ++j) {
        std::vector<Term> terms;
        for (int i = 0; i < n; ++i)
            if (gamma.entry(i, j) != 0)
                terms.push_back(Term{gamma.entry(i, j), Monomial::variable(n, i)});
        image[j] = Polynomial::from_terms(std::move(terms), work);
    }
    std::vector<std::vector<Polynomial>> powers(n);
    auto image_power = [&](int j, int e) -> const Polynomial& {
        auto& cache = powers[j];
        if (cache.empty())
            cache.push_back(Polynomial::monomial_term(1, Monomial::one(n), work));
        while (static_cast<int>(cache.size()) <= e) cache.push_back(cache.back() * image[j]);
        return cache[e];
    };

    std::vector<Polynomial> out;
    out.reserve(ideal.generators.size());
    for (const auto& g : ideal.generators) {
        Polynomial acc = Polynomial::zero(work);
        for (const auto& t : g.terms()) {
            Polynomial prod = Polynomial::monomial_term(t.coeff, Monomial::one(n), work);
            for (int j = 0; j < n; ++j)
                if (t.mono[j] > 0) prod = prod * image_power(j, t.mono[j]);
            acc = acc + prod;
        }
        Polynomial result = acc.resorted(g.order());
        result.make_primitive();
        out.push_back(std::move(result));
    }
    return GradedIdeal(ideal.ctx, std::move(out));
}

bool ideal_contains(const GroebnerBasis& gb, const Polynomial& p) {
    if (p.is_zero()) return true;
    return normal_form(p.resorted(gb.order), gb).is_zero();
}

bool ideal_contains(const GradedIdeal& ideal, const Polynomial& p, const MonomialOrder& ord) {
    return ideal_contains(groebner_basis(ideal, ord), p);
}

bool ideal_equal(const GradedIdeal& a, const GradedIdeal& b, const MonomialOrder& ord) {
    if (a.ctx != b.ctx) throw std::invalid_argument("ideal_equal: different rings");
    GroebnerBasis ga = groebner_basis(a, ord);
    GroebnerBasis gb = groebner_basis(b, ord);
    for (const auto& g : b.generators)
        if (!ideal_contains(ga, g)) return false;
    for (const auto& g : a.generators)
        if (!ideal_contains(gb, g)) return false;
    return true;
}

}  // namespace sghilb
