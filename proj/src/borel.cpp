#include "sghilb/borel.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <stdexcept>
#include <unordered_map>

#include "sghilb/order.hpp"

namespace sghilb {

bool borel_leq(const Monomial& a, const Monomial& b) {
    if (a.num_vars() != b.num_vars())
        throw std::invalid_argument("borel_leq: mismatched variable counts");
    if (a.degree() != b.degree())
        throw std::invalid_argument("borel_leq: monomials must have equal degree");
    int sa = 0, sb = 0;
    for (int i = 0; i < a.num_vars() - 1; ++i) {
        sa += a.exponent(i);
        sb += b.exponent(i);
        if (sb < sa) return false;
    }
    return true;
}

std::vector<Monomial> borel_raises(const Monomial& m) {
    std::vector<Monomial> out;
    for (int j = 1; j < m.num_vars(); ++j) {
        if (m.exponent(j) == 0) continue;
        Monomial base = m;
        base.set_exponent(j, m.exponent(j) - 1);
        for (int i = 0; i < j; ++i) out.push_back(base.times_var(i));
    }
    return out;
}

std::optional<Monomial> strongly_stable_witness(const MonomialIdeal& ideal) {
    for (const Monomial& g : ideal.min_gens())
        for (const Monomial& up : borel_raises(g))
            if (!ideal.contains(up)) return up;
    return std::nullopt;
}

bool is_strongly_stable(const MonomialIdeal& ideal) {
    return !strongly_stable_witness(ideal).has_value();
}

namespace {

// I : x_i^infty for a monomial ideal: delete x_i from every generator.
MonomialIdeal saturate_at_variable(const MonomialIdeal& ideal, int i) {
    std::vector<Monomial> gens;
    for (Monomial g : ideal.min_gens()) {
        g.set_exponent(i, 0);
        gens.push_back(g);
    }
    return MonomialIdeal(ideal.ctx(), std::move(gens));
}

MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b) {
    std::vector<Monomial> gens;
    for (const Monomial& x : a.min_gens())
        for (const Monomial& y : b.min_gens()) gens.push_back(Monomial::lcm(x, y));
    return MonomialIdeal(a.ctx(), std::move(gens));
}

}  // namespace

MonomialIdeal saturate(const MonomialIdeal& ideal) {
    if (ideal.is_zero_ideal() || ideal.is_unit_ideal()) return ideal;
    const int n = ideal.ctx().num_vars();
    MonomialIdeal acc = saturate_at_variable(ideal, 0);
    for (int i = 1; i < n; ++i) acc = intersect(acc, saturate_at_variable(ideal, i));
    return acc;
}

MonomialIdeal saturate_strongly_stable(const MonomialIdeal& ideal) {
    if (auto w = strongly_stable_witness(ideal))
        throw std::invalid_argument("saturate_strongly_stable: ideal is not strongly stable");
    return saturate_at_variable(ideal, ideal.ctx().num_vars() - 1);
}

bool is_saturated(const MonomialIdeal& ideal) { return saturate(ideal) == ideal; }

namespace {

// One graded layer of the search: the candidate monomials of a fixed degree
// in descending lex order, with each candidate's raising moves resolved to
// positions (raises are lex-greater, so they sit at smaller indices).
struct Layer {
    std::vector<Monomial> monos;
    std::vector<std::vector<int>> raise_pos;
};

Layer build_layer(const RingContext& ctx, int degree, bool last_var_free) {
    Layer layer;
    for (const Monomial& m : monomials_of_degree(ctx, degree, MonomialOrder::lex()))
        if (!last_var_free || m.exponent(ctx.num_vars() - 1) == 0) layer.monos.push_back(m);
    std::unordered_map<Monomial, int, MonomialHash> pos;
    for (std::size_t k = 0; k < layer.monos.size(); ++k) pos.emplace(layer.monos[k], static_cast<int>(k));
    layer.raise_pos.resize(layer.monos.size());
    for (std::size_t k = 0; k < layer.monos.size(); ++k) {
        for (const Monomial& up : borel_raises(layer.monos[k])) {
            auto it = pos.find(up);
            if (it == pos.end())
                throw std::logic_error("build_layer: raise left the layer");
            layer.raise_pos[k].push_back(it->second);
        }
    }
    return layer;
}

// Enumerates subsets of `layer` that are closed under raising moves, contain
// all `required` positions, stay within `allowed`, and (when target >= 0)
// have exactly `target` members. Calls `sink` with the chosen flags; a false
// return or an exhausted node budget aborts the whole walk.
struct UpperSubsetSearch {
    const Layer& layer;
    const std::vector<char>& required;
    const std::vector<char>& allowed;
    std::int64_t target;  // -1: any size
    std::uint64_t& nodes;
    std::uint64_t node_cap;
    const std::function<bool(const std::vector<char>&)>& sink;

    std::vector<char> chosen;
    std::vector<std::int64_t> allowed_from;  // suffix counts of allowed positions

    bool run() {
        const std::size_t L = layer.monos.size();
        chosen.assign(L, 0);
        allowed_from.assign(L + 1, 0);
        for (std::size_t k = L; k-- > 0;)
            allowed_from[k] = allowed_from[k + 1] + (allowed[k] ? 1 : 0);
        return walk(0, 0);
    }

    bool walk(std::size_t k, std::int64_t taken) {
        if (++nodes > node_cap) return false;
        if (target >= 0) {
            if (taken > target) return true;  // dead branch, keep searching elsewhere
            if (taken + allowed_from[k] < target) return true;
        }
        if (k == layer.monos.size()) {
            if (target >= 0 && taken != target) return true;
            return sink(chosen);
        }
        bool can_take = allowed[k];
        for (int r : layer.raise_pos[k])
            if (!chosen[r]) { can_take = false; break; }
        if (required[k]) {
            if (!can_take)
                throw std::logic_error("upper subset search: required position not takeable");
            chosen[k] = 1;
            bool go = walk(k + 1, taken + 1);
            chosen[k] = 0;
            return go;
        }
        if (can_take) {
            chosen[k] = 1;
            if (!walk(k + 1, taken + 1)) { chosen[k] = 0; return false; }
            chosen[k] = 0;
        }
        return walk(k + 1, taken);
    }
};

bool enumerate_upper_subsets(const Layer& layer, const std::vector<char>& required,
                             const std::vector<char>& allowed, std::int64_t target,
                             std::uint64_t& nodes, std::uint64_t node_cap,
                             const std::function<bool(const std::vector<char>&)>& sink) {
    for (std::size_t k = 0; k < layer.monos.size(); ++k)
        if (required[k] && !allowed[k]) return true;  // no solutions on this branch
    UpperSubsetSearch search{layer, required, allowed, target, nodes, node_cap, sink, {}, {}};
    return search.run();
}

// Positions in `layer` of the degree-raising multiples x_i * m of the chosen
// monomials one degree down.
std::vector<char> required_from_below(const Layer& below, const std::vector<char>& chosen_below,
                                      const Layer& layer, int num_multiplier_vars) {
    std::unordered_map<Monomial, int, MonomialHash> pos;
    for (std::size_t k = 0; k < layer.monos.size(); ++k) pos.emplace(layer.monos[k], static_cast<int>(k));
    std::vector<char> req(layer.monos.size(), 0);
    for (std::size_t k = 0; k < below.monos.size(); ++k) {
        if (!chosen_below[k]) continue;
        for (int i = 0; i < num_multiplier_vars; ++i) {
            auto it = pos.find(below.monos[k].times_var(i));
            if (it == pos.end())
                throw std::logic_error("required_from_below: multiple left the layer");
            req[it->second] = 1;
        }
    }
    return req;
}

// Minimal generators of the ideal whose graded pieces are the chosen layers:
// the chosen monomials not obtained as x_i times a chosen monomial below.
std::vector<Monomial> gens_from_layers(const RingContext& ctx, const std::vector<Layer>& layers,
                                       const std::vector<std::vector<char>>& chosen) {
    std::vector<Monomial> gens;
    for (std::size_t d = 0; d < layers.size(); ++d) {
        for (std::size_t k = 0; k < layers[d].monos.size(); ++k) {
            if (!chosen[d][k]) continue;
            const Monomial& m = layers[d].monos[k];
            bool from_below = false;
            if (d > 0) {
                for (int i = 0; i < ctx.num_vars() && !from_below; ++i) {
                    if (m.exponent(i) == 0) continue;
                    Monomial down = m.divide_exact(Monomial::variable(ctx.num_vars(), i));
                    auto& prev = layers[d - 1].monos;
                    auto it = std::find(prev.begin(), prev.end(), down);
                    if (it != prev.end() && chosen[d - 1][it - prev.begin()]) from_below = true;
                }
            }
            if (!from_below) gens.push_back(m);
        }
    }
    return gens;
}

}  // namespace

BorelEnumeration enumerate_borel_with_hf(const RingContext& ctx,
                                         const std::vector<std::int64_t>& h_ideal,
                                         std::optional<int> D_opt, std::uint64_t node_cap) {
    if (h_ideal.empty()) throw std::invalid_argument("enumerate_borel_with_hf: empty prefix");
    std::vector<std::int64_t> h = h_ideal;
    int D;
    if (D_opt) {
        D = *D_opt;
    } else {
        // Default bound: the supplied prefix itself. The lex segment
        // maximizes regularity over ideals sharing the function and strongly
        // stable generators never pass the regularity, so a prefix reaching
        // the deepest lex-segment generator already sees every candidate's
        // generators; lex_segment below doubles as the admissibility check.
        D = static_cast<int>(h.size()) - 1;
        lex_segment(ctx, h_ideal, D);
    }
    if (D > static_cast<int>(h.size()) - 1) {
        HilbertData hd{ctx, h, std::nullopt, -1};
        hilbert_polynomial(hd);
        h = extend_h_ideal(hd, D);
    } else {
        h.resize(D + 1);
    }

    BorelEnumeration out;
    out.h_ideal = h;
    out.degree_bound = D;

    std::vector<Layer> layers;
    layers.reserve(D + 1);
    for (int d = 0; d <= D; ++d) {
        layers.push_back(build_layer(ctx, d, false));
        if (h[d] < 0 || h[d] > static_cast<std::int64_t>(layers[d].monos.size()))
            throw std::invalid_argument("enumerate_borel_with_hf: h(" + std::to_string(d) +
                                        ") out of range");
    }

    std::vector<std::vector<char>> chosen(D + 1);
    std::function<bool(int)> descend = [&](int d) -> bool {
        if (d > D) {
            out.ideals.emplace_back(ctx, gens_from_layers(ctx, layers, chosen));
            return true;
        }
        std::vector<char> required(layers[d].monos.size(), 0);
        if (d > 0)
            required = required_from_below(layers[d - 1], chosen[d - 1], layers[d], ctx.num_vars());
        std::vector<char> allowed(layers[d].monos.size(), 1);
        return enumerate_upper_subsets(layers[d], required, allowed, h[d], out.nodes, node_cap,
                                       [&](const std::vector<char>& pick) {
                                           chosen[d] = pick;
                                           return descend(d + 1);
                                       });
    };
    out.complete = descend(0);
    std::sort(out.ideals.begin(), out.ideals.end(), MonomialIdeal::list_before);
    return out;
}

BorelEnumeration enumerate_saturated_borel_with_hp(const RingContext& ctx, const HilbertPoly& p,
                                                   int max_gen_degree, std::uint64_t node_cap) {
    const int n = ctx.num_vars();
    if (n < 2) throw std::invalid_argument("enumerate_saturated_borel_with_hp: need >= 2 variables");
    const int R = max_gen_degree;
    if (R < 1) throw std::invalid_argument("enumerate_saturated_borel_with_hp: bound must be >= 1");

    BorelEnumeration out;
    out.degree_bound = R;

    // Layers of last-variable-free monomials; their subring quotient counts
    // drive the pruning bounds.
    std::vector<Layer> layers(R + 1);
    for (int d = 1; d <= R; ++d) layers[d] = build_layer(ctx, d, true);

    std::vector<std::vector<char>> chosen(R + 1);
    std::vector<Monomial> gens;  // minimal generators accumulated along the branch
    std::vector<std::size_t> gens_mark(R + 2, 0);
    // quotient_sum[d] = sum_{e<=d} #(last-var-free degree-e monomials outside the ideal)
    std::vector<std::int64_t> quotient_sum(R + 1, 0);
    quotient_sum[0] = 1;

    // Hilbert polynomial of S / (current gens), exact: beyond the generator
    // degrees the subring quotient count is already polynomial, so n points
    // two degrees clear of the deepest generator pin it down.
    auto current_poly = [&](int depth) -> HilbertPoly {
        std::int64_t acc = quotient_sum[depth];
        std::vector<std::pair<std::int64_t, mpq_class>> pts;
        for (int e = depth + 1; e <= depth + n + 2; ++e) {
            std::int64_t count = 0;
            for (const Monomial& m : monomials_of_degree_unsorted(ctx, e)) {
                if (m.exponent(n - 1) != 0) continue;
                bool inside = false;
                for (const Monomial& g : gens)
                    if (g.divides(m)) { inside = true; break; }
                if (!inside) ++count;
            }
            acc += count;
            pts.emplace_back(e, mpq_class(acc));
        }
        std::vector<std::pair<std::int64_t, mpq_class>> head(pts.begin(), pts.begin() + n);
        HilbertPoly fit = HilbertPoly::from_points(head);
        for (std::size_t i = n; i < pts.size(); ++i)
            if (fit.eval(pts[i].first) != pts[i].second)
                throw std::logic_error("enumerate_saturated_borel_with_hp: unstable fit");
        return fit;
    };

    std::function<bool(int)> descend = [&](int d) -> bool {
        // Two-sided pruning. Low side: stopping here caps the quotient at a
        // constant, so p must not eventually drop below what is already free.
        // High side: adding nothing more keeps the largest quotient, so p
        // must not eventually exceed it.
        HilbertPoly pmax = current_poly(d - 1);
        if ((pmax - p).eventual_sign() < 0) return true;
        if (d > R) {
            if (pmax == p) out.ideals.emplace_back(ctx, gens);
            return true;
        }
        HilbertPoly pmin = HilbertPoly::constant(mpq_class(quotient_sum[d - 1]));
        if ((p - pmin).eventual_sign() < 0) return true;

        std::vector<char> required(layers[d].monos.size(), 0);
        if (d > 1)
            required = required_from_below(layers[d - 1], chosen[d - 1], layers[d], n - 1);
        std::vector<char> allowed(layers[d].monos.size(), 1);
        return enumerate_upper_subsets(
            layers[d], required, allowed, -1, out.nodes, node_cap,
            [&](const std::vector<char>& pick) {
                chosen[d] = pick;
                std::int64_t taken = std::count(pick.begin(), pick.end(), char(1));
                quotient_sum[d] = quotient_sum[d - 1] +
                                  static_cast<std::int64_t>(pick.size()) - taken;
                gens_mark[d] = gens.size();
                for (std::size_t k = 0; k < pick.size(); ++k) {
                    if (!pick[k]) continue;
                    bool from_below = false;
                    if (d > 1) {
                        const Monomial& m = layers[d].monos[k];
                        for (int i = 0; i < n - 1 && !from_below; ++i) {
                            if (m.exponent(i) == 0) continue;
                            Monomial down = m.divide_exact(Monomial::variable(n, i));
                            auto& prev = layers[d - 1].monos;
                            auto it = std::find(prev.begin(), prev.end(), down);
                            if (it != prev.end() && chosen[d - 1][it - prev.begin()])
                                from_below = true;
                        }
                    }
                    if (!from_below) gens.push_back(layers[d].monos[k]);
                }
                bool go = descend(d + 1);
                gens.resize(gens_mark[d]);
                return go;
            });
    };
    out.complete = descend(1);
    std::sort(out.ideals.begin(), out.ideals.end(), MonomialIdeal::list_before);
    return out;
}

std::vector<MonomialIdeal> nonsat_expansions(const MonomialIdeal& sat,
                                             const std::vector<std::int64_t>& h_ideal) {
    if (h_ideal.empty()) throw std::invalid_argument("nonsat_expansions: empty prefix");
    const RingContext& ctx = sat.ctx();
    const int D = static_cast<int>(h_ideal.size()) - 1;
    const MonomialIdeal target_sat = saturate(sat);

    std::vector<Layer> layers;
    layers.reserve(D + 1);
    std::vector<std::vector<char>> allowed(D + 1);
    for (int d = 0; d <= D; ++d) {
        layers.push_back(build_layer(ctx, d, false));
        allowed[d].resize(layers[d].monos.size());
        for (std::size_t k = 0; k < layers[d].monos.size(); ++k)
            allowed[d][k] = sat.contains(layers[d].monos[k]) ? 1 : 0;
    }

    std::vector<MonomialIdeal> result;
    std::vector<std::vector<char>> chosen(D + 1);
    std::uint64_t nodes = 0;
    std::function<bool(int)> descend = [&](int d) -> bool {
        if (d > D) {
            MonomialIdeal J(ctx, gens_from_layers(ctx, layers, chosen));
            if (saturate(J) == target_sat) result.push_back(std::move(J));
            return true;
        }
        std::vector<char> required(layers[d].monos.size(), 0);
        if (d > 0)
            required = required_from_below(layers[d - 1], chosen[d - 1], layers[d], ctx.num_vars());
        return enumerate_upper_subsets(layers[d], required, allowed[d], h_ideal[d], nodes,
                                       std::numeric_limits<std::uint64_t>::max(),
                                       [&](const std::vector<char>& pick) {
                                           chosen[d] = pick;
                                           return descend(d + 1);
                                       });
    };
    descend(0);
    std::sort(result.begin(), result.end(), MonomialIdeal::list_before);
    return result;
}

}  // namespace sghilb
