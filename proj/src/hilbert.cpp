#include "sghilb/hilbert.hpp"

#include <algorithm>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "sghilb/borel.hpp"
#include "sghilb/groebner.hpp"
#include "sghilb/parse.hpp"

namespace sghilb {

namespace {

void strip_trailing_zeros(std::vector<mpq_class>& c) {
    while (!c.empty() && c.back() == 0) c.pop_back();
}

}  // namespace

HilbertPoly::HilbertPoly(std::vector<mpq_class> ascending_coeffs) : c_(std::move(ascending_coeffs)) {
    strip_trailing_zeros(c_);
}

mpq_class HilbertPoly::eval(std::int64_t d) const {
    mpq_class acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * d + *it;
    return acc;
}

mpq_class HilbertPoly::leading_coefficient() const {
    if (c_.empty()) throw std::logic_error("leading_coefficient of zero polynomial");
    return c_.back();
}

HilbertPoly HilbertPoly::operator+(const HilbertPoly& o) const {
    std::vector<mpq_class> c(std::max(c_.size(), o.c_.size()), mpq_class(0));
    for (std::size_t i = 0; i < c_.size(); ++i) c[i] += c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) c[i] += o.c_[i];
    return HilbertPoly(std::move(c));
}

HilbertPoly HilbertPoly::operator-(const HilbertPoly& o) const {
    std::vector<mpq_class> c(std::max(c_.size(), o.c_.size()), mpq_class(0));
    for (std::size_t i = 0; i < c_.size(); ++i) c[i] += c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) c[i] -= o.c_[i];
    return HilbertPoly(std::move(c));
}

int HilbertPoly::eventual_sign() const {
    if (c_.empty()) return 0;
    return sgn(c_.back());
}

HilbertPoly HilbertPoly::from_points(const std::vector<std::pair<std::int64_t, mpq_class>>& pts) {
    if (pts.empty()) return HilbertPoly();
    // Newton's divided differences, then expansion into the monomial basis.
    std::size_t k = pts.size();
    std::vector<mpq_class> dd;
    dd.reserve(k);
    for (const auto& p : pts) dd.push_back(p.second);
    std::vector<mpq_class> newton;  // dd[0], dd[0,1], ...
    newton.push_back(dd[0]);
    for (std::size_t level = 1; level < k; ++level) {
        for (std::size_t i = 0; i + level < k; ++i) {
            mpq_class denom(pts[i + level].first - pts[i].first);
            if (denom == 0) throw std::invalid_argument("from_points: repeated abscissa");
            dd[i] = (dd[i + 1] - dd[i]) / denom;
        }
        dd.pop_back();
        newton.push_back(dd[0]);
    }
    // p(d) = sum_j newton[j] * prod_{i<j} (d - x_i)
    std::vector<mpq_class> coeffs{newton[0]};
    std::vector<mpq_class> basis{mpq_class(1)};  // running product
    for (std::size_t j = 1; j < k; ++j) {
        // basis *= (d - x_{j-1})
        std::vector<mpq_class> next(basis.size() + 1, mpq_class(0));
        mpq_class x(pts[j - 1].first);
        for (std::size_t i = 0; i < basis.size(); ++i) {
            next[i + 1] += basis[i];
            next[i] -= basis[i] * x;
        }
        basis = std::move(next);
        if (coeffs.size() < basis.size()) coeffs.resize(basis.size(), mpq_class(0));
        for (std::size_t i = 0; i < basis.size(); ++i) coeffs[i] += newton[j] * basis[i];
    }
    return HilbertPoly(std::move(coeffs));
}

HilbertPoly HilbertPoly::binomial_in_d(std::int64_t shift, int k) {
    if (k < 0) throw std::invalid_argument("binomial_in_d: negative k");
    // C(d + shift, k) = (d + shift)(d + shift - 1)...(d + shift - k + 1) / k!
    std::vector<mpq_class> c{mpq_class(1)};
    for (int i = 0; i < k; ++i) {
        std::vector<mpq_class> next(c.size() + 1, mpq_class(0));
        mpq_class a(shift - i);
        for (std::size_t j = 0; j < c.size(); ++j) {
            next[j + 1] += c[j];
            next[j] += c[j] * a;
        }
        c = std::move(next);
    }
    mpz_class kfact;
    mpz_fac_ui(kfact.get_mpz_t(), static_cast<unsigned long>(k));
    for (auto& q : c) q /= mpq_class(kfact);
    return HilbertPoly(std::move(c));
}

HilbertPoly HilbertPoly::parse(std::string_view text) {
    RingContext dring({"d"});
    Polynomial p = parse_polynomial(text, dring, MonomialOrder::lex());
    std::vector<mpq_class> c;
    for (const auto& t : p.terms()) {
        int e = t.mono.exponent(0);
        if (static_cast<std::size_t>(e) >= c.size()) c.resize(e + 1, mpq_class(0));
        c[e] += t.coeff;
    }
    return HilbertPoly(std::move(c));
}

std::string HilbertPoly::to_string() const {
    if (c_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (int e = degree(); e >= 0; --e) {
        const mpq_class& q = c_[e];
        if (q == 0) continue;
        mpq_class mag = abs(q);
        if (first) {
            if (q < 0) out << "-";
            first = false;
        } else {
            out << (q < 0 ? " - " : " + ");
        }
        bool unit = (mag == 1);
        if (e == 0 || !unit) out << mag.get_str();
        if (e > 0) {
            if (!unit) out << "*";
            out << "d";
            if (e > 1) out << "^" << e;
        }
    }
    return out.str();
}

mpz_class binomial(std::int64_t n, std::int64_t k) {
    if (k < 0 || n < 0 || k > n) return 0;
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

std::int64_t monomial_count(int num_vars, int d) {
    if (d < 0) return 0;
    mpz_class c = binomial(num_vars - 1 + d, d);
    if (!c.fits_slong_p()) throw std::overflow_error("monomial_count overflow");
    return c.get_si();
}

HilbertData hilbert_function(const MonomialIdeal& ideal, int max_degree) {
    if (max_degree < 0) throw std::invalid_argument("hilbert_function: negative degree bound");
    HilbertData hd{ideal.ctx(), {}, std::nullopt, -1};
    hd.h_ideal.reserve(max_degree + 1);
    for (int d = 0; d <= max_degree; ++d) hd.h_ideal.push_back(ideal.dim_in_degree(d));
    return hd;
}

HilbertData hilbert_function(const GradedIdeal& ideal, int max_degree) {
    if (ideal.all_generators_monomial()) {
        MonomialIdeal mi(ideal.ctx, [&] {
            std::vector<Monomial> gens;
            for (const auto& g : ideal.generators) gens.push_back(g.leading_monomial());
            return gens;
        }());
        return hilbert_function(mi, max_degree);
    }
    // dim I_d = dim in(I)_d for any monomial order.
    MonomialIdeal in = initial_ideal(ideal, MonomialOrder::grevlex());
    HilbertData hd = hilbert_function(in, max_degree);
    hd.ctx = ideal.ctx;
    return hd;
}

const HilbertPoly& hilbert_polynomial(HilbertData& hd) {
    if (hd.polynomial) return *hd.polynomial;
    int D = hd.max_degree();
    int n = hd.ctx.num_vars() - 1;  // deg p_{S/I} <= n
    // Interpolate from n+1 consecutive top degrees, certify on >= 2 more.
    int need = (n + 1) + 2;
    for (int s = 0; s + need - 1 <= D; ++s) {
        std::vector<std::pair<std::int64_t, mpq_class>> pts;
        for (int d = s; d <= s + n; ++d) pts.emplace_back(d, mpq_class(hd.h_quotient(d)));
        HilbertPoly p = HilbertPoly::from_points(pts);
        bool ok = true;
        for (int d = s + n + 1; d <= D; ++d) {
            if (p.eval(d) != hd.h_quotient(d)) { ok = false; break; }
        }
        if (!ok) continue;
        int stable = s;
        while (stable > 0 && p.eval(stable - 1) == hd.h_quotient(stable - 1)) --stable;
        hd.polynomial = std::move(p);
        hd.stable_from = stable;
        return *hd.polynomial;
    }
    throw std::runtime_error(
        "hilbert_polynomial: prefix too short to certify a polynomial (need agreement on two "
        "degrees beyond the interpolation window)");
}

std::vector<std::int64_t> extend_h_ideal(const HilbertData& hd, int D) {
    if (D <= hd.max_degree())
        return {hd.h_ideal.begin(), hd.h_ideal.begin() + (D + 1)};
    if (!hd.polynomial)
        throw std::logic_error("extend_h_ideal: call hilbert_polynomial first");
    std::vector<std::int64_t> h = hd.h_ideal;
    for (int d = hd.max_degree() + 1; d <= D; ++d) {
        mpq_class v = hd.polynomial->eval(d);
        if (v.get_den() != 1) throw std::runtime_error("extend_h_ideal: non-integer polynomial value");
        std::int64_t total = monomial_count(hd.ctx.num_vars(), d);
        std::int64_t q = mpz_class(v.get_num()).get_si();
        if (q < 0 || q > total) throw std::runtime_error("extend_h_ideal: polynomial value out of range");
        h.push_back(total - q);
    }
    return h;
}

MonomialIdeal lex_segment(const RingContext& ctx, const std::vector<std::int64_t>& h_ideal,
                          std::optional<int> D_opt) {
    if (h_ideal.empty()) throw std::invalid_argument("lex_segment: empty Hilbert function");
    std::vector<std::int64_t> h = h_ideal;
    int D = D_opt.value_or(static_cast<int>(h.size()) - 1);
    if (D < 0) throw std::invalid_argument("lex_segment: negative degree bound");
    if (D > static_cast<int>(h.size()) - 1) {
        HilbertData hd{ctx, h, std::nullopt, -1};
        hilbert_polynomial(hd);
        h = extend_h_ideal(hd, D);
    }
    const MonomialOrder lex = MonomialOrder::lex();
    std::vector<Monomial> gens;
    std::vector<Monomial> prev_layer;  // L_{d-1}, descending lex
    for (int d = 0; d <= D; ++d) {
        std::int64_t total = monomial_count(ctx.num_vars(), d);
        std::int64_t k = h[d];
        if (k < 0 || k > total)
            throw std::invalid_argument("lex_segment: h(" + std::to_string(d) +
                                        ") out of range [0, " + std::to_string(total) + "]");
        std::vector<Monomial> layer = monomials_of_degree(ctx, d, lex);
        std::vector<Monomial> cur(layer.begin(), layer.begin() + k);
        // The segment must absorb multiples of the previous one: every
        // x_i * m with m in L_{d-1} must be lex->= the segment cutoff.
        for (const Monomial& m : prev_layer) {
            for (int i = 0; i < ctx.num_vars(); ++i) {
                Monomial up = m.times_var(i);
                bool inside = k > 0 && !lex.greater(cur[k - 1], up);
                if (!inside)
                    throw std::invalid_argument("lex_segment: h is not an admissible Hilbert "
                                                "function (growth from degree " +
                                                std::to_string(d - 1) + " to " + std::to_string(d) +
                                                " violates the segment closure)");
            }
        }
        // New generators: segment members not reachable from below.
        for (const Monomial& m : cur) {
            bool reachable = false;
            for (int i = 0; i < ctx.num_vars() && !reachable; ++i) {
                if (m.exponent(i) > 0) {
                    Monomial down = m.divide_exact(Monomial::variable(ctx.num_vars(), i));
                    reachable = std::find(prev_layer.begin(), prev_layer.end(), down) != prev_layer.end();
                }
            }
            if (!reachable) gens.push_back(m);
        }
        prev_layer = std::move(cur);
    }
    return MonomialIdeal(ctx, gens);
}

int regularity(const MonomialIdeal& ideal) {
    if (!is_strongly_stable(ideal))
        throw std::invalid_argument(
            "regularity: input is not strongly stable; pass the generic initial ideal instead");
    return ideal.max_generator_degree();
}

int gotzmann_bound(const HilbertPoly& p) {
    if (p.is_zero()) return 0;
    if (p.eventual_sign() < 0)
        throw std::invalid_argument("gotzmann_bound: polynomial is eventually negative");
    HilbertPoly rest = p;
    int count = 0;
    int prev_deg = std::numeric_limits<int>::max();
    while (!rest.is_zero()) {
        if (rest.eventual_sign() < 0 || rest.degree() > prev_deg)
            throw std::invalid_argument("gotzmann_bound: polynomial admits no binomial decomposition");
        int b = rest.degree();
        ++count;
        rest = rest - HilbertPoly::binomial_in_d(b - (count - 1), b);
        prev_deg = b;
        if (count > 100000)
            throw std::invalid_argument("gotzmann_bound: decomposition does not terminate");
    }
    return count;
}

}  // namespace sghilb
