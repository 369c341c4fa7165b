#include "sghilb/scenarios.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>
#include <string>
#include <utility>

#include "sghilb/borel.hpp"
#include "sghilb/cases_data.hpp"
#include "sghilb/format.hpp"
#include "sghilb/groebner.hpp"
#include "sghilb/parse.hpp"

namespace sghilb {

namespace {

[[noreturn]] void fail_at(int line, const std::string& msg) {
    throw std::runtime_error("cases: line " + std::to_string(line) + ": " + msg);
}

std::string trim(std::string_view s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return std::string(s.substr(b, e - b));
}

std::vector<std::string> split_ws(std::string_view s) {
    std::vector<std::string> out;
    std::size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
        std::size_t j = i;
        while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j]))) ++j;
        if (j > i) out.push_back(std::string(s.substr(i, j - i)));
        i = j;
    }
    return out;
}

std::vector<std::string> split_on(std::string_view s, char sep) {
    std::vector<std::string> out;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= s.size(); ++i) {
        if (i == s.size() || s[i] == sep) {
            out.push_back(trim(s.substr(start, i - start)));
            start = i + 1;
        }
    }
    return out;
}

int parse_int(const std::string& tok, int line) {
    try {
        std::size_t used = 0;
        int v = std::stoi(tok, &used);
        if (used != tok.size()) fail_at(line, "bad integer '" + tok + "'");
        return v;
    } catch (const std::runtime_error&) {
        throw;
    } catch (const std::exception&) {
        fail_at(line, "bad integer '" + tok + "'");
    }
}

std::vector<Polynomial> parse_gens(const std::string& text, const RingContext& ctx, int line) {
    try {
        return parse_polynomial_list(text, ctx);
    } catch (const ParseError& e) {
        fail_at(line, e.what());
    }
}

std::vector<Monomial> parse_monomial_gens(const std::string& text, const RingContext& ctx,
                                          int line) {
    std::vector<Monomial> out;
    for (const auto& p : parse_gens(text, ctx, line)) {
        if (!p.is_monomial() || p.leading_coefficient() != 1)
            fail_at(line, "expected a monomial, got '" + to_string(p, ctx) + "'");
        out.push_back(p.leading_monomial());
    }
    return out;
}

// Splits "head : tail" at the first colon; tail empty when there is none.
std::pair<std::string, std::string> split_colon(std::string_view s) {
    auto pos = s.find(':');
    if (pos == std::string_view::npos) return {trim(s), ""};
    return {trim(s.substr(0, pos)), trim(s.substr(pos + 1))};
}

bool name_defined(const ScenarioCase& c, const std::string& name) {
    return c.find_stable(name) || c.find_saturated(name) || c.find_component(name) ||
           c.find_point(name);
}

void ensure_fresh(const ScenarioCase& c, const std::string& name, int line) {
    if (name_defined(c, name)) fail_at(line, "duplicate name '" + name + "'");
}

void ensure_known(const ScenarioCase& c, const std::string& name, int line) {
    if (!name_defined(c, name)) fail_at(line, "unknown ideal name '" + name + "'");
}

CoordinateChange parse_gamma_images(const std::string& text, const RingContext& ctx, int line) {
    const int n = ctx.num_vars();
    std::vector<mpq_class> entries(static_cast<std::size_t>(n) * n, 0);
    std::vector<bool> mapped(n, false);
    for (const auto& piece : split_on(text, ';')) {
        auto arrow = piece.find("->");
        if (arrow == std::string::npos) fail_at(line, "expected 'var -> linear form'");
        std::string var = trim(std::string_view(piece).substr(0, arrow));
        int col = ctx.var_index(var);
        if (col < 0) fail_at(line, "unknown variable '" + var + "'");
        if (mapped[col]) fail_at(line, "variable '" + var + "' mapped twice");
        mapped[col] = true;
        Polynomial image;
        try {
            image = parse_polynomial(std::string_view(piece).substr(arrow + 2), ctx);
        } catch (const ParseError& e) {
            fail_at(line, e.what());
        }
        if (image.is_zero() || image.degree() != 1 || !image.is_homogeneous())
            fail_at(line, "image of '" + var + "' is not a linear form");
        for (const auto& t : image.terms()) {
            for (int i = 0; i < n; ++i)
                if (t.mono[i] == 1) entries[static_cast<std::size_t>(i) * n + col] = t.coeff;
        }
    }
    for (int j = 0; j < n; ++j)
        if (!mapped[j]) fail_at(line, "variable '" + ctx.var_name(j) + "' has no image");
    CoordinateChange change(n, std::move(entries));
    if (!change.is_invertible()) fail_at(line, "coordinate change is singular");
    return change;
}

std::uint64_t fnv1a(std::string_view s) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char ch : s) {
        h ^= ch;
        h *= 1099511628211ULL;
    }
    return h;
}

std::string join(const std::vector<std::string>& parts, const char* sep) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out += sep;
        out += parts[i];
    }
    return out;
}

std::string ideal_list_str(const std::vector<MonomialIdeal>& v) {
    std::vector<std::string> parts;
    parts.reserve(v.size());
    for (const auto& ideal : v) parts.push_back(to_string(ideal));
    return join(parts, " ; ");
}

std::string int_list_str(const std::vector<std::int64_t>& v) {
    std::vector<std::string> parts;
    parts.reserve(v.size());
    for (auto x : v) parts.push_back(std::to_string(x));
    return join(parts, " ");
}

}  // namespace

const NamedStableIdeal* ScenarioCase::find_stable(const std::string& name) const {
    for (const auto& b : stable)
        if (b.name == name) return &b;
    return nullptr;
}

const NamedStableIdeal* ScenarioCase::find_saturated(const std::string& name) const {
    for (const auto& s : saturated)
        if (s.name == name) return &s;
    return nullptr;
}

const NamedComponent* ScenarioCase::find_component(const std::string& name) const {
    for (const auto& m : components)
        if (m.name == name) return &m;
    return nullptr;
}

const NamedPoint* ScenarioCase::find_point(const std::string& name) const {
    for (const auto& p : points)
        if (p.name == name) return &p;
    return nullptr;
}

const NamedGamma* ScenarioCase::find_gamma(const std::string& name) const {
    for (const auto& g : gammas)
        if (g.name == name) return &g;
    return nullptr;
}

const FamilySpec* ScenarioCase::find_family(const std::string& id) const {
    for (const auto& f : families)
        if (f.id == id) return &f;
    return nullptr;
}

GradedIdeal ScenarioCase::resolve_ideal(const std::string& name) const {
    if (const auto* m = find_component(name)) return m->representative;
    if (const auto* p = find_point(name)) return p->ideal;
    if (const auto* b = find_stable(name)) return b->ideal.to_graded_ideal();
    if (const auto* s = find_saturated(name)) return s->ideal.to_graded_ideal();
    throw std::out_of_range("case " + id + ": no ideal named '" + name + "'");
}

std::vector<ScenarioCase> parse_cases(std::string_view text) {
    std::vector<ScenarioCase> out;
    ScenarioCase cs;
    bool in_case = false;
    bool have_ring = false, have_poly = false, have_hf = false, have_gotzmann = false;

    int line = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto nl = text.find('\n', pos);
        if (nl == std::string_view::npos) nl = text.size();
        std::string_view raw = text.substr(pos, nl - pos);
        pos = nl + 1;
        ++line;
        if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
        std::string stripped = trim(raw);
        if (stripped.empty()) continue;

        auto [head, tail] = split_colon(stripped);
        auto words = split_ws(head);
        if (words.empty()) fail_at(line, "expected a keyword");
        const std::string& kw = words[0];

        if (!in_case) {
            if (kw != "case" || words.size() != 2) fail_at(line, "expected 'case <id>'");
            cs = ScenarioCase{};
            cs.id = words[1];
            in_case = true;
            have_ring = have_poly = have_hf = have_gotzmann = false;
            continue;
        }

        if (kw == "ring") {
            if (words.size() < 2) fail_at(line, "ring needs variable names");
            cs.ctx = RingContext(std::vector<std::string>(words.begin() + 1, words.end()));
            have_ring = true;
        } else if (kw == "poly") {
            try {
                cs.polynomial = HilbertPoly::parse(trim(stripped.substr(4)));
            } catch (const std::exception& e) {
                fail_at(line, e.what());
            }
            have_poly = true;
        } else if (kw == "gotzmann") {
            if (words.size() != 2) fail_at(line, "expected 'gotzmann <int>'");
            cs.gotzmann = parse_int(words[1], line);
            have_gotzmann = true;
        } else if (kw == "hf") {
            if (words.size() < 2) fail_at(line, "hf needs at least one value");
            cs.h_ideal.clear();
            for (std::size_t i = 1; i < words.size(); ++i)
                cs.h_ideal.push_back(parse_int(words[i], line));
            have_hf = true;
        } else if (kw == "borel" || kw == "sat") {
            if (!have_ring) fail_at(line, "ring must come before ideals");
            if (words.size() != 6 || words[2] != "reg" || words[4] != "tangent")
                fail_at(line, "expected '" + kw + " <name> reg <r> tangent <t> : <gens>'");
            ensure_fresh(cs, words[1], line);
            NamedStableIdeal entry{words[1],
                                   MonomialIdeal(cs.ctx, parse_monomial_gens(tail, cs.ctx, line)),
                                   parse_int(words[3], line), parse_int(words[5], line)};
            if (!is_strongly_stable(entry.ideal))
                fail_at(line, "'" + entry.name + "' is not strongly stable");
            (kw == "borel" ? cs.stable : cs.saturated).push_back(std::move(entry));
        } else if (kw == "saturation") {
            if (words.size() != 4 || words[2] != "=")
                fail_at(line, "expected 'saturation <ideal> = <saturated>'");
            if (!cs.find_stable(words[1])) fail_at(line, "unknown ideal '" + words[1] + "'");
            if (!cs.find_saturated(words[3])) fail_at(line, "unknown ideal '" + words[3] + "'");
            cs.saturations.push_back({words[1], words[3]});
        } else if (kw == "expand") {
            if (words.size() != 4 || words[2] != "=")
                fail_at(line, "expected 'expand <saturated> = <ideal>'");
            if (!cs.find_saturated(words[1])) fail_at(line, "unknown ideal '" + words[1] + "'");
            if (!cs.find_stable(words[3])) fail_at(line, "unknown ideal '" + words[3] + "'");
            cs.expansions.push_back({words[1], words[3]});
        } else if (kw == "component") {
            if (!have_ring) fail_at(line, "ring must come before ideals");
            if (words.size() != 4 || words[2] != "dim")
                fail_at(line, "expected 'component <name> dim <d> : <gens>'");
            ensure_fresh(cs, words[1], line);
            cs.components.push_back(
                {words[1], parse_int(words[3], line), GradedIdeal(cs.ctx, parse_gens(tail, cs.ctx, line))});
        } else if (kw == "point") {
            if (!have_ring) fail_at(line, "ring must come before ideals");
            if (words.size() != 4 || words[2] != "tangent")
                fail_at(line, "expected 'point <name> tangent <t> : <gens>'");
            ensure_fresh(cs, words[1], line);
            cs.points.push_back(
                {words[1], parse_int(words[3], line), GradedIdeal(cs.ctx, parse_gens(tail, cs.ctx, line))});
        } else if (kw == "gamma") {
            if (!have_ring) fail_at(line, "ring must come before gamma");
            if (words.size() != 2) fail_at(line, "expected 'gamma <name> : <images>'");
            if (cs.find_gamma(words[1])) fail_at(line, "duplicate gamma '" + words[1] + "'");
            cs.gammas.push_back({words[1], parse_gamma_images(tail, cs.ctx, line)});
        } else if (kw == "transform") {
            if (words.size() != 5 || words[2] != "=")
                fail_at(line, "expected 'transform <point> = <gamma> <source>'");
            ensure_known(cs, words[1], line);
            if (!cs.find_gamma(words[3])) fail_at(line, "unknown gamma '" + words[3] + "'");
            ensure_known(cs, words[4], line);
            cs.transforms.push_back({words[1], words[3], words[4]});
        } else if (kw == "initial") {
            if (words.size() != 5 || words[2] != "lex" || words[3] != "=")
                fail_at(line, "expected 'initial <point> lex = <target>'");
            ensure_known(cs, words[1], line);
            if (!cs.find_stable(words[4])) fail_at(line, "unknown ideal '" + words[4] + "'");
            cs.lex_initials.push_back({words[1], words[4]});
        } else if (kw == "gin-eq") {
            if (words.size() != 4 || words[2] != "=")
                fail_at(line, "expected 'gin-eq <point> = <source>'");
            ensure_known(cs, words[1], line);
            ensure_known(cs, words[3], line);
            cs.gin_equalities.push_back({words[1], words[3]});
        } else if (kw == "specialize") {
            if (words.size() != 6 || words[2] != "->" || words[4] != "weight")
                fail_at(line, "expected 'specialize <src> -> <target> weight <spec>'");
            ensure_known(cs, words[1], line);
            if (!cs.find_stable(words[3])) fail_at(line, "unknown ideal '" + words[3] + "'");
            SpecializationClaim claim;
            claim.source = words[1];
            claim.target = words[3];
            if (words[5] == "grevlex") {
                claim.mode = SpecializationClaim::Mode::grevlex;
            } else if (words[5] == "auto") {
                claim.mode = SpecializationClaim::Mode::search;
            } else {
                claim.mode = SpecializationClaim::Mode::weight;
                for (const auto& piece : split_on(words[5], ','))
                    claim.weight.push_back(parse_int(piece, line));
                if (static_cast<int>(claim.weight.size()) != cs.ctx.num_vars())
                    fail_at(line, "weight length != variable count");
            }
            cs.specializations.push_back(std::move(claim));
        } else if (kw == "family") {
            if (words.size() < 3) fail_at(line, "expected 'family <id> orbit|ci ...'");
            if (cs.find_family(words[1])) fail_at(line, "duplicate family '" + words[1] + "'");
            FamilySpec f;
            f.id = words[1];
            if (words[2] == "orbit") {
                if (words.size() != 4) fail_at(line, "expected 'family <id> orbit <source>'");
                ensure_known(cs, words[3], line);
                f.kind = FamilySpec::Kind::orbit;
                f.source = words[3];
            } else if (words[2] == "ci") {
                if (words.size() < 4) fail_at(line, "expected 'family <id> ci <d> ...'");
                f.kind = FamilySpec::Kind::complete_intersection;
                for (std::size_t i = 3; i < words.size(); ++i) {
                    int d = parse_int(words[i], line);
                    if (d < 1) fail_at(line, "complete intersection degrees must be positive");
                    f.degrees.push_back(d);
                }
            } else {
                fail_at(line, "unknown family kind '" + words[2] + "'");
            }
            cs.families.push_back(std::move(f));
        } else if (kw == "end") {
            if (!have_ring || !have_poly || !have_hf || !have_gotzmann)
                fail_at(line, "case '" + cs.id + "' is missing ring/poly/hf/gotzmann");
            if (cs.stable.empty()) fail_at(line, "case '" + cs.id + "' lists no stable ideals");
            for (const auto& other : out)
                if (other.id == cs.id) fail_at(line, "duplicate case id '" + cs.id + "'");
            out.push_back(std::move(cs));
            cs = ScenarioCase{};
            in_case = false;
        } else {
            fail_at(line, "unknown keyword '" + kw + "'");
        }
    }
    if (in_case) fail_at(line, "unterminated case '" + cs.id + "'");
    return out;
}

const std::vector<ScenarioCase>& builtin_cases() {
    static const std::vector<ScenarioCase> cases = parse_cases(detail::embedded_cases_text());
    return cases;
}

const ScenarioCase* find_case(const std::string& id) {
    for (const auto& c : builtin_cases())
        if (c.id == id) return &c;
    return nullptr;
}

int VerificationReport::failures() const {
    int n = 0;
    for (const auto& ch : checks)
        if (!ch.pass) ++n;
    return n;
}

GradedIdeal sample_family_member(const ScenarioCase& c, const std::string& family_id,
                                 std::uint64_t seed) {
    const auto* f = c.find_family(family_id);
    if (!f) throw std::runtime_error("case " + c.id + ": unknown family '" + family_id + "'");
    std::mt19937_64 rng(seed ^ fnv1a(c.id + "/" + family_id));
    const int prefix_end = static_cast<int>(c.h_ideal.size()) - 1;

    for (int attempt = 0; attempt < 32; ++attempt) {
        GradedIdeal candidate = [&] {
            if (f->kind == FamilySpec::Kind::orbit) {
                auto gamma = random_coordinate_change(c.ctx.num_vars(), rng, 9);
                return apply_coordinate_change(c.resolve_ideal(f->source), gamma);
            }
            std::vector<Polynomial> gens;
            for (int d : f->degrees) {
                std::vector<Term> terms;
                for (const auto& m : monomials_of_degree(c.ctx, d, MonomialOrder::grevlex())) {
                    long coeff = static_cast<long>(rng() % 19) - 9;
                    if (coeff != 0) terms.push_back(Term{mpq_class(coeff), m});
                }
                gens.push_back(Polynomial::from_terms(std::move(terms), MonomialOrder::grevlex()));
            }
            return GradedIdeal(c.ctx, std::move(gens));
        }();
        if (candidate.generators.empty()) continue;
        auto hd = hilbert_function(candidate, prefix_end);
        if (hd.h_ideal == c.h_ideal) return candidate;
    }
    throw std::runtime_error("case " + c.id + ": family '" + family_id +
                             "' produced no member with the expected Hilbert function");
}

VerificationReport run_case(const ScenarioCase& c, const RunOptions& opts) {
    VerificationReport rep;
    rep.case_id = c.id;
    auto add = [&](std::string name, std::string expected, std::string computed, bool pass) {
        rep.checks.push_back(
            {std::move(name), std::move(expected), std::move(computed), pass});
    };
    const auto grevlex = MonomialOrder::grevlex();

    // Complete strongly stable list for the Hilbert function.
    {
        std::vector<MonomialIdeal> expected;
        expected.reserve(c.stable.size());
        for (const auto& b : c.stable) expected.push_back(b.ideal);
        auto en = enumerate_borel_with_hf(c.ctx, c.h_ideal);
        bool pass = en.complete && en.ideals == expected;
        std::string computed = ideal_list_str(en.ideals);
        if (!en.complete) computed = "(search capped) " + computed;
        add("borel-enumeration", ideal_list_str(expected), std::move(computed), pass);
    }

    // The first listed ideal is the lex segment.
    {
        auto L = lex_segment(c.ctx, c.h_ideal);
        add("lex-segment-first", to_string(c.stable.front().ideal), to_string(L),
            L == c.stable.front().ideal);
    }

    // Gotzmann number of the Hilbert polynomial.
    {
        int g = gotzmann_bound(c.polynomial);
        add("gotzmann-number", std::to_string(c.gotzmann), std::to_string(g),
            g == c.gotzmann);
    }

    // Complete saturated list within the Gotzmann bound.
    {
        std::vector<MonomialIdeal> expected;
        expected.reserve(c.saturated.size());
        for (const auto& s : c.saturated) expected.push_back(s.ideal);
        auto en = enumerate_saturated_borel_with_hp(c.ctx, c.polynomial, c.gotzmann);
        bool pass = en.complete && en.ideals == expected;
        std::string computed = ideal_list_str(en.ideals);
        if (!en.complete) computed = "(search capped) " + computed;
        add("saturated-ladder", ideal_list_str(expected), std::move(computed), pass);
    }

    // Regularity, tangent dimension and certified Hilbert polynomial of every
    // named monomial ideal.
    std::int64_t lex_tangent = 0;
    auto check_named = [&](const NamedStableIdeal& b, bool is_lex_segment) {
        int r = regularity(b.ideal);
        add("regularity:" + b.name, std::to_string(b.regularity), std::to_string(r),
            r == b.regularity);

        auto tr = tangent_dimension(b.ideal);
        add("tangent:" + b.name, std::to_string(b.tangent), std::to_string(tr.dimension),
            tr.dimension == b.tangent);
        if (is_lex_segment) lex_tangent = tr.dimension;

        int depth = std::min(r + c.ctx.num_vars() + 6, c.ctx.max_total_degree());
        auto hd = hilbert_function(b.ideal, depth);
        std::string computed;
        bool pass = false;
        try {
            const HilbertPoly& p = hilbert_polynomial(hd);
            computed = p.to_string();
            pass = (p == c.polynomial);
        } catch (const std::exception& e) {
            computed = std::string("error: ") + e.what();
        }
        add("hilbert-polynomial:" + b.name, c.polynomial.to_string(), std::move(computed), pass);
    };
    for (std::size_t i = 0; i < c.stable.size(); ++i) check_named(c.stable[i], i == 0);
    for (const auto& s : c.saturated) check_named(s, false);

    // Saturations.
    for (const auto& claim : c.saturations) {
        const auto& ideal = c.find_stable(claim.ideal)->ideal;
        const auto& expected = c.find_saturated(claim.saturated)->ideal;
        auto sat = saturate(ideal);
        add("saturation:" + claim.ideal, to_string(expected), to_string(sat), sat == expected);
    }

    // Unique Hilbert-function-compatible expansions.
    for (const auto& claim : c.expansions) {
        const auto& sat = c.find_saturated(claim.saturated)->ideal;
        const auto& expected = c.find_stable(claim.ideal)->ideal;
        auto expansions = nonsat_expansions(sat, c.h_ideal);
        bool pass = expansions.size() == 1 && expansions.front() == expected;
        add("expansion:" + claim.saturated, "exactly " + to_string(expected),
            std::to_string(expansions.size()) + " found: " + ideal_list_str(expansions), pass);
    }

    // Components: the representative is a nonsingular point of a component of
    // the expected dimension, lies on the stratum, and degenerates to a
    // member of the stable list.
    for (const auto& comp : c.components) {
        auto tr = tangent_dimension(comp.representative);
        add("component:" + comp.name + ":dim", std::to_string(comp.dim),
            std::to_string(tr.dimension), tr.dimension == comp.dim);

        auto hd = hilbert_function(comp.representative,
                                   static_cast<int>(c.h_ideal.size()) - 1);
        add("component:" + comp.name + ":hf", int_list_str(c.h_ideal),
            int_list_str(hd.h_ideal), hd.h_ideal == c.h_ideal);

        auto gr = gin(comp.representative, grevlex, opts.seed, opts.gin_trials);
        bool member = false;
        for (const auto& b : c.stable) member = member || b.ideal == gr.ideal;
        std::string computed = to_string(gr.ideal);
        if (!gr.agreed) computed += " (trials disagreed)";
        add("component:" + comp.name + ":gin", "agreed member of the stable list",
            std::move(computed), gr.agreed && member);
    }

    // Frozen tangent dimensions at auxiliary points.
    for (const auto& p : c.points) {
        auto tr = tangent_dimension(p.ideal);
        add("tangent:" + p.name, std::to_string(p.tangent), std::to_string(tr.dimension),
            tr.dimension == p.tangent);
    }

    // Coordinate-change identities.
    for (const auto& t : c.transforms) {
        const auto* gamma = c.find_gamma(t.gamma);
        auto moved = apply_coordinate_change(c.resolve_ideal(t.source), gamma->change);
        bool pass = ideal_equal(moved, c.resolve_ideal(t.point));
        add("transform:" + t.point, t.gamma + "(" + t.source + ") equals " + t.point,
            pass ? "ideals equal" : "ideals differ", pass);
    }

    // Lex initial ideals.
    for (const auto& li : c.lex_initials) {
        const auto& expected = c.find_stable(li.target)->ideal;
        auto in = initial_ideal(c.resolve_ideal(li.point), MonomialOrder::lex());
        add("initial:" + li.point, to_string(expected), to_string(in), in == expected);
    }

    // Generic initial ideal equalities.
    for (const auto& ge : c.gin_equalities) {
        auto a = gin(c.resolve_ideal(ge.point), grevlex, opts.seed, opts.gin_trials);
        auto b = gin(c.resolve_ideal(ge.source), grevlex, opts.seed, opts.gin_trials);
        bool pass = a.agreed && b.agreed && a.ideal == b.ideal;
        std::string computed = to_string(a.ideal) + " vs " + to_string(b.ideal);
        if (!a.agreed || !b.agreed) computed += " (trials disagreed)";
        add("gin-eq:" + ge.point, "gin(" + ge.point + ") == gin(" + ge.source + ")",
            std::move(computed), pass);
    }

    // Flat degenerations onto stable ideals.
    for (const auto& sp : c.specializations) {
        std::string name = "specialize:" + sp.source + "->" + sp.target;
        auto src = c.resolve_ideal(sp.source);
        const auto& target = c.find_stable(sp.target)->ideal;

        std::optional<WeightVector> w;
        std::string how;
        switch (sp.mode) {
            case SpecializationClaim::Mode::weight:
                w = WeightVector{sp.weight, OrderKind::grevlex};
                how = "w=(" + int_list_str(sp.weight) + ")";
                break;
            case SpecializationClaim::Mode::grevlex:
                w = WeightVector{std::vector<std::int64_t>(c.ctx.num_vars(), 0),
                                 OrderKind::grevlex};
                how = "grevlex";
                break;
            case SpecializationClaim::Mode::search:
                w = find_specialization_weight(src, target, opts.weight_bound);
                how = w ? "searched w=(" + int_list_str(w->entries) + ")"
                        : "no weight found with entries in [0, " +
                              std::to_string(opts.weight_bound) + "]";
                break;
        }
        if (!w) {
            add(std::move(name), "flat degeneration witness", std::move(how), false);
            continue;
        }
        auto chk = verify_specialization(src, target, *w);
        std::string computed = how + ": initial " + (chk.initial_matches ? "ok" : "mismatch") +
                               ", hilbert " + (chk.hilbert_matches ? "ok" : "mismatch") +
                               ", tangent " + std::to_string(chk.tangent_at_ideal) + " -> " +
                               std::to_string(chk.tangent_at_target);
        add(std::move(name), "flat degeneration witness", std::move(computed), chk.ok());
    }

    // Sampled family members stay on the stratum and degenerate into the
    // stable list.
    for (const auto& f : c.families) {
        for (int k = 0; k < opts.family_samples; ++k) {
            std::string name = "family:" + f.id + ":sample:" + std::to_string(k);
            try {
                auto member =
                    sample_family_member(c, f.id, opts.seed + 1000003ULL * static_cast<std::uint64_t>(k));
                auto hd = hilbert_function(member, static_cast<int>(c.h_ideal.size()) - 1);
                bool hf_ok = hd.h_ideal == c.h_ideal;
                auto gr = gin(member, grevlex, opts.seed, opts.gin_trials);
                bool in_list = false;
                for (const auto& b : c.stable) in_list = in_list || b.ideal == gr.ideal;
                std::string computed = std::string("hf ") + (hf_ok ? "ok" : "mismatch") +
                                       ", gin " + to_string(gr.ideal);
                if (!gr.agreed) computed += " (trials disagreed)";
                add(std::move(name), "hf match, gin in the stable list", std::move(computed),
                    hf_ok && gr.agreed && in_list);
            } catch (const std::exception& e) {
                add(std::move(name), "hf match, gin in the stable list",
                    std::string("error: ") + e.what(), false);
            }
        }
    }

    // The lex point is singular: its tangent dimension strictly exceeds the
    // dimension of every component.
    {
        std::int64_t max_dim = 0;
        for (const auto& comp : c.components) max_dim = std::max(max_dim, comp.dim);
        bool pass = !c.components.empty() && lex_tangent > max_dim;
        add("singular-lex", "> " + std::to_string(max_dim), std::to_string(lex_tangent), pass);
    }

    return rep;
}

}  // namespace sghilb
