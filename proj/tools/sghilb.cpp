// Command-line front end: Hilbert functions and polynomials, lex segments,
// strongly stable enumeration, Groebner and initial ideals, gin, tangent
// spaces, flat-degeneration witnesses, and the built-in verification cases.
//
// Input ideals are documents of the form
//   ring x y z t
//   order grevlex          (optional)
//   ideal x^2, x*y - x*t
// read from a file argument or stdin ("-").

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "sghilb/borel.hpp"
#include "sghilb/format.hpp"
#include "sghilb/geometry.hpp"
#include "sghilb/groebner.hpp"
#include "sghilb/hilbert.hpp"
#include "sghilb/parse.hpp"
#include "sghilb/scenarios.hpp"

using json = nlohmann::json;
using namespace sghilb;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailed = 1;
constexpr int kExitInputError = 2;

struct Options {
    std::string path = "-";
    std::string order_spec;
    int max_degree = -1;
    std::uint64_t seed = kDefaultGinSeed;
    int trials = 3;
    std::string format = "text";
    std::string target;
    std::string weight_csv;
    int bound = 6;
    std::string case_id;
};

void add_input(CLI::App* sc, Options& o) {
    sc->add_option("file", o.path, "ideal document, '-' for stdin");
}

void add_order(CLI::App* sc, Options& o) {
    sc->add_option("--order", o.order_spec,
                   "monomial order: lex | grevlex | weight:w0,w1,... (tie '/lex' or '/grevlex')");
}

void add_format(CLI::App* sc, Options& o) {
    sc->add_option("--format", o.format, "output format: text | json")
        ->check(CLI::IsMember({"text", "json"}));
}

void add_seed_trials(CLI::App* sc, Options& o) {
    sc->add_option("--seed", o.seed, "random seed for generic coordinate changes");
    sc->add_option("--trials", o.trials, "independent generic trials")->check(CLI::Range(2, 64));
}

std::string read_input(const std::string& path) {
    if (path == "-") {
        return std::string(std::istreambuf_iterator<char>(std::cin),
                           std::istreambuf_iterator<char>());
    }
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

IdealDocument load_document(const Options& o) {
    auto doc = parse_ideal_document(read_input(o.path));
    if (!o.order_spec.empty()) {
        auto ord = parse_order_spec(o.order_spec);
        if (ord.kind() == OrderKind::weight &&
            static_cast<int>(ord.weights().size()) != doc.ring.num_vars())
            throw std::runtime_error("--order weight length != variable count");
        doc.order = ord;
        doc.order_given = true;
        for (auto& g : doc.generators) g = g.resorted(doc.order);
    }
    return doc;
}

MonomialIdeal to_monomial_ideal(const IdealDocument& doc, const char* what) {
    std::vector<Monomial> gens;
    for (const auto& g : doc.generators) {
        if (!g.is_monomial())
            throw std::runtime_error(std::string(what) + " requires a monomial ideal");
        gens.push_back(g.leading_monomial());
    }
    return MonomialIdeal(doc.ring, std::move(gens));
}

MonomialIdeal parse_target(const Options& o, const RingContext& ctx) {
    if (o.target.empty()) throw std::runtime_error("--target is required");
    std::vector<Monomial> gens;
    for (const auto& p : parse_polynomial_list(o.target, ctx)) {
        if (!p.is_monomial() || p.leading_coefficient() != 1)
            throw std::runtime_error("--target must be a comma-separated monomial list");
        gens.push_back(p.leading_monomial());
    }
    return MonomialIdeal(ctx, std::move(gens));
}

std::vector<std::int64_t> parse_weight_csv(const std::string& csv, int num_vars) {
    std::vector<std::int64_t> w;
    std::stringstream ss(csv);
    std::string piece;
    while (std::getline(ss, piece, ',')) w.push_back(std::stoll(piece));
    if (static_cast<int>(w.size()) != num_vars)
        throw std::runtime_error("--weight length != variable count");
    return w;
}

int default_depth(const GradedIdeal& ideal) {
    return std::min(ideal.max_generator_degree() + 2, ideal.ctx.max_total_degree());
}

void emit(const Options& o, const json& j, const std::string& text) {
    if (o.format == "json")
        std::cout << j.dump(2) << "\n";
    else
        std::cout << text;
}

std::vector<std::string> poly_strings(const std::vector<Polynomial>& ps, const RingContext& ctx) {
    std::vector<std::string> out;
    out.reserve(ps.size());
    for (const auto& p : ps) out.push_back(to_string(p, ctx));
    return out;
}

int run_hf(const Options& o) {
    auto doc = load_document(o);
    auto ideal = doc.to_ideal();
    int depth = o.max_degree >= 0 ? o.max_degree : default_depth(ideal);
    auto hd = hilbert_function(ideal, depth);
    std::vector<std::int64_t> hq;
    for (int d = 0; d <= depth; ++d) hq.push_back(hd.h_quotient(d));
    std::ostringstream text;
    text << "d       :";
    for (int d = 0; d <= depth; ++d) text << " " << d;
    text << "\nh_I     :";
    for (auto v : hd.h_ideal) text << " " << v;
    text << "\nh_{S/I} :";
    for (auto v : hq) text << " " << v;
    text << "\n";
    emit(o, json{{"max_degree", depth}, {"h_ideal", hd.h_ideal}, {"h_quotient", hq}},
         text.str());
    return kExitOk;
}

int run_hp(const Options& o) {
    auto doc = load_document(o);
    auto ideal = doc.to_ideal();
    int depth = o.max_degree >= 0
                    ? o.max_degree
                    : std::min(ideal.max_generator_degree() + ideal.ctx.num_vars() + 6,
                               ideal.ctx.max_total_degree());
    auto hd = hilbert_function(ideal, depth);
    const auto& p = hilbert_polynomial(hd);
    int g = gotzmann_bound(p);
    std::ostringstream text;
    text << "p_{S/I}(d) = " << p.to_string() << "\nstable from d = " << hd.stable_from
         << "\ngotzmann number = " << g << "\n";
    emit(o,
         json{{"polynomial", p.to_string()},
              {"stable_from", hd.stable_from},
              {"gotzmann", g}},
         text.str());
    return kExitOk;
}

int run_lex_segment(const Options& o) {
    auto doc = load_document(o);
    auto ideal = doc.to_ideal();
    int depth = o.max_degree >= 0 ? o.max_degree : default_depth(ideal);
    auto hd = hilbert_function(ideal, depth);
    auto lex = lex_segment(doc.ring, hd.h_ideal);
    std::ostringstream text;
    text << to_string(lex) << "\n";
    emit(o, json{{"generators", generator_strings(lex)}}, text.str());
    return kExitOk;
}

int run_regularity(const Options& o) {
    auto doc = load_document(o);
    int r = regularity(doc.to_ideal(), o.seed, o.trials);
    emit(o, json{{"regularity", r}}, std::to_string(r) + "\n");
    return kExitOk;
}

int run_borel_check(const Options& o) {
    auto doc = load_document(o);
    auto ideal = to_monomial_ideal(doc, "borel-check");
    auto witness = strongly_stable_witness(ideal);
    json j{{"strongly_stable", !witness.has_value()}};
    std::ostringstream text;
    if (witness) {
        j["witness"] = to_string(*witness, doc.ring);
        text << "not strongly stable: missing " << to_string(*witness, doc.ring) << "\n";
    } else {
        j["witness"] = nullptr;
        text << "strongly stable\n";
    }
    emit(o, j, text.str());
    return witness ? kExitVerificationFailed : kExitOk;
}

int run_borel_enum(const Options& o) {
    auto doc = load_document(o);
    auto ideal = doc.to_ideal();
    int depth = o.max_degree >= 0 ? o.max_degree : ideal.max_generator_degree();
    auto hd = hilbert_function(ideal, depth);
    auto en = enumerate_borel_with_hf(doc.ring, hd.h_ideal);
    json list = json::array();
    std::ostringstream text;
    for (const auto& I : en.ideals) {
        list.push_back(generator_strings(I));
        text << to_string(I) << "\n";
    }
    text << en.ideals.size() << " ideal(s), degree bound " << en.degree_bound << "\n";
    emit(o,
         json{{"count", en.ideals.size()},
              {"complete", en.complete},
              {"degree_bound", en.degree_bound},
              {"ideals", list}},
         text.str());
    return en.complete ? kExitOk : kExitVerificationFailed;
}

int run_sat(const Options& o) {
    auto doc = load_document(o);
    auto ideal = to_monomial_ideal(doc, "sat");
    auto sat = saturate(ideal);
    emit(o, json{{"generators", generator_strings(sat)}}, to_string(sat) + "\n");
    return kExitOk;
}

int run_gb(const Options& o) {
    auto doc = load_document(o);
    auto gb = groebner_basis(doc.to_ideal(), doc.order);
    std::ostringstream text;
    for (const auto& p : gb.elements) text << to_string(p, doc.ring) << "\n";
    emit(o,
         json{{"order", gb.order.describe()},
              {"elements", poly_strings(gb.elements, doc.ring)}},
         text.str());
    return kExitOk;
}

int run_initial(const Options& o) {
    auto doc = load_document(o);
    auto in = initial_ideal(doc.to_ideal(), doc.order);
    emit(o, json{{"order", doc.order.describe()}, {"generators", generator_strings(in)}},
         to_string(in) + "\n");
    return kExitOk;
}

int run_gin(const Options& o) {
    auto doc = load_document(o);
    auto result = gin(doc.to_ideal(), doc.order, o.seed, o.trials);
    std::ostringstream text;
    text << to_string(result.ideal) << "\n"
         << (result.agreed ? "agreed" : "DISAGREED") << " over " << result.trials
         << " trial(s), seed " << result.seed << "\n";
    emit(o,
         json{{"order", result.order.describe()},
              {"generators", generator_strings(result.ideal)},
              {"trials", result.trials},
              {"seed", result.seed},
              {"agreed", result.agreed}},
         text.str());
    return result.agreed ? kExitOk : kExitVerificationFailed;
}

int run_tangent(const Options& o) {
    auto doc = load_document(o);
    auto tr = tangent_dimension(doc.to_ideal());
    std::ostringstream text;
    text << "dim Hom(I, S/I)_0 = " << tr.dimension << "\nunknowns = " << tr.unknown_count
         << ", constraint rank = " << tr.constraint_rank << "\nsyzygies: "
         << (tr.syzygy_source == SyzygySource::taylor ? "taylor" : "schreyer") << "\n";
    emit(o,
         json{{"dimension", tr.dimension},
              {"unknown_count", tr.unknown_count},
              {"constraint_rank", tr.constraint_rank},
              {"syzygies", tr.syzygy_source == SyzygySource::taylor ? "taylor" : "schreyer"}},
         text.str());
    return kExitOk;
}

int run_find_weight(const Options& o) {
    auto doc = load_document(o);
    auto ideal = doc.to_ideal();
    auto target = parse_target(o, doc.ring);
    auto w = find_specialization_weight(ideal, target, o.bound);
    json j{{"found", w.has_value()}};
    std::ostringstream text;
    if (w) {
        json entries = json::array();
        for (auto e : w->entries) entries.push_back(e);
        j["weight"] = entries;
        text << "w = (";
        for (std::size_t i = 0; i < w->entries.size(); ++i)
            text << (i ? "," : "") << w->entries[i];
        text << ")\n";
    } else {
        j["weight"] = nullptr;
        text << "no weight with entries in [0, " << o.bound << "]\n";
    }
    emit(o, j, text.str());
    return w ? kExitOk : kExitVerificationFailed;
}

int run_specialize(const Options& o) {
    auto doc = load_document(o);
    auto ideal = doc.to_ideal();
    auto target = parse_target(o, doc.ring);
    std::optional<WeightVector> w;
    if (!o.weight_csv.empty())
        w = WeightVector{parse_weight_csv(o.weight_csv, doc.ring.num_vars()), OrderKind::grevlex};
    else
        w = find_specialization_weight(ideal, target, o.bound);
    if (!w) {
        emit(o, json{{"ok", false}, {"weight", nullptr}},
             "no weight with entries in [0, " + std::to_string(o.bound) + "]\n");
        return kExitVerificationFailed;
    }
    auto chk = verify_specialization(ideal, target, *w, o.max_degree);
    json entries = json::array();
    for (auto e : w->entries) entries.push_back(e);
    std::ostringstream text;
    text << "w = (";
    for (std::size_t i = 0; i < w->entries.size(); ++i) text << (i ? "," : "") << w->entries[i];
    text << ")\ninitial ideal matches: " << (chk.initial_matches ? "yes" : "no")
         << "\nhilbert functions agree: " << (chk.hilbert_matches ? "yes" : "no")
         << "\ntangent " << chk.tangent_at_ideal << " -> " << chk.tangent_at_target
         << (chk.tangent_semicontinuous ? " (weakly rising)" : " (DROPS)") << "\n"
         << (chk.ok() ? "flat degeneration verified" : "NOT verified") << "\n";
    emit(o,
         json{{"ok", chk.ok()},
              {"weight", entries},
              {"initial_matches", chk.initial_matches},
              {"hilbert_matches", chk.hilbert_matches},
              {"tangent_semicontinuous", chk.tangent_semicontinuous},
              {"tangent_at_ideal", chk.tangent_at_ideal},
              {"tangent_at_target", chk.tangent_at_target}},
         text.str());
    return chk.ok() ? kExitOk : kExitVerificationFailed;
}

json report_to_json(const VerificationReport& rep, std::int64_t elapsed_ms) {
    json checks = json::array();
    for (const auto& ch : rep.checks)
        checks.push_back(json{{"name", ch.name},
                              {"expected", ch.expected},
                              {"computed", ch.computed},
                              {"pass", ch.pass}});
    return json{{"case", rep.case_id}, {"checks", checks}, {"elapsed_ms", elapsed_ms}};
}

int run_verify(const Options& o) {
    std::vector<const ScenarioCase*> cases;
    if (!o.case_id.empty()) {
        const auto* c = find_case(o.case_id);
        if (!c) throw std::runtime_error("unknown case '" + o.case_id + "'");
        cases.push_back(c);
    } else {
        for (const auto& c : builtin_cases()) cases.push_back(&c);
    }

    RunOptions ropts;
    ropts.seed = o.seed;
    ropts.gin_trials = o.trials;

    json out = json::array();
    std::ostringstream text;
    int failures = 0;
    for (const auto* c : cases) {
        auto t0 = std::chrono::steady_clock::now();
        auto rep = run_case(*c, ropts);
        auto t1 = std::chrono::steady_clock::now();
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
        failures += rep.failures();
        out.push_back(report_to_json(rep, ms));
        text << "case " << rep.case_id << " (" << ms << " ms)\n";
        for (const auto& ch : rep.checks) {
            text << "  " << (ch.pass ? "PASS" : "FAIL") << " " << ch.name << "\n";
            if (!ch.pass)
                text << "       expected: " << ch.expected << "\n       computed: " << ch.computed
                     << "\n";
        }
    }
    text << (failures == 0 ? "all checks passed" : std::to_string(failures) + " check(s) failed")
         << "\n";
    emit(o, o.case_id.empty() ? out : out.front(), text.str());
    return failures == 0 ? kExitOk : kExitVerificationFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"standard-graded Hilbert scheme stratum toolkit"};
    app.require_subcommand(1);
    Options o;

    auto* hf = app.add_subcommand("hf", "Hilbert function of an ideal");
    add_input(hf, o);
    add_order(hf, o);
    add_format(hf, o);
    hf->add_option("--max-degree", o.max_degree, "degree bound");

    auto* hp = app.add_subcommand("hp", "certified Hilbert polynomial and Gotzmann number");
    add_input(hp, o);
    add_order(hp, o);
    add_format(hp, o);
    hp->add_option("--max-degree", o.max_degree, "certification depth");

    auto* lexseg = app.add_subcommand("lex-segment", "lex segment with the same Hilbert function");
    add_input(lexseg, o);
    add_order(lexseg, o);
    add_format(lexseg, o);
    lexseg->add_option("--max-degree", o.max_degree, "degree bound");

    auto* reg = app.add_subcommand("regularity", "Castelnuovo-Mumford regularity (via gin)");
    add_input(reg, o);
    add_order(reg, o);
    add_format(reg, o);
    add_seed_trials(reg, o);

    auto* bcheck = app.add_subcommand("borel-check", "test a monomial ideal for strong stability");
    add_input(bcheck, o);
    add_format(bcheck, o);

    auto* benum = app.add_subcommand("borel-enum",
                                     "all strongly stable ideals with the input's Hilbert function");
    add_input(benum, o);
    add_order(benum, o);
    add_format(benum, o);
    benum->add_option("--max-degree", o.max_degree, "Hilbert function prefix depth");

    auto* sat = app.add_subcommand("sat", "saturation of a monomial ideal");
    add_input(sat, o);
    add_format(sat, o);

    auto* gb = app.add_subcommand("gb", "reduced Groebner basis");
    add_input(gb, o);
    add_order(gb, o);
    add_format(gb, o);

    auto* init = app.add_subcommand("initial", "initial ideal under the given order");
    add_input(init, o);
    add_order(init, o);
    add_format(init, o);

    auto* ging = app.add_subcommand("gin", "generic initial ideal");
    add_input(ging, o);
    add_order(ging, o);
    add_format(ging, o);
    add_seed_trials(ging, o);

    auto* tan = app.add_subcommand("tangent", "dim Hom(I, S/I)_0");
    add_input(tan, o);
    add_order(tan, o);
    add_format(tan, o);

    auto* spec = app.add_subcommand("specialize", "verify a flat degeneration onto --target");
    add_input(spec, o);
    add_order(spec, o);
    add_format(spec, o);
    spec->add_option("--target", o.target, "monomial generators of the special fibre")->required();
    spec->add_option("--weight", o.weight_csv, "weight vector w0,w1,... (searched when absent)");
    spec->add_option("--bound", o.bound, "entry bound for the weight search");
    spec->add_option("--max-degree", o.max_degree, "Hilbert comparison depth");

    auto* findw = app.add_subcommand("find-weight", "search a weight vector with in_w(I) == target");
    add_input(findw, o);
    add_order(findw, o);
    add_format(findw, o);
    findw->add_option("--target", o.target, "monomial generators of the special fibre")->required();
    findw->add_option("--bound", o.bound, "entry bound for the weight search");

    auto* verify = app.add_subcommand("verify-paper", "run the built-in verification cases");
    add_format(verify, o);
    add_seed_trials(verify, o);
    verify->add_option("--case", o.case_id, "run a single case by id");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInputError;
    }

    try {
        if (hf->parsed()) return run_hf(o);
        if (hp->parsed()) return run_hp(o);
        if (lexseg->parsed()) return run_lex_segment(o);
        if (reg->parsed()) return run_regularity(o);
        if (bcheck->parsed()) return run_borel_check(o);
        if (benum->parsed()) return run_borel_enum(o);
        if (sat->parsed()) return run_sat(o);
        if (gb->parsed()) return run_gb(o);
        if (init->parsed()) return run_initial(o);
        if (ging->parsed()) return run_gin(o);
        if (tan->parsed()) return run_tangent(o);
        if (spec->parsed()) return run_specialize(o);
        if (findw->parsed()) return run_find_weight(o);
        if (verify->parsed()) return run_verify(o);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }
    return kExitInputError;
}
