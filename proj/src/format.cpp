#include "sghilb/format.hpp"

namespace sghilb {

std::string to_string(const mpq_class& q) {
    std::string s = q.get_num().get_str();
    if (q.get_den() != 1) s += "/" + q.get_den().get_str();
    return s;
}

std::string to_string(const Monomial& m, const RingContext& ctx) {
    if (m.is_one()) return "1";
    std::string s;
    for (int i = 0; i < m.num_vars(); ++i) {
        if (m[i] == 0) continue;
        if (!s.empty()) s += '*';
        s += ctx.var_name(i);
        if (m[i] > 1) s += "^" + std::to_string(m[i]);
    }
    return s;
}

namespace {

std::string render_terms(const Polynomial& p, const RingContext& ctx) {
    if (p.is_zero()) return "0";
    std::string s;
    for (std::size_t i = 0; i < p.terms().size(); ++i) {
        const Term& t = p.terms()[i];
        mpq_class c = t.coeff;
        if (i == 0) {
            if (c < 0) {
                s += "-";
                c = -c;
            }
        } else {
            s += c < 0 ? " - " : " + ";
            if (c < 0) c = -c;
        }
        if (t.mono.is_one()) {
            s += to_string(c);
        } else {
            if (c != 1) s += to_string(c) + "*";
            s += to_string(t.mono, ctx);
        }
    }
    return s;
}

}  // namespace

std::string to_string(const Polynomial& p, const RingContext& ctx) {
    Polynomial canon = p.resorted(MonomialOrder::grevlex());
    canon.make_primitive();
    return render_terms(canon, ctx);
}

std::string to_string_exact(const Polynomial& p, const RingContext& ctx) {
    return render_terms(p, ctx);
}

std::vector<std::string> generator_strings(const MonomialIdeal& ideal) {
    std::vector<std::string> out;
    out.reserve(ideal.min_gens().size());
    for (const auto& g : ideal.min_gens()) out.push_back(to_string(g, ideal.ctx()));
    return out;
}

std::vector<std::string> generator_strings(const GradedIdeal& ideal) {
    std::vector<std::string> out;
    out.reserve(ideal.generators.size());
    for (const auto& g : ideal.generators) out.push_back(to_string(g, ideal.ctx));
    return out;
}

std::string to_string(const MonomialIdeal& ideal) {
    std::string s;
    for (const auto& g : generator_strings(ideal)) {
        if (!s.empty()) s += ", ";
        s += g;
    }
    return s.empty() ? "(0)" : s;
}

}  // namespace sghilb
