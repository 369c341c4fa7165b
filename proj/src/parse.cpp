#include "sghilb/parse.hpp"

#include <cctype>
#include <charconv>

namespace sghilb {

namespace {

// Cursor over one expression with 1-based line/column bookkeeping.
class Scanner {
public:
    Scanner(std::string_view text, int line, int col_base)
        : text_(text), line_(line), col_base_(col_base) {}

    void skip_space() {
        while (pos_ < text_.size() &&
               (text_[pos_] == ' ' || text_[pos_] == '\t' || text_[pos_] == '\r'))
            ++pos_;
    }
    bool done() {
        skip_space();
        return pos_ >= text_.size();
    }
    char peek() {
        skip_space();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }
    char get() {
        skip_space();
        return text_[pos_++];
    }
    bool accept(char c) {
        if (peek() == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    [[noreturn]] void fail(const std::string& msg) {
        throw ParseError(msg, line_, col_base_ + static_cast<int>(pos_));
    }

    mpz_class integer() {
        skip_space();
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        if (start == pos_) fail("expected an integer");
        return mpz_class(std::string(text_.substr(start, pos_ - start)), 10);
    }

    // Longest variable-name match at the cursor, or -1 without consuming.
    int variable(const RingContext& ctx) {
        skip_space();
        int best = -1;
        std::size_t best_len = 0;
        for (int i = 0; i < ctx.num_vars(); ++i) {
            const std::string& name = ctx.var_name(i);
            if (name.size() > best_len && text_.substr(pos_).starts_with(name)) {
                best = i;
                best_len = name.size();
            }
        }
        if (best >= 0) pos_ += best_len;
        return best;
    }

    bool at_alpha() {
        skip_space();
        return pos_ < text_.size() &&
               (std::isalpha(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_');
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;
    int line_, col_base_;
};

// expression := [+|-] term (('+'|'-') term)*
// term       := factor (('*' | juxtaposition) factor)*
// factor     := base ('^' integer)?
// base       := integer ('/' integer)? | variable | '(' expression ')'
// Juxtaposition makes xy, 4y^3t, 2(x+y) valid products.
struct ExprParser {
    Scanner& s;
    const RingContext& ctx;
    const MonomialOrder& ord;

    Polynomial expression() {
        Polynomial total = Polynomial::zero(ord);
        bool negative = false;
        if (s.accept('-')) negative = true;
        else s.accept('+');
        for (;;) {
            Polynomial t = term();
            total = negative ? total - t : total + t;
            if (s.accept('+')) negative = false;
            else if (s.accept('-')) negative = true;
            else break;
        }
        return total;
    }

    Polynomial term() {
        Polynomial prod = factor();
        for (;;) {
            if (s.accept('*')) prod = prod * factor();
            else if (s.at_alpha() || s.peek() == '(') prod = prod * factor();
            else break;
        }
        return prod;
    }

    Polynomial factor() {
        char c = s.peek();
        if (c == '(') {
            s.get();
            Polynomial inner = expression();
            if (!s.accept(')')) s.fail("expected ')'");
            return power(std::move(inner), exponent());
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            mpz_class num = s.integer();
            mpz_class den = 1;
            if (s.accept('/')) {
                den = s.integer();
                if (den == 0) s.fail("division by zero");
            }
            mpq_class q(num, den);
            q.canonicalize();
            int e = exponent();
            mpq_class p = 1;
            for (int i = 0; i < e; ++i) p *= q;
            return Polynomial::monomial_term(p, Monomial::one(ctx.num_vars()), ord);
        }
        int v = s.variable(ctx);
        if (v < 0) s.fail("expected a coefficient, variable, or '('");
        int e = exponent();
        return Polynomial::monomial_term(1, Monomial::variable(ctx.num_vars(), v, e), ord);
    }

    int exponent() {
        if (!s.accept('^')) return 1;
        mpz_class e = s.integer();
        if (e < 0 || e > 200) s.fail("exponent out of range");
        return static_cast<int>(e.get_si());
    }

    Polynomial power(Polynomial p, int e) {
        Polynomial r = Polynomial::monomial_term(1, Monomial::one(ctx.num_vars()), ord);
        for (int i = 0; i < e; ++i) r = r * p;
        return r;
    }
};

Polynomial parse_expr_at(std::string_view expr, const RingContext& ctx,
                         const MonomialOrder& ord, int line, int col_base) {
    Scanner s(expr, line, col_base);
    if (s.done()) throw ParseError("empty polynomial expression", line, col_base);
    ExprParser parser{s, ctx, ord};
    Polynomial p = parser.expression();
    if (!s.done()) s.fail("unexpected trailing input");
    return p;
}

}  // namespace

Polynomial parse_polynomial(std::string_view expr, const RingContext& ctx,
                            const MonomialOrder& ord) {
    return parse_expr_at(expr, ctx, ord, 1, 1);
}

std::vector<Polynomial> parse_polynomial_list(std::string_view exprs, const RingContext& ctx,
                                              const MonomialOrder& ord) {
    std::vector<Polynomial> out;
    std::size_t start = 0;
    int depth = 0;
    for (std::size_t i = 0; i <= exprs.size(); ++i) {
        if (i < exprs.size() && exprs[i] == '(') ++depth;
        if (i < exprs.size() && exprs[i] == ')') --depth;
        if (i == exprs.size() || (exprs[i] == ',' && depth == 0)) {
            out.push_back(parse_polynomial(exprs.substr(start, i - start), ctx, ord));
            start = i + 1;
        }
    }
    return out;
}

MonomialOrder parse_order_spec(std::string_view spec) {
    if (spec == "lex") return MonomialOrder::lex();
    if (spec == "grevlex") return MonomialOrder::grevlex();
    const std::string_view prefix = "weight:";
    if (spec.substr(0, prefix.size()) == prefix) {
        std::string_view rest = spec.substr(prefix.size());
        OrderKind tie = OrderKind::grevlex;
        if (auto slash = rest.find('/'); slash != std::string_view::npos) {
            std::string_view tie_s = rest.substr(slash + 1);
            if (tie_s == "lex") tie = OrderKind::lex;
            else if (tie_s == "grevlex") tie = OrderKind::grevlex;
            else throw ParseError("unknown tie-break '" + std::string(tie_s) + "'", 1, 1);
            rest = rest.substr(0, slash);
        }
        std::vector<std::int64_t> w;
        std::size_t start = 0;
        while (start <= rest.size()) {
            std::size_t comma = rest.find(',', start);
            std::string_view piece = rest.substr(
                start, comma == std::string_view::npos ? rest.size() - start : comma - start);
            std::int64_t value = 0;
            auto [ptr, ec] = std::from_chars(piece.data(), piece.data() + piece.size(), value);
            if (ec != std::errc() || ptr != piece.data() + piece.size())
                throw ParseError("bad weight entry '" + std::string(piece) + "'", 1, 1);
            w.push_back(value);
            if (comma == std::string_view::npos) break;
            start = comma + 1;
        }
        return MonomialOrder::weight(std::move(w), tie);
    }
    throw ParseError("unknown order '" + std::string(spec) + "'", 1, 1);
}

IdealDocument parse_ideal_document(std::string_view text) {
    std::optional<RingContext> ring;
    std::optional<MonomialOrder> order;
    std::vector<std::pair<std::string, int>> generator_chunks;  // text, line number

    int line_no = 0;
    std::size_t pos = 0;
    bool in_ideal = false;
    while (pos <= text.size()) {
        std::size_t eol = text.find('\n', pos);
        std::string_view line = text.substr(
            pos, eol == std::string_view::npos ? text.size() - pos : eol - pos);
        ++line_no;

        if (auto hash = line.find('#'); hash != std::string_view::npos)
            line = line.substr(0, hash);
        std::size_t first = line.find_first_not_of(" \t\r");
        if (first != std::string_view::npos) {
            std::string_view body = line.substr(first);
            auto starts = [&](std::string_view kw) {
                return body.substr(0, kw.size()) == kw &&
                       (body.size() == kw.size() || body[kw.size()] == ' ' ||
                        body[kw.size()] == '\t');
            };
            if (!in_ideal && starts("ring")) {
                if (ring)
                    throw ParseError("duplicate ring line", line_no, static_cast<int>(first) + 1);
                std::vector<std::string> names;
                std::size_t p = 4;
                while (p < body.size()) {
                    while (p < body.size() && (body[p] == ' ' || body[p] == '\t')) ++p;
                    std::size_t q = p;
                    while (q < body.size() && body[q] != ' ' && body[q] != '\t' && body[q] != '\r')
                        ++q;
                    if (q > p) names.emplace_back(body.substr(p, q - p));
                    p = q;
                }
                if (names.empty())
                    throw ParseError("ring line needs at least one variable", line_no, 1);
                try {
                    ring.emplace(std::move(names));
                } catch (const std::invalid_argument& e) {
                    throw ParseError(e.what(), line_no, 1);
                }
            } else if (!in_ideal && starts("order")) {
                std::size_t p = body.find_first_not_of(" \t", 5);
                if (p == std::string_view::npos)
                    throw ParseError("order line needs a specification", line_no, 1);
                std::size_t q = body.find_last_not_of(" \t\r");
                order = parse_order_spec(body.substr(p, q - p + 1));
            } else if (!in_ideal && starts("ideal")) {
                if (!ring) throw ParseError("ideal line before ring line", line_no, 1);
                in_ideal = true;
                std::size_t p = body.size() > 5 ? 5 : body.size();
                generator_chunks.emplace_back(std::string(body.substr(p)), line_no);
            } else if (in_ideal) {
                generator_chunks.emplace_back(std::string(body), line_no);
            } else {
                throw ParseError("expected 'ring', 'order', or 'ideal'", line_no,
                                 static_cast<int>(first) + 1);
            }
        }
        if (eol == std::string_view::npos) break;
        pos = eol + 1;
    }

    if (!ring) throw ParseError("missing ring line", line_no, 1);
    if (!in_ideal) throw ParseError("missing ideal line", line_no, 1);

    MonomialOrder ord = order.value_or(MonomialOrder::grevlex());
    if (ord.kind() == OrderKind::weight &&
        static_cast<int>(ord.weights().size()) != ring->num_vars())
        throw ParseError("weight vector length differs from variable count", 1, 1);

    // Split the generator text on top-level commas, tracking source lines.
    std::vector<std::pair<std::string, int>> exprs;
    std::string current;
    int current_line = generator_chunks.empty() ? line_no : generator_chunks.front().second;
    int depth = 0;
    for (const auto& [chunk, ln] : generator_chunks) {
        if (current.find_first_not_of(" \t") == std::string::npos) current_line = ln;
        for (char c : chunk) {
            if (c == '(') ++depth;
            if (c == ')') --depth;
            if (c == ',' && depth == 0) {
                exprs.emplace_back(current, current_line);
                current.clear();
                current_line = ln;
            } else {
                current += c;
            }
        }
        current += ' ';
    }
    exprs.emplace_back(current, current_line);

    IdealDocument doc{*ring, ord, order.has_value(), {}};
    for (const auto& [expr, ln] : exprs) {
        if (expr.find_first_not_of(" \t\r") == std::string::npos)
            throw ParseError("empty generator expression", ln, 1);
        Polynomial p;
        try {
            p = parse_expr_at(expr, *ring, ord, ln, 1);
        } catch (const ParseError& e) {
            throw ParseError(std::string(e.what()).substr(std::string(e.what()).find(": ") + 2),
                             ln, e.column());
        }
        if (p.is_zero()) throw ParseError("generator is the zero polynomial", ln, 1);
        if (!p.is_homogeneous()) throw ParseError("generator is not homogeneous", ln, 1);
        doc.generators.push_back(std::move(p));
    }
    return doc;
}

}  // namespace sghilb
