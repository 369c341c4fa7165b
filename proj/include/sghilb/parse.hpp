#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "sghilb/ideal.hpp"
#include "sghilb/order.hpp"
#include "sghilb/polynomial.hpp"
#include "sghilb/ring.hpp"

namespace sghilb {

// Parse failure with 1-based source position.
class ParseError : public std::runtime_error {
public:
    ParseError(std::string message, int line, int col)
        : std::runtime_error("parse error at " + std::to_string(line) + ":" +
                             std::to_string(col) + ": " + message),
          line_(line), col_(col) {}
    int line() const { return line_; }
    int column() const { return col_; }

private:
    int line_, col_;
};

// A parsed ideal document:
//   ring x y z t
//   order grevlex            (optional: lex | grevlex | weight:w0,w1,...)
//   ideal x^2, x*y - x*t, ...
// Generator expressions admit integer/rational coefficients, ^, *, +, -,
// parentheses, and juxtaposition (xy means x*y, 4y^3t means 4*y^3*t).
struct IdealDocument {
    RingContext ring;
    MonomialOrder order;
    bool order_given = false;
    std::vector<Polynomial> generators;  // nonzero, homogeneous, sorted under `order`

    GradedIdeal to_ideal() const { return GradedIdeal(ring, generators); }
};

IdealDocument parse_ideal_document(std::string_view text);

// A single polynomial expression over a known ring (used by tests, the
// dataset loader, and CLI flag values). Throws ParseError with column info.
Polynomial parse_polynomial(std::string_view expr, const RingContext& ctx,
                            const MonomialOrder& ord = MonomialOrder::grevlex());

// Comma-separated generator list.
std::vector<Polynomial> parse_polynomial_list(std::string_view exprs, const RingContext& ctx,
                                              const MonomialOrder& ord = MonomialOrder::grevlex());

// "lex" | "grevlex" | "weight:5,1,1,1" (optional "/lex" or "/grevlex" tie suffix).
MonomialOrder parse_order_spec(std::string_view spec);

}  // namespace sghilb
