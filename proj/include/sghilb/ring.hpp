#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace sghilb {

// Hard upper bound on the number of variables; keeps monomials inline and POD.
inline constexpr int kMaxVars = 12;

// A standard-graded polynomial ring K[x_0..x_n] over the rationals.
// Variables are ordered x_0 > x_1 > ... > x_n in every monomial order.
class RingContext {
public:
    explicit RingContext(std::vector<std::string> variable_names)
        : vars_(std::move(variable_names)) {
        if (vars_.empty() || static_cast<int>(vars_.size()) > kMaxVars)
            throw std::invalid_argument("RingContext: need between 1 and 12 variables");
        for (const auto& v : vars_)
            if (v.empty()) throw std::invalid_argument("RingContext: empty variable name");
        for (std::size_t i = 0; i < vars_.size(); ++i)
            for (std::size_t j = i + 1; j < vars_.size(); ++j)
                if (vars_[i] == vars_[j])
                    throw std::invalid_argument("RingContext: duplicate variable name " + vars_[i]);
    }

    // num_vars variables named x,y,z,t when num_vars <= 4, else x0..xn.
    static RingContext standard(int num_vars) {
        if (num_vars < 1 || num_vars > kMaxVars)
            throw std::invalid_argument("RingContext::standard: bad variable count");
        static const char* kShort[] = {"x", "y", "z", "t"};
        std::vector<std::string> names;
        names.reserve(num_vars);
        for (int i = 0; i < num_vars; ++i)
            names.push_back(num_vars <= 4 ? std::string(kShort[i])
                                          : "x" + std::to_string(i));
        return RingContext(std::move(names));
    }

    int num_vars() const { return static_cast<int>(vars_.size()); }
    const std::string& var_name(int i) const { return vars_.at(i); }
    const std::vector<std::string>& var_names() const { return vars_; }

    // Index of a variable name, or -1 when unknown.
    int var_index(std::string_view name) const {
        for (std::size_t i = 0; i < vars_.size(); ++i)
            if (vars_[i] == name) return static_cast<int>(i);
        return -1;
    }

    // Total-degree cap for degree-indexed operations (enumeration, division bounds).
    int max_total_degree() const { return max_total_degree_; }
    void set_max_total_degree(int d) {
        if (d < 1 || d > 250) throw std::invalid_argument("RingContext: bad degree cap");
        max_total_degree_ = d;
    }

    bool operator==(const RingContext& o) const { return vars_ == o.vars_; }
    bool operator!=(const RingContext& o) const { return !(*this == o); }

private:
    std::vector<std::string> vars_;
    int max_total_degree_ = 16;
};

}  // namespace sghilb
