#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <vector>

#include "sghilb/ring.hpp"

namespace sghilb {

// A monomial in up to kMaxVars variables, stored as an inline exponent array.
// Value type: equality is exponentwise, no allocation, cheap to copy.
class Monomial {
public:
    Monomial() = default;

    explicit Monomial(int num_vars) { set_num_vars(num_vars); }

    Monomial(int num_vars, std::initializer_list<int> exps) {
        set_num_vars(num_vars);
        if (static_cast<int>(exps.size()) != num_vars)
            throw std::invalid_argument("Monomial: exponent count mismatch");
        int i = 0;
        for (int e : exps) set_exponent(i++, e);
    }

    static Monomial one(int num_vars) { return Monomial(num_vars); }

    static Monomial variable(int num_vars, int i, int power = 1) {
        Monomial m(num_vars);
        m.set_exponent(i, power);
        return m;
    }

    static Monomial from_exponents(std::span<const int> exps) {
        Monomial m(static_cast<int>(exps.size()));
        for (std::size_t i = 0; i < exps.size(); ++i)
            m.set_exponent(static_cast<int>(i), exps[i]);
        return m;
    }

    int num_vars() const { return nvars_; }
    int degree() const { return degree_; }
    int exponent(int i) const { return exp_[check_index(i)]; }
    int operator[](int i) const { return exponent(i); }
    bool is_one() const { return degree_ == 0; }

    void set_exponent(int i, int e) {
        check_index(i);
        if (e < 0 || e > 255) throw std::invalid_argument("Monomial: exponent out of range");
        degree_ = static_cast<std::uint16_t>(degree_ - exp_[i] + e);
        exp_[i] = static_cast<std::uint8_t>(e);
    }

    bool divides(const Monomial& m) const {
        check_same(m);
        for (int i = 0; i < nvars_; ++i)
            if (exp_[i] > m.exp_[i]) return false;
        return true;
    }

    bool coprime_with(const Monomial& m) const {
        check_same(m);
        for (int i = 0; i < nvars_; ++i)
            if (exp_[i] > 0 && m.exp_[i] > 0) return false;
        return true;
    }

    Monomial operator*(const Monomial& m) const {
        check_same(m);
        Monomial r(nvars_);
        for (int i = 0; i < nvars_; ++i) {
            int e = exp_[i] + m.exp_[i];
            if (e > 255) throw std::overflow_error("Monomial: exponent overflow");
            r.exp_[i] = static_cast<std::uint8_t>(e);
        }
        r.degree_ = static_cast<std::uint16_t>(degree_ + m.degree_);
        return r;
    }

    // Exact quotient *this / m; requires m.divides(*this).
    Monomial divide_exact(const Monomial& m) const {
        check_same(m);
        Monomial r(nvars_);
        for (int i = 0; i < nvars_; ++i) {
            if (m.exp_[i] > exp_[i])
                throw std::invalid_argument("Monomial::divide_exact: not divisible");
            r.exp_[i] = static_cast<std::uint8_t>(exp_[i] - m.exp_[i]);
        }
        r.degree_ = static_cast<std::uint16_t>(degree_ - m.degree_);
        return r;
    }

    Monomial times_var(int i, int power = 1) const {
        Monomial r = *this;
        r.set_exponent(i, r.exponent(i) + power);
        return r;
    }

    static Monomial lcm(const Monomial& a, const Monomial& b) {
        a.check_same(b);
        Monomial r(a.nvars_);
        int deg = 0;
        for (int i = 0; i < a.nvars_; ++i) {
            r.exp_[i] = std::max(a.exp_[i], b.exp_[i]);
            deg += r.exp_[i];
        }
        r.degree_ = static_cast<std::uint16_t>(deg);
        return r;
    }

    static Monomial gcd(const Monomial& a, const Monomial& b) {
        a.check_same(b);
        Monomial r(a.nvars_);
        int deg = 0;
        for (int i = 0; i < a.nvars_; ++i) {
            r.exp_[i] = std::min(a.exp_[i], b.exp_[i]);
            deg += r.exp_[i];
        }
        r.degree_ = static_cast<std::uint16_t>(deg);
        return r;
    }

    bool operator==(const Monomial& m) const {
        return nvars_ == m.nvars_ && degree_ == m.degree_ && exp_ == m.exp_;
    }
    bool operator!=(const Monomial& m) const { return !(*this == m); }

    std::size_t hash() const {
        std::size_t h = static_cast<std::size_t>(nvars_) * 1315423911u;
        for (int i = 0; i < nvars_; ++i) h = h * 131 + exp_[i];
        return h;
    }

private:
    void set_num_vars(int n) {
        if (n < 1 || n > kMaxVars)
            throw std::invalid_argument("Monomial: bad variable count");
        nvars_ = static_cast<std::uint8_t>(n);
    }
    int check_index(int i) const {
        if (i < 0 || i >= nvars_) throw std::out_of_range("Monomial: variable index");
        return i;
    }
    void check_same(const Monomial& m) const {
        if (nvars_ != m.nvars_)
            throw std::invalid_argument("Monomial: mismatched variable counts");
    }

    std::array<std::uint8_t, kMaxVars> exp_{};
    std::uint8_t nvars_ = 1;
    std::uint16_t degree_ = 0;
};

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

// All monomials of the ring with the given total degree, sorted descending
// under the order supplied by the caller (see order.hpp helpers).
std::vector<Monomial> monomials_of_degree_unsorted(const RingContext& ctx, int degree);

}  // namespace sghilb
