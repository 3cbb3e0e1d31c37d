#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "n7/rational.hpp"

namespace n7 {

// Monomial exponents packed 4 bits per variable, up to 16 variables.
// Total degree in this project never exceeds the BCH depth (4), so 4 bits
// per exponent is ample.
struct Monomial {
    std::uint64_t key = 0;

    static constexpr int kMaxVars = 16;

    int exponent(int var) const { return int((key >> (4 * var)) & 0xF); }

    Monomial& bump(int var, int by = 1) {
        key += std::uint64_t(by) << (4 * var);
        return *this;
    }

    Monomial operator*(const Monomial& o) const { return Monomial{key + o.key}; }

    int total_degree() const {
        int d = 0;
        for (int v = 0; v < kMaxVars; ++v) d += exponent(v);
        return d;
    }

    auto operator<=>(const Monomial&) const = default;
};

// Sparse multivariate polynomial with exact rational coefficients.
class Polynomial {
  public:
    Polynomial() = default;
    explicit Polynomial(Rat c) {
        if (c != 0) terms_[Monomial{}] = std::move(c);
    }
    static Polynomial variable(int var) {
        Polynomial p;
        p.terms_[Monomial{}.bump(var)] = 1;
        return p;
    }

    const std::map<Monomial, Rat>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    Polynomial& operator+=(const Polynomial& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    Polynomial& operator-=(const Polynomial& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    Polynomial operator-() const {
        Polynomial p;
        for (const auto& [m, c] : terms_) p.terms_[m] = -c;
        return p;
    }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        Polynomial p;
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) p.add_term(ma * mb, ca * cb);
        return p;
    }
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }
    Polynomial& operator*=(const Rat& c) {
        if (c == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& [m, v] : terms_) v *= c;
        return *this;
    }
    friend Polynomial operator*(Polynomial a, const Rat& c) { return a *= c; }
    friend Polynomial operator*(const Rat& c, Polynomial a) { return a *= c; }
    Polynomial& operator/=(const Rat& c) {
        for (auto& [m, v] : terms_) v /= c;
        return *this;
    }

    bool operator==(const Polynomial& o) const { return terms_ == o.terms_; }

    void add_term(const Monomial& m, const Rat& c) {
        if (c == 0) return;
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_.emplace(m, c);
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    // Keeps only terms of total degree <= d.
    Polynomial truncated(int d) const {
        Polynomial p;
        for (const auto& [m, c] : terms_)
            if (m.total_degree() <= d) p.terms_[m] = c;
        return p;
    }

    Rat coefficient(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? Rat(0) : it->second;
    }

    template <typename T>
    T evaluate(const std::vector<T>& values) const {
        T acc = T(0);
        for (const auto& [m, c] : terms_) {
            T t = coeff_cast<T>(c);
            for (int v = 0; v < kMaxVarsUsed(values); ++v)
                for (int e = 0; e < m.exponent(v); ++e) t = t * values[std::size_t(v)];
            acc = acc + t;
        }
        return acc;
    }

    std::string to_string(const std::vector<std::string>& var_names) const;

  private:
    template <typename T>
    static int kMaxVarsUsed(const std::vector<T>& values) {
        return int(values.size());
    }
    template <typename T>
    static T coeff_cast(const Rat& c) {
        if constexpr (std::is_same_v<T, Rat>)
            return c;
        else
            return T(to_double(c));
    }

    std::map<Monomial, Rat> terms_;
};

// Expression parser producing a Polynomial: +, -, *, ^ (nonnegative integer),
// parentheses, rational literals, and the supplied variable names.
Polynomial parse_polynomial(const std::string& text, const std::vector<std::string>& var_names);

}  // namespace n7
