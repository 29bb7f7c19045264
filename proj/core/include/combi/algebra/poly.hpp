#pragma once

// Sparse multivariate Laurent polynomials with exact coefficients.
//
// The variable set is fixed and small: x, y, q (family variables) and
// a, b, c, d (grammar letters). Exponent vectors are dense over this set and
// may be negative. Terms are stored in canonical form, with no zero
// coefficients, ordered by graded order: total degree ascending, ties broken
// by descending lexicographic comparison of the exponent vectors.

#include "combi/algebra/number.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <type_traits>
#include <vector>

namespace combi::algebra {

enum class Var : std::uint8_t { x, y, q, a, b, c, d };

inline constexpr std::size_t kVarCount = 7;
inline constexpr std::array<Var, kVarCount> kAllVars = {Var::x, Var::y, Var::q, Var::a,
                                                        Var::b, Var::c, Var::d};

std::string_view var_name(Var v);
std::optional<Var> parse_var(std::string_view name);

using Exponents = std::array<int, kVarCount>;

inline constexpr std::size_t index(Var v) { return static_cast<std::size_t>(v); }

inline int total_degree(const Exponents& e) {
    int s = 0;
    for (int v : e) s += v;
    return s;
}

struct GradedOrder {
    bool operator()(const Exponents& lhs, const Exponents& rhs) const {
        const int dl = total_degree(lhs);
        const int dr = total_degree(rhs);
        if (dl != dr) return dl < dr;
        return rhs < lhs;
    }
};

/// Renders one monomial, e.g. "x*y^2*b^-1"; empty string for the unit monomial.
std::string monomial_text(const Exponents& e);

template <class Coeff>
class Polynomial {
public:
    using coeff_type = Coeff;
    using TermMap = std::map<Exponents, Coeff, GradedOrder>;

    Polynomial() = default;
    Polynomial(long constant) { add_term(Exponents{}, Coeff(constant)); }
    Polynomial(const Coeff& constant) { add_term(Exponents{}, constant); }

    static Polynomial variable(Var v, int power = 1) {
        Exponents e{};
        e[index(v)] = power;
        return monomial(Coeff(1), e);
    }

    static Polynomial monomial(const Coeff& c, const Exponents& e) {
        Polynomial p;
        p.add_term(e, c);
        return p;
    }

    /// Builds sum_k coeffs[k] * v^k.
    static Polynomial from_dense(Var v, std::span<const Coeff> coeffs) {
        Polynomial p;
        for (std::size_t k = 0; k < coeffs.size(); ++k) {
            Exponents e{};
            e[index(v)] = static_cast<int>(k);
            p.add_term(e, coeffs[k]);
        }
        return p;
    }

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    Coeff coefficient(const Exponents& e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? Coeff(0) : it->second;
    }

    Coeff constant_term() const { return coefficient(Exponents{}); }

    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Exponents{});
    }

    void add_term(const Exponents& e, const Coeff& c) {
        if (c == 0) return;
        auto [it, inserted] = terms_.try_emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    Polynomial& operator+=(const Polynomial& rhs) {
        for (const auto& [e, c] : rhs.terms_) add_term(e, c);
        return *this;
    }

    Polynomial& operator-=(const Polynomial& rhs) {
        for (const auto& [e, c] : rhs.terms_) add_term(e, Coeff(-c));
        return *this;
    }

    Polynomial& operator*=(const Polynomial& rhs) {
        *this = *this * rhs;
        return *this;
    }

    friend Polynomial operator+(Polynomial lhs, const Polynomial& rhs) { return lhs += rhs; }
    friend Polynomial operator-(Polynomial lhs, const Polynomial& rhs) { return lhs -= rhs; }

    friend Polynomial operator-(const Polynomial& p) {
        Polynomial r;
        for (const auto& [e, c] : p.terms_) r.terms_.emplace_hint(r.terms_.end(), e, Coeff(-c));
        return r;
    }

    friend Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs) {
        Polynomial r;
        for (const auto& [el, cl] : lhs.terms_) {
            for (const auto& [er, cr] : rhs.terms_) {
                Exponents e;
                for (std::size_t i = 0; i < kVarCount; ++i) e[i] = el[i] + er[i];
                r.add_term(e, Coeff(cl * cr));
            }
        }
        return r;
    }

    friend bool operator==(const Polynomial& lhs, const Polynomial& rhs) {
        return lhs.terms_ == rhs.terms_;
    }

    Polynomial scaled(const Coeff& factor) const {
        if (factor == 0) return {};
        Polynomial r;
        for (const auto& [e, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), e, Coeff(c * factor));
        return r;
    }

    /// Multiplies by the Laurent monomial v^power.
    Polynomial shifted(Var v, int power) const {
        Polynomial r;
        for (const auto& [e, c] : terms_) {
            Exponents f = e;
            f[index(v)] += power;
            r.terms_.emplace(f, c);
        }
        return r;
    }

    Polynomial derivative(Var v) const {
        Polynomial r;
        const auto i = index(v);
        for (const auto& [e, c] : terms_) {
            if (e[i] == 0) continue;
            Exponents f = e;
            f[i] -= 1;
            r.add_term(f, Coeff(c * e[i]));
        }
        return r;
    }

    bool uses(Var v) const {
        for (const auto& [e, c] : terms_)
            if (e[index(v)] != 0) return true;
        return false;
    }

    bool has_negative_exponents() const {
        for (const auto& [e, c] : terms_)
            for (int k : e)
                if (k < 0) return true;
        return false;
    }

    /// True when no variable other than v occurs.
    bool is_univariate_in(Var v) const {
        for (const auto& [e, c] : terms_)
            for (std::size_t i = 0; i < kVarCount; ++i)
                if (i != index(v) && e[i] != 0) return false;
        return true;
    }

    int degree(Var v) const {
        if (terms_.empty()) throw std::domain_error("degree of the zero polynomial");
        int d = terms_.begin()->first[index(v)];
        for (const auto& [e, c] : terms_) d = std::max(d, e[index(v)]);
        return d;
    }

    int min_degree(Var v) const {
        if (terms_.empty()) throw std::domain_error("degree of the zero polynomial");
        int d = terms_.begin()->first[index(v)];
        for (const auto& [e, c] : terms_) d = std::min(d, e[index(v)]);
        return d;
    }

    /// Coefficient of v^power, as a polynomial in the remaining variables.
    Polynomial coefficient_of(Var v, int power) const {
        Polynomial r;
        for (const auto& [e, c] : terms_) {
            if (e[index(v)] != power) continue;
            Exponents f = e;
            f[index(v)] = 0;
            r.terms_.emplace(f, c);
        }
        return r;
    }

    /// Dense coefficient vector in v; requires a univariate polynomial with
    /// nonnegative exponents.
    std::vector<Coeff> dense(Var v) const {
        if (!is_univariate_in(v)) throw std::domain_error("dense(): polynomial is not univariate");
        if (terms_.empty()) return {};
        if (min_degree(v) < 0) throw std::domain_error("dense(): negative exponent");
        std::vector<Coeff> out(static_cast<std::size_t>(degree(v)) + 1, Coeff(0));
        for (const auto& [e, c] : terms_) out[static_cast<std::size_t>(e[index(v)])] = c;
        return out;
    }

    /// Evaluates v at a scalar; negative powers need an invertible value.
    Polynomial evaluate(Var v, const Coeff& value) const {
        Polynomial r;
        const auto i = index(v);
        for (const auto& [e, c] : terms_) {
            Exponents f = e;
            f[i] = 0;
            r.add_term(f, Coeff(c * scalar_power(value, e[i])));
        }
        return r;
    }

    /// Replaces v by an arbitrary polynomial; exponents of v must be nonnegative.
    Polynomial substitute(Var v, const Polynomial& value) const {
        const auto i = index(v);
        std::vector<Polynomial> powers{Polynomial(1L)};
        Polynomial r;
        for (const auto& [e, c] : terms_) {
            if (e[i] < 0) throw std::domain_error("substitute(): negative exponent");
            while (static_cast<int>(powers.size()) <= e[i]) powers.push_back(powers.back() * value);
            Exponents f = e;
            f[i] = 0;
            r += powers[static_cast<std::size_t>(e[i])] * monomial(c, f);
        }
        return r;
    }

    /// Moves exponents of `from` onto `to`, dividing them by `divisor`
    /// (realizes substitutions such as c^2 := x). Every exponent of `from`
    /// must be divisible by `divisor`.
    Polynomial rescale(Var from, Var to, int divisor) const {
        if (divisor == 0) throw std::invalid_argument("rescale(): zero divisor");
        Polynomial r;
        for (const auto& [e, c] : terms_) {
            const int k = e[index(from)];
            if (k % divisor != 0)
                throw std::domain_error("rescale(): exponent not divisible by " + std::to_string(divisor));
            Exponents f = e;
            f[index(from)] = 0;
            f[index(to)] += k / divisor;
            r.add_term(f, c);
        }
        return r;
    }

    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::string out;
        bool first = true;
        for (const auto& [e, c] : terms_) {
            const bool negative = c < 0;
            Coeff magnitude = negative ? Coeff(-c) : c;
            const std::string mono = monomial_text(e);
            std::string body;
            if (mono.empty()) {
                body = magnitude.get_str();
            } else if (magnitude == 1) {
                body = mono;
            } else {
                body = magnitude.get_str() + "*" + mono;
            }
            if (first) {
                out += negative ? "-" + body : body;
                first = false;
            } else {
                out += negative ? " - " : " + ";
                out += body;
            }
        }
        return out;
    }

private:
    static Coeff scalar_power(const Coeff& value, int k) {
        if (k == 0) return Coeff(1);
        if (k > 0) {
            Coeff r = 1;
            for (int j = 0; j < k; ++j) r *= value;
            return r;
        }
        if (value == 0) throw std::domain_error("evaluate(): zero raised to a negative power");
        if constexpr (std::is_same_v<Coeff, Integer>) {
            if (value != 1 && value != -1)
                throw std::domain_error("evaluate(): negative power of a non-unit integer");
            return (k % 2 == 0) ? Coeff(1) : value;
        } else {
            Coeff r = 1;
            for (int j = 0; j < -k; ++j) r /= value;
            return r;
        }
    }

    TermMap terms_;
};

using ZPoly = Polynomial<Integer>;
using QPoly = Polynomial<Rational>;

template <class Coeff>
std::ostream& operator<<(std::ostream& os, const Polynomial<Coeff>& p) {
    return os << p.to_string();
}

template <class Coeff>
Polynomial<Coeff> pow(Polynomial<Coeff> base, unsigned exponent) {
    Polynomial<Coeff> r(1L);
    while (exponent) {
        if (exponent & 1U) r *= base;
        exponent >>= 1U;
        if (exponent) base *= base;
    }
    return r;
}

inline ZPoly var(Var v, int power = 1) { return ZPoly::variable(v, power); }

QPoly to_rational(const ZPoly& p);

/// Throws std::domain_error if some coefficient is not an integer.
ZPoly to_integer(const QPoly& p);

/// x^n * p(1/x) for p univariate in x with support in [0, n].
ZPoly poly_reverse(const ZPoly& p, int n);

/// Exact quotient p / d in the Laurent ring; throws std::domain_error when d
/// does not divide p.
QPoly divide_exact(const QPoly& p, const QPoly& d);

}  // namespace combi::algebra
