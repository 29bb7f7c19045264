#include "combi/algebra/poly.hpp"

namespace combi::algebra {

namespace {
constexpr std::array<std::string_view, kVarCount> kNames = {"x", "y", "q", "a", "b", "c", "d"};
}

std::string_view var_name(Var v) { return kNames[index(v)]; }

std::optional<Var> parse_var(std::string_view name) {
    for (Var v : kAllVars)
        if (kNames[index(v)] == name) return v;
    return std::nullopt;
}

std::string monomial_text(const Exponents& e) {
    std::string out;
    for (Var v : kAllVars) {
        const int k = e[index(v)];
        if (k == 0) continue;
        if (!out.empty()) out += '*';
        out += var_name(v);
        if (k != 1) {
            out += '^';
            out += std::to_string(k);
        }
    }
    return out;
}

QPoly to_rational(const ZPoly& p) {
    QPoly r;
    for (const auto& [e, c] : p.terms()) r.add_term(e, Rational(c));
    return r;
}

ZPoly to_integer(const QPoly& p) {
    ZPoly r;
    for (const auto& [e, c] : p.terms()) {
        if (c.get_den() != 1)
            throw std::domain_error("to_integer(): non-integral coefficient " + c.get_str());
        r.add_term(e, Integer(c.get_num()));
    }
    return r;
}

ZPoly poly_reverse(const ZPoly& p, int n) {
    if (n < 0) throw std::domain_error("poly_reverse(): negative degree bound");
    if (!p.is_univariate_in(Var::x)) throw std::domain_error("poly_reverse(): not univariate in x");
    ZPoly r;
    for (const auto& [e, c] : p.terms()) {
        const int k = e[index(Var::x)];
        if (k < 0 || k > n)
            throw std::domain_error("poly_reverse(): exponent " + std::to_string(k) + " outside [0, " +
                                    std::to_string(n) + "]");
        Exponents f{};
        f[index(Var::x)] = n - k;
        r.add_term(f, c);
    }
    return r;
}

QPoly divide_exact(const QPoly& p, const QPoly& d) {
    if (d.is_zero()) throw std::domain_error("divide_exact(): division by zero");
    if (p.is_zero()) return {};
    // Long division by leading terms in the graded order. The exact quotient has
    // lowest total degree mindeg(p) - mindeg(d); falling below it means d does
    // not divide p.
    const auto& [lead_e, lead_c] = *d.terms().rbegin();
    // Per-variable degree spans are additive under multiplication, which
    // bounds the quotient's monomials to a finite box.
    const int floor_degree = total_degree(p.terms().begin()->first) - total_degree(d.terms().begin()->first);
    Exponents lo{}, hi{};
    for (Var v : kAllVars) {
        lo[index(v)] = p.min_degree(v) - d.min_degree(v);
        hi[index(v)] = p.degree(v) - d.degree(v);
    }
    QPoly quotient;
    QPoly rest = p;
    while (!rest.is_zero()) {
        const auto& [re, rc] = *rest.terms().rbegin();
        Exponents qe;
        for (std::size_t i = 0; i < kVarCount; ++i) qe[i] = re[i] - lead_e[i];
        bool inside = total_degree(qe) >= floor_degree;
        for (std::size_t i = 0; i < kVarCount; ++i) inside = inside && qe[i] >= lo[i] && qe[i] <= hi[i];
        if (!inside)
            throw std::domain_error("divide_exact(): divisor does not divide dividend");
        const QPoly term = QPoly::monomial(Rational(rc / lead_c), qe);
        quotient += term;
        rest -= term * d;
    }
    return quotient;
}

}  // namespace combi::algebra
