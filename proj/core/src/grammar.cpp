#include "combi/grammar.hpp"

#include "combi/errors.hpp"
#include "combi/objects/stirling.hpp"
#include "combi/objects/tallies.hpp"

#include <chrono>
#include <stdexcept>

namespace combi::grammar {

using algebra::Exponents;
using algebra::index;
using algebra::var;

Grammar::Grammar(std::map<Var, ZPoly> rules, std::set<Var> constants)
    : rules_(std::move(rules)), constants_(std::move(constants)) {
    for (const auto& [letter, value] : rules_) {
        if (constants_.count(letter)) throw std::invalid_argument("grammar: a letter cannot also be a constant");
        for (Var v : algebra::kAllVars)
            if (value.uses(v) && !rules_.count(v) && !constants_.count(v))
                throw std::invalid_argument("grammar: rule for " + std::string(algebra::var_name(letter)) +
                                            " uses unknown letter " + std::string(algebra::var_name(v)));
    }
}

ZPoly Grammar::derive(const ZPoly& expr) const {
    ZPoly out;
    for (const auto& [e, c] : expr.terms()) {
        for (Var v : algebra::kAllVars) {
            const int k = e[index(v)];
            if (k == 0 || constants_.count(v)) continue;
            const auto rule = rules_.find(v);
            if (rule == rules_.end())
                throw std::domain_error("derive(): letter " + std::string(algebra::var_name(v)) +
                                        " is not in the grammar");
            Exponents rest = e;
            rest[index(v)] -= 1;
            out += ZPoly::monomial(Integer(c * k), rest) * rule->second;
        }
    }
    return out;
}

ZPoly Grammar::derive(const ZPoly& expr, int n) const {
    if (n < 0) throw std::out_of_range("derive(): negative order");
    ZPoly cur = expr;
    for (int i = 0; i < n; ++i) cur = derive(cur);
    return cur;
}

namespace {

std::map<Var, ZPoly> bcd_rules() {
    return {
        {Var::b, var(Var::b, -1) * var(Var::c, 2) * var(Var::d, 2)},
        {Var::c, var(Var::c) * var(Var::d, 2)},
        {Var::d, var(Var::c, 2) * var(Var::d)},
    };
}

using Clock = std::chrono::steady_clock;

VerifyReport compare(std::string id, int n, const ZPoly& lhs, const ZPoly& rhs, Clock::time_point start) {
    VerifyReport r;
    r.id = std::move(id);
    r.n = n;
    r.status = lhs == rhs ? CheckStatus::pass : CheckStatus::fail;
    if (!r.passed()) {
        r.lhs = lhs.to_string();
        r.rhs = rhs.to_string();
    }
    r.runtime_ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
    return r;
}

}  // namespace

const Grammar& lemma1_grammar() {
    static const Grammar g = [] {
        auto rules = bcd_rules();
        rules.emplace(Var::a, var(Var::q) * var(Var::a) * var(Var::b, 2));
        return Grammar(std::move(rules), {Var::q});
    }();
    return g;
}

const Grammar& lemma2_grammar() {
    static const Grammar g(bcd_rules(), {});
    return g;
}

ZPoly lemma1_enumeration(int n) {
    if (n < 0) throw std::out_of_range("lemma1_enumeration(): negative n");
    if (n > kLemma1MaxN)
        throw CapacityError("lemma1_enumeration(): n = " + std::to_string(n) + " exceeds bound " +
                            std::to_string(kLemma1MaxN));
    objects::Tally t;
    objects::for_each_cycle_stirling(n, [&](const objects::CycleStirling& s) {
        const auto st = objects::stats(s);
        Exponents e{};
        e[index(Var::a)] = 1;
        e[index(Var::q)] = st.cyc;
        e[index(Var::b)] = 2 * st.fix;
        e[index(Var::c)] = 2 * st.cap;
        e[index(Var::d)] = 2 * n - 2 * st.fix - 2 * st.cap;
        t.add(e);
    });
    return t.polynomial();
}

ZPoly lemma2_closed_form(int n, const families::Recurrences& r) {
    const auto eulerian = families::eulerian_triangle(n, r);
    ZPoly sum;
    const auto& row = eulerian.rows.at(static_cast<std::size_t>(n));
    for (std::size_t k = 0; k < row.size(); ++k) {
        const int kk = static_cast<int>(k);
        sum += ZPoly(row[k]) * var(Var::c, 2 * kk + 2) * var(Var::d, 2 * n - 2 * kk);
    }
    return sum * ZPoly(Integer(Integer(1) << static_cast<unsigned>(n)));
}

ZPoly to_xyq(const ZPoly& dna) {
    return dna.shifted(Var::a, -1).rescale(Var::c, Var::x, 2).rescale(Var::b, Var::y, 2).evaluate(Var::d, 1);
}

VerifyReport lemma1_check(int n) {
    const auto start = Clock::now();
    if (n < 1) throw std::out_of_range("lemma1_check(): n must be at least 1");
    const ZPoly rhs = lemma1_enumeration(n);
    return compare("grammar-lemma1", n, lemma1_grammar().derive(var(Var::a), n), rhs, start);
}

VerifyReport lemma2_check(int n, const families::Recurrences& r) {
    const auto start = Clock::now();
    if (n < 1) throw std::out_of_range("lemma2_check(): n must be at least 1");
    if (n > kLemma2MaxN)
        throw CapacityError("lemma2_check(): n = " + std::to_string(n) + " exceeds bound " +
                            std::to_string(kLemma2MaxN));
    return compare("grammar-lemma2", n, lemma2_grammar().derive(var(Var::b, 2), n), lemma2_closed_form(n, r),
                   start);
}

}  // namespace combi::grammar
