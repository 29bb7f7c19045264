#pragma once

#include "combi/algebra/poly.hpp"
#include "combi/families.hpp"
#include "combi/report.hpp"

#include <map>
#include <set>

namespace combi::grammar {

using algebra::Var;
using algebra::ZPoly;

/// A context-free grammar in the sense of formal derivatives: each letter is
/// rewritten to a Laurent polynomial and constants have derivative zero.
class Grammar {
public:
    Grammar(std::map<Var, ZPoly> rules, std::set<Var> constants);

    const std::map<Var, ZPoly>& rules() const { return rules_; }
    const std::set<Var>& constants() const { return constants_; }

    /// One application of the derivation D.
    ZPoly derive(const ZPoly& expr) const;
    /// D^n(expr).
    ZPoly derive(const ZPoly& expr, int n) const;

private:
    std::map<Var, ZPoly> rules_;
    std::set<Var> constants_;
};

/// {a -> q a b^2, b -> b^-1 c^2 d^2, c -> c d^2, d -> c^2 d} with q constant.
const Grammar& lemma1_grammar();
/// The same rules restricted to {b, c, d}.
const Grammar& lemma2_grammar();

inline constexpr int kLemma1MaxN = 8;
inline constexpr int kLemma2MaxN = 10;

/// a * sum over cycle-form Stirling permutations of q^cyc b^(2 fix) c^(2 cap) d^(2n - 2 fix - 2 cap).
ZPoly lemma1_enumeration(int n);
/// 2^n sum_k <n,k> c^(2k+2) d^(2n-2k).
ZPoly lemma2_closed_form(int n, const families::Recurrences& r = {});

/// Divides by a and substitutes c^2 = x, b^2 = y, d = 1.
ZPoly to_xyq(const ZPoly& dna);

/// Compares D^n(a) with the enumeration; throws CapacityError beyond kLemma1MaxN.
VerifyReport lemma1_check(int n);
/// Compares D^n(b^2) with the Eulerian form; throws CapacityError beyond kLemma2MaxN.
VerifyReport lemma2_check(int n, const families::Recurrences& r = {});

}  // namespace combi::grammar
