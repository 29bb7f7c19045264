#pragma once

// Distribution polynomials obtained by exhaustive enumeration. Each function
// walks one object class and sums a monomial weight per object.

#include "combi/algebra/poly.hpp"

#include <map>
#include <vector>

namespace combi::objects {

using algebra::Exponents;
using algebra::Var;
using algebra::ZPoly;

/// Counts weights keyed by exponent vector, then converts to a polynomial.
class Tally {
public:
    void add(const Exponents& e) { ++counts_[e]; }
    void add(Var v, int power) {
        Exponents e{};
        e[algebra::index(v)] = power;
        add(e);
    }
    ZPoly polynomial() const;

private:
    std::map<Exponents, long long> counts_;
};

ZPoly permutation_des_polynomial(int n);   ///< sum x^des_A over S_n
ZPoly permutation_asc_polynomial(int n);   ///< sum x^asc over S_n
ZPoly permutation_rlmin_polynomial(int n); ///< sum x^rlmin over S_n
ZPoly derangement_exc_polynomial(int n);   ///< sum x^exc over derangements of [n]

ZPoly signed_des_polynomial(int n);        ///< sum x^des_B over B_n
ZPoly signed_rlmin_polynomial(int n);      ///< sum x^rlmin over B_n
/// Entry k: sum x^des_B over signed permutations with bar = k.
std::vector<ZPoly> signed_des_by_bar(int n);

ZPoly matching_el_polynomial(int n);       ///< sum x^el over matchings of [2n]
ZPoly matching_ol_polynomial(int n);       ///< sum x^ol over matchings of [2n]

ZPoly inversion_asc_polynomial(const std::vector<int>& bounds);

ZPoly stirling_descent_polynomial(int n);  ///< sum x^des over Stirling words
ZPoly stirling_ap_polynomial(int n);       ///< sum x^ap over Stirling words
ZPoly stirling_desi_polynomial(int n);     ///< sum q^desi over Stirling words

ZPoly cycle_cplat_polynomial(int n);       ///< sum x^cplat
ZPoly cycle_casc_polynomial(int n);        ///< sum x^(casc + 1)
ZPoly cycle_cyc_polynomial(int n);         ///< sum q^cyc
ZPoly cycle_cap_cyc_polynomial(int n);     ///< sum x^cap q^cyc
ZPoly cycle_cap_fix_cyc_polynomial(int n); ///< sum x^cap y^fix q^cyc
ZPoly one_cycle_cap_polynomial(int n);     ///< sum x^cap over objects with a single cycle
ZPoly derangement_cap_cyc_polynomial(int n); ///< sum x^cap q^cyc over objects with fix = 0
/// sum (-1)^cap over Stirling derangements of order n.
Integer derangement_cap_sign_sum(int n);

/// Entry k: sum x^asc over decorated permutations with hat = k.
std::vector<ZPoly> decorated_asc_by_hat(int n);
/// Number of decorated permutations over each underlying permutation.
std::map<std::vector<int>, long long> decorated_fiber_sizes(int n);

}  // namespace combi::objects
