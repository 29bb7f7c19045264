#include "combi/objects/tallies.hpp"

#include "combi/objects/decorated.hpp"
#include "combi/objects/inversion.hpp"
#include "combi/objects/matching.hpp"
#include "combi/objects/permutation.hpp"
#include "combi/objects/stirling.hpp"

namespace combi::objects {

ZPoly Tally::polynomial() const {
    ZPoly p;
    for (const auto& [e, count] : counts_) p.add_term(e, Integer(static_cast<long>(count)));
    return p;
}

namespace {

template <class Generator, class Weight>
ZPoly tally(Generator&& generate, Weight&& weight) {
    Tally t;
    generate([&](const auto& obj) { t.add(weight(obj)); });
    return t.polynomial();
}

Exponents mono(int x, int y = 0, int q = 0) {
    Exponents e{};
    e[algebra::index(Var::x)] = x;
    e[algebra::index(Var::y)] = y;
    e[algebra::index(Var::q)] = q;
    return e;
}

template <class Visit>
void each_cycle_stirling(int n, Visit&& visit) {
    for_each_cycle_stirling(n, [&](const CycleStirling& s) { visit(s, stats(s)); });
}

}  // namespace

ZPoly permutation_des_polynomial(int n) {
    return tally([n](auto f) { for_each_permutation(n, f); }, [](const Permutation& p) { return mono(des_a(p)); });
}

ZPoly permutation_asc_polynomial(int n) {
    return tally([n](auto f) { for_each_permutation(n, f); }, [](const Permutation& p) { return mono(asc(p)); });
}

ZPoly permutation_rlmin_polynomial(int n) {
    return tally([n](auto f) { for_each_permutation(n, f); }, [](const Permutation& p) { return mono(rlmin(p)); });
}

ZPoly derangement_exc_polynomial(int n) {
    Tally t;
    for_each_permutation(n, [&](const Permutation& p) {
        if (is_derangement(p)) t.add(mono(exc(p)));
    });
    return t.polynomial();
}

ZPoly signed_des_polynomial(int n) {
    return tally([n](auto f) { for_each_signed_permutation(n, f); },
                 [](const SignedPermutation& p) { return mono(des_b(p)); });
}

ZPoly signed_rlmin_polynomial(int n) {
    return tally([n](auto f) { for_each_signed_permutation(n, f); }, [](const SignedPermutation& p) {
        const auto mask = rlmin_mask(p);
        int count = 0;
        for (bool b : mask) count += b ? 1 : 0;
        return mono(count);
    });
}

std::vector<ZPoly> signed_des_by_bar(int n) {
    std::vector<Tally> by_k(static_cast<std::size_t>(n) + 1);
    for_each_signed_permutation(n, [&](const SignedPermutation& p) {
        by_k[static_cast<std::size_t>(bar(p))].add(mono(des_b(p)));
    });
    std::vector<ZPoly> out;
    for (const auto& t : by_k) out.push_back(t.polynomial());
    return out;
}

ZPoly matching_el_polynomial(int n) {
    return tally([n](auto f) { for_each_matching(n, f); },
                 [](const PerfectMatching& m) { return mono(stats(m).el); });
}

ZPoly matching_ol_polynomial(int n) {
    return tally([n](auto f) { for_each_matching(n, f); },
                 [](const PerfectMatching& m) { return mono(stats(m).ol); });
}

ZPoly inversion_asc_polynomial(const std::vector<int>& bounds) {
    return tally([&bounds](auto f) { for_each_inversion_sequence(bounds, f); },
                 [](const InversionSequence& e) { return mono(asc(e)); });
}

ZPoly stirling_descent_polynomial(int n) {
    return tally([n](auto f) { for_each_stirling_word(n, f); },
                 [](const StirlingWord& w) { return mono(stats(w).descents); });
}

ZPoly stirling_ap_polynomial(int n) {
    return tally([n](auto f) { for_each_stirling_word(n, f); },
                 [](const StirlingWord& w) { return mono(stats(w).ap); });
}

ZPoly stirling_desi_polynomial(int n) {
    return tally([n](auto f) { for_each_stirling_word(n, f); },
                 [](const StirlingWord& w) { return mono(0, 0, stats(w).desi); });
}

ZPoly cycle_cplat_polynomial(int n) {
    Tally t;
    each_cycle_stirling(n, [&](const CycleStirling&, const CycleStirlingStats& s) { t.add(mono(s.cplat)); });
    return t.polynomial();
}

ZPoly cycle_casc_polynomial(int n) {
    Tally t;
    each_cycle_stirling(n, [&](const CycleStirling&, const CycleStirlingStats& s) { t.add(mono(s.casc + 1)); });
    return t.polynomial();
}

ZPoly cycle_cyc_polynomial(int n) {
    Tally t;
    each_cycle_stirling(n, [&](const CycleStirling&, const CycleStirlingStats& s) { t.add(mono(0, 0, s.cyc)); });
    return t.polynomial();
}

ZPoly cycle_cap_cyc_polynomial(int n) {
    Tally t;
    each_cycle_stirling(n, [&](const CycleStirling&, const CycleStirlingStats& s) { t.add(mono(s.cap, 0, s.cyc)); });
    return t.polynomial();
}

ZPoly cycle_cap_fix_cyc_polynomial(int n) {
    Tally t;
    each_cycle_stirling(n,
                        [&](const CycleStirling&, const CycleStirlingStats& s) { t.add(mono(s.cap, s.fix, s.cyc)); });
    return t.polynomial();
}

ZPoly one_cycle_cap_polynomial(int n) {
    Tally t;
    each_cycle_stirling(n, [&](const CycleStirling&, const CycleStirlingStats& s) {
        if (s.cyc == 1) t.add(mono(s.cap));
    });
    return t.polynomial();
}

ZPoly derangement_cap_cyc_polynomial(int n) {
    Tally t;
    each_cycle_stirling(n, [&](const CycleStirling&, const CycleStirlingStats& s) {
        if (s.fix == 0) t.add(mono(s.cap, 0, s.cyc));
    });
    return t.polynomial();
}

Integer derangement_cap_sign_sum(int n) {
    long long sum = 0;
    each_cycle_stirling(n, [&](const CycleStirling&, const CycleStirlingStats& s) {
        if (s.fix == 0) sum += (s.cap % 2 == 0) ? 1 : -1;
    });
    return Integer(static_cast<long>(sum));
}

std::vector<ZPoly> decorated_asc_by_hat(int n) {
    std::vector<Tally> by_k(static_cast<std::size_t>(n) + 1);
    for_each_decorated(n, [&](const DecoratedPermutation& w) {
        by_k[static_cast<std::size_t>(hat(w))].add(mono(asc(w)));
    });
    std::vector<ZPoly> out;
    for (const auto& t : by_k) out.push_back(t.polynomial());
    return out;
}

std::map<std::vector<int>, long long> decorated_fiber_sizes(int n) {
    std::map<std::vector<int>, long long> sizes;
    for_each_decorated(n, [&](const DecoratedPermutation& w) { ++sizes[underlying(w).word]; });
    return sizes;
}

}  // namespace combi::objects
