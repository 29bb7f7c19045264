#include "combi/verify.hpp"

#include "combi/algebra/sturm.hpp"
#include "combi/bijections.hpp"
#include "combi/errors.hpp"
#include "combi/grammar.hpp"
#include "combi/objects/inversion.hpp"
#include "combi/objects/matching.hpp"
#include "combi/objects/tallies.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <span>
#include <stdexcept>

namespace combi {

std::string_view status_name(CheckStatus s) {
    switch (s) {
        case CheckStatus::pass: return "pass";
        case CheckStatus::fail: return "fail";
        case CheckStatus::skipped_capacity: return "skipped-capacity";
    }
    return "unknown";
}

}  // namespace combi

namespace combi::verify {

namespace {

using algebra::Var;
using algebra::ZPoly;
using algebra::var;
using families::Recurrences;

// Collects the comparisons of one check; the first mismatch is kept.
class Comparison {
public:
    void expect(std::string_view what, const ZPoly& lhs, const ZPoly& rhs) {
        if (!failed_ && !(lhs == rhs)) record(what, lhs.to_string(), rhs.to_string());
    }
    void expect(std::string_view what, const Integer& lhs, const Integer& rhs) {
        if (!failed_ && lhs != rhs) record(what, lhs.get_str(), rhs.get_str());
    }
    void expect_text(std::string_view what, const std::string& lhs, const std::string& rhs) {
        if (!failed_ && lhs != rhs) record(what, lhs, rhs);
    }

    bool failed() const { return failed_; }
    const std::string& lhs() const { return lhs_; }
    const std::string& rhs() const { return rhs_; }
    const std::string& detail() const { return detail_; }

private:
    void record(std::string_view what, std::string lhs, std::string rhs) {
        failed_ = true;
        detail_ = std::string(what);
        lhs_ = std::move(lhs);
        rhs_ = std::move(rhs);
    }

    bool failed_ = false;
    std::string lhs_, rhs_, detail_;
};

using CheckFn = std::function<void(Comparison&, int, const Recurrences&)>;

struct Entry {
    IdentityCheck info;
    CheckFn run;
};

ZPoly binom(int n, int k) {
    return ZPoly(binomial(static_cast<unsigned>(n), static_cast<unsigned>(k)));
}

ZPoly pow2(int n) { return ZPoly(Integer(Integer(1) << static_cast<unsigned>(n))); }

ZPoly egf(std::string_view id, int n) {
    return algebra::to_integer(algebra::egf_coefficient(families::series_family(id, n), n));
}

// Sum_k C(n,k) f(k) g(n-k).
template <class F, class G>
ZPoly binomial_convolution(int n, F&& f, G&& g) {
    ZPoly sum;
    for (int k = 0; k <= n; ++k) sum += binom(n, k) * f(k) * g(n - k);
    return sum;
}

// The coefficient of z^n in A(x, z): 1 for n = 0, x A_n(x) otherwise.
ZPoly a_series_coefficient(int n, const Recurrences& r) {
    return n == 0 ? ZPoly(1L) : var(Var::x) * families::eulerian_a(n, r);
}

std::string encode_report(const bijections::BijectionReport& r) {
    return std::string("injective=") + (r.injective ? "yes" : "no") +
           " image_complete=" + (r.image_complete ? "yes" : "no") +
           " weight_preserving=" + (r.weight_preserving ? "yes" : "no") +
           (r.counterexample ? " first failure " + r.counterexample->first + " -> " + r.counterexample->second : "");
}

struct BaseImage {
    const char* object;
    const char* image;
};

constexpr BaseImage kPhiBase[] = {
    {"1", "[] [(1,2)] {}"},
    {"1h", "[(1,2)] [] {1}"},
    {"1 2", "[] [(1,2)(3,4)] {}"},
    {"2 1", "[] [(1,3)(2,4)] {}"},
    {"2c 1", "[] [(1,4)(2,3)] {}"},
    {"1h 2", "[(1,2)] [(1,2)] {1}"},
    {"1 2h", "[(1,2)] [(1,2)] {2}"},
    {"1h 2h", "[(1,2)(3,4)] [] {1,2}"},
    {"2h 1h", "[(1,3)(2,4)] [] {1,2}"},
    {"2hc 1h", "[(1,4)(2,3)] [] {1,2}"},
};

constexpr BaseImage kPsiBase[] = {
    {"1", "[] [(1,2)] {}"},
    {"-1", "[(1,2)] [] {1}"},
    {"1 2", "[] [(1,2)(3,4)] {}"},
    {"2 1", "[] [(1,3)(2,4)] {}"},
    {"-2 1", "[] [(1,4)(2,3)] {}"},
    {"-1 2", "[(1,2)] [(1,2)] {1}"},
    {"1 -2", "[(1,2)] [(1,2)] {2}"},
    {"-1 -2", "[(1,2)(3,4)] [] {1,2}"},
    {"2 -1", "[(1,3)(2,4)] [] {1,2}"},
    {"-2 -1", "[(1,4)(2,3)] [] {1,2}"},
};

void check_bijection(Comparison& c, int n, const Recurrences& r, bijections::MapId map) {
    const auto report = bijections::verify_bijection(map, n);
    c.expect_text("exhaustive certificate", encode_report(report), encode_report(bijections::BijectionReport{}));
    const bool phi = map == bijections::MapId::phi;
    for (int k = 0; k <= n; ++k) {
        const ZPoly second = phi ? families::n_poly(n - k, r) : families::m_poly(n - k, r);
        c.expect("weight of the k = " + std::to_string(k) + " part", report.weight_by_k.at(static_cast<std::size_t>(k)),
                 binom(n, k) * families::n_poly(k, r) * second);
    }
    for (const auto& base : phi ? std::span<const BaseImage>(kPhiBase) : std::span<const BaseImage>(kPsiBase)) {
        const std::string object = base.object;
        const int size = static_cast<int>(std::count(object.begin(), object.end(), ' ')) + 1;
        if (size != n) continue;
        const auto image = phi ? bijections::phi_map(objects::parse_decorated(object))
                               : bijections::psi_map(objects::parse_signed_permutation(object));
        c.expect_text("image of " + object, bijections::encode(image), base.image);
    }
}

std::vector<Entry> build_registry() {
    using namespace families;
    std::vector<Entry> e;
    auto add = [&](std::string id, std::string description, std::string statement, std::vector<std::string> routes,
                   int min_n, int max_n, int capacity, CheckFn fn) {
        e.push_back({IdentityCheck{std::move(id), std::move(description), std::move(statement), std::move(routes),
                                   min_n, max_n, capacity},
                     std::move(fn)});
    };

    add("A-via-invseq", "Eulerian polynomial by recurrence, descents, and (1,...,n)-inversion sequences",
        "A_n(x) = sum_{S_n} x^des = E_n^(1,2,...,n)(x)", {"recurrence", "permutations", "inversion sequences"}, 0, 8,
        8, [](Comparison& c, int n, const Recurrences& r) {
            const ZPoly a = eulerian_a(n, r);
            c.expect("descents over S_n", a, objects::permutation_des_polynomial(n));
            c.expect("ascents over S_n", a, objects::permutation_asc_polynomial(n));
            c.expect("inversion sequences", a, objects::inversion_asc_polynomial(objects::identity_bounds(n)));
        });
    add("B-via-invseq", "Type B Eulerian polynomial by signed permutations and (2,4,...,2n)-inversion sequences",
        "B_n(x) = sum_{B_n} x^des_B = E_n^(2,4,...,2n)(x)", {"signed permutations", "inversion sequences"}, 0, 6, 7,
        [](Comparison& c, int n, const Recurrences&) {
            c.expect("inversion sequences", objects::inversion_asc_polynomial(objects::even_bounds(n)),
                     objects::signed_des_polynomial(n));
        });
    add("M-via-invseq", "M_n by reversal of the N recurrence and (1,3,...,2n-1)-inversion sequences",
        "M_n(x) = E_n^(1,3,...,2n-1)(x)", {"recurrence", "inversion sequences"}, 0, 7, 8,
        [](Comparison& c, int n, const Recurrences& r) {
            c.expect("inversion sequences", m_poly(n, r), objects::inversion_asc_polynomial(objects::odd_bounds(n)));
        });
    add("N-el-enum", "N_n by recurrence and by marked blocks of perfect matchings",
        "N_n(x) = sum_{M_2n} x^el", {"recurrence", "matchings"}, 0, 7, 8,
        [](Comparison& c, int n, const Recurrences& r) {
            const auto table = n_triangle(n, r);
            c.expect("matchings", table.polynomial(n), objects::matching_el_polynomial(n));
            c.expect("row sum", table.row_sum(n), odd_double_factorial(static_cast<unsigned>(n)));
        });
    add("M-ol-enum", "M_n by reversal of the N recurrence and by unmarked blocks",
        "M_n(x) = sum_{M_2n} x^ol", {"recurrence", "matchings"}, 0, 7, 8,
        [](Comparison& c, int n, const Recurrences& r) {
            c.expect("matchings", m_poly(n, r), objects::matching_ol_polynomial(n));
        });
    add("M-reverse-N", "Reversal of N_n against the generating function of M",
        "M_n(x) = x^n N_n(1/x)", {"recurrence", "series"}, 0, 10, 12,
        [](Comparison& c, int n, const Recurrences& r) {
            c.expect("series M", egf("M", n), algebra::poly_reverse(n_poly(n, r), n));
        });
    add("eq-1-3", "Eulerian polynomials as a binomial convolution of N",
        "2^n x A_n(x) = sum_k C(n,k) N_k(x) N_{n-k}(x) (the n = 0 term is 1)", {"recurrence", "permutations"}, 0, 8,
        8, [](Comparison& c, int n, const Recurrences& r) {
            const ZPoly rhs = binomial_convolution(n, [&](int k) { return n_poly(k, r); },
                                                   [&](int k) { return n_poly(k, r); });
            c.expect("A by recurrence", pow2(n) * a_series_coefficient(n, r), rhs);
            const ZPoly enumerated =
                n == 0 ? ZPoly(1L) : var(Var::x) * objects::permutation_des_polynomial(n);
            c.expect("A by enumeration", pow2(n) * enumerated, rhs);
        });
    add("eq-1-4", "Type B Eulerian polynomials as a binomial convolution of N and M",
        "B_n(x) = sum_k C(n,k) N_k(x) M_{n-k}(x)", {"recurrence", "signed permutations", "inversion sequences"}, 0, 6,
        7, [](Comparison& c, int n, const Recurrences& r) {
            const ZPoly rhs = binomial_convolution(n, [&](int k) { return n_poly(k, r); },
                                                   [&](int k) { return m_poly(k, r); });
            c.expect("inversion sequences", objects::inversion_asc_polynomial(objects::even_bounds(n)), rhs);
            c.expect("signed permutations", objects::signed_des_polynomial(n), rhs);
        });
    add("eq-1-3-refined-k", "Decorated permutations with k hats against C(n,k) N_k N_{n-k}",
        "sum_{P_n,k} x^asc = C(n,k) N_k(x) N_{n-k}(x)", {"decorated permutations", "recurrence"}, 1, 6, 7,
        [](Comparison& c, int n, const Recurrences& r) {
            const auto parts = objects::decorated_asc_by_hat(n);
            for (int k = 0; k <= n; ++k)
                c.expect("k = " + std::to_string(k), parts[static_cast<std::size_t>(k)],
                         binom(n, k) * n_poly(k, r) * n_poly(n - k, r));
        });
    add("eq-1-4-refined-k", "Signed permutations with bar = k against C(n,k) N_k M_{n-k}",
        "sum_{B_n,k} x^des_B = C(n,k) N_k(x) M_{n-k}(x)", {"signed permutations", "recurrence"}, 1, 6, 7,
        [](Comparison& c, int n, const Recurrences& r) {
            const auto parts = objects::signed_des_by_bar(n);
            for (int k = 0; k <= n; ++k)
                c.expect("k = " + std::to_string(k), parts[static_cast<std::size_t>(k)],
                         binom(n, k) * n_poly(k, r) * m_poly(n - k, r));
        });
    add("N2-equals-A2z", "Square of the N generating function against A at 2z",
        "N(x,z)^2 = A(x,2z)", {"series", "recurrence"}, 0, 8, 12,
        [](Comparison& c, int n, const Recurrences& r) {
            const auto order = std::max(n, 1);
            const auto nz = series_family("N", order);
            const auto az = series_family("A", order).rescale_z(2);
            const auto lhs = algebra::to_integer(algebra::egf_coefficient(nz * nz, n));
            c.expect("series", lhs, algebra::to_integer(algebra::egf_coefficient(az, n)));
            c.expect("N recurrence", algebra::to_integer(algebra::egf_coefficient(nz, n)), n_poly(n, r));
            c.expect("A recurrence", lhs, pow2(n) * a_series_coefficient(n, r));
        });
    add("phi-bijection", "Insertion bijection from decorated permutations to matching triples",
        "P_n,k <-> M_2k x M_2n-2k x ([n] choose k), asc = el + el", {"bijection", "recurrence"}, 1, 7, 8,
        [](Comparison& c, int n, const Recurrences& r) { check_bijection(c, n, r, bijections::MapId::phi); });
    add("psi-bijection", "Insertion bijection from signed permutations to matching triples",
        "B_n,k <-> M_2k x M_2n-2k x ([n] choose k), des_B = el + ol", {"bijection", "recurrence"}, 1, 6, 8,
        [](Comparison& c, int n, const Recurrences& r) { check_bijection(c, n, r, bijections::MapId::psi); });
    add("C-descents", "Second-order Eulerian triangle against descents of Stirling permutations",
        "C_n(x) = sum_{Q_n} x^des", {"recurrence", "Stirling permutations"}, 1, 7, 8,
        [](Comparison& c, int n, const Recurrences& r) {
            const auto table = c_triangle(n, r);
            c.expect("Stirling permutations", table.polynomial(n), objects::stirling_descent_polynomial(n));
            c.expect("row sum", table.row_sum(n), odd_double_factorial(static_cast<unsigned>(n)));
        });
    add("ap-equals-el", "Ascent plateaus of Stirling permutations against marked blocks",
        "sum_{Q_n} x^ap = sum_{M_2n} x^el = N_n(x)", {"Stirling permutations", "matchings", "recurrence"}, 0, 7, 8,
        [](Comparison& c, int n, const Recurrences& r) {
            const ZPoly ap = objects::stirling_ap_polynomial(n);
            c.expect("matchings", ap, objects::matching_el_polynomial(n));
            c.expect("recurrence", ap, n_poly(n, r));
        });
    add("cplat-casc-C", "Cycle plateaus and cycle ascents against the second-order Eulerian triangle",
        "sum x^cplat = sum x^(casc+1) = C_n(x)", {"cycle Stirling permutations", "recurrence"}, 1, 7, 8,
        [](Comparison& c, int n, const Recurrences& r) {
            const ZPoly cn = c_poly(n, r);
            c.expect("cplat", objects::cycle_cplat_polynomial(n), cn);
            c.expect("casc + 1", objects::cycle_casc_polynomial(n), cn);
        });
    add("Q-recurrence-enum", "Q_n(x,q) by recurrence and by (cap, cyc) over cycle Stirling permutations",
        "Q_n(x,q) = sum x^cap q^cyc", {"recurrence", "cycle Stirling permutations"}, 0, 7, 8,
        [](Comparison& c, int n, const Recurrences& r) {
            c.expect("enumeration", q_poly(n, true, r), objects::cycle_cap_cyc_polynomial(n));
        });
    add("Q-gf", "Q_n(x,q) against the symbolic power M(x,z)^q and its specializations",
        "Q(x,q;z) = M(x,z)^q, Q_n(x,1) = M_n(x), Q_n(1,q) = q(q+2)...(q+2n-2)", {"recurrence", "series"}, 0, 8, 12,
        [](Comparison& c, int n, const Recurrences& r) {
            const ZPoly qn = q_poly(n, true, r);
            c.expect("series", egf("Q", n), qn);
            c.expect("q = 1", qn.evaluate(Var::q, 1), m_poly(n, r));
            c.expect("x = 1", qn.evaluate(Var::x, 1), rising_q(n));
        });
    add("cyc-closed-form", "Cycle counts of cycle Stirling permutations",
        "sum q^cyc = q(q+2)...(q+2n-2)", {"cycle Stirling permutations", "closed form", "recurrence"}, 1, 7, 8,
        [](Comparison& c, int n, const Recurrences& r) {
            const ZPoly cyc = objects::cycle_cyc_polynomial(n);
            c.expect("closed form", cyc, rising_q(n));
            c.expect("Q recurrence at x = 1", cyc, q_poly(n, true, r).evaluate(Var::x, 1));
        });
    add("desi-equals-cyc", "Descent intervals of Stirling permutations against cycle counts",
        "sum_{Q_n} q^desi = sum q^cyc = L_n(q)", {"Stirling permutations", "cycle Stirling permutations", "recurrence"},
        1, 7, 8, [](Comparison& c, int n, const Recurrences& r) {
            const ZPoly desi = objects::stirling_desi_polynomial(n);
            c.expect("cycles", desi, objects::cycle_cyc_polynomial(n));
            c.expect("L recurrence", desi, l_poly(n, r));
        });
    add("Y-cyclic", "Single-cycle objects of order n+1 by cycle ascent plateaus",
        "Y_{n+1}(x) = 2^n x A_n(x)", {"cycle Stirling permutations", "recurrence"}, 1, 6, 7,
        [](Comparison& c, int n, const Recurrences& r) {
            c.expect("enumeration", y_poly(n + 1), pow2(n) * var(Var::x) * eulerian_a(n, r));
        });
    add("P-three-routes", "P_n(x,y,q) by recurrence, convolution, counting table and enumeration",
        "P_n by recurrence = convolution = table = sum x^cap y^fix q^cyc",
        {"recurrence", "convolution", "table", "enumeration"}, 0, 7, 8,
        [](Comparison& c, int n, const Recurrences& r) {
            const ZPoly p = p_poly(n, PRoute::recurrence, r);
            c.expect("convolution", p, p_poly(n, PRoute::convolution, r));
            c.expect("table", p, p_poly(n, PRoute::table, r));
            c.expect("enumeration", p, p_poly(n, PRoute::enumeration, r));
            if (n == 0) c.expect("initial value", p, ZPoly(1L));
            if (n == 1) c.expect("initial value", p, var(Var::q) * var(Var::y));
        });
    add("P-gf", "P_n(x,y,q) against e^{qz(y-1)} Q(x,q;z)", "P(x,y,q;z) = e^{qz(y-1)} Q(x,q;z)",
        {"recurrence", "series"}, 0, 8, 12, [](Comparison& c, int n, const Recurrences& r) {
            c.expect("series", egf("P", n), p_poly(n, PRoute::recurrence, r));
        });
    add("grammar-lemma1", "Formal derivatives of a against cycle Stirling statistics",
        "D^n(a) = a sum q^cyc b^(2fix) c^(2cap) d^(2n-2fix-2cap)", {"grammar", "enumeration", "recurrence"}, 1, 7, 8,
        [](Comparison& c, int n, const Recurrences& r) {
            const ZPoly dna = grammar::lemma1_grammar().derive(var(Var::a), n);
            c.expect("enumeration", dna, grammar::lemma1_enumeration(n));
            c.expect("c^2 = x, b^2 = y, d = 1", grammar::to_xyq(dna), p_poly(n, PRoute::recurrence, r));
        });
    add("grammar-lemma2", "Formal derivatives of b^2 against Eulerian numbers",
        "D^n(b^2) = 2^n sum_k <n,k> c^(2k+2) d^(2n-2k) = 2^n d^(2n) c^2 A_n(c^2/d^2)",
        {"grammar", "Eulerian triangle", "recurrence"}, 1, 10, 10, [](Comparison& c, int n, const Recurrences& r) {
            const auto report = grammar::lemma2_check(n, r);
            if (!report.passed()) c.expect_text("Eulerian triangle", report.lhs, report.rhs);
            ZPoly via_a;
            const auto a = eulerian_a(n, r);
            for (const auto& [ex, coeff] : a.terms()) {
                const int k = ex[algebra::index(Var::x)];
                via_a += ZPoly(coeff) * var(Var::c, 2 * k + 2) * var(Var::d, 2 * n - 2 * k);
            }
            c.expect("A_n form", grammar::lemma2_grammar().derive(var(Var::b, 2), n), pow2(n) * via_a);
        });
    add("R-recurrence-enum", "Stirling derangement polynomial by recurrence and enumeration",
        "R_n(x,q) = sum_{fix = 0} x^cap q^cyc", {"recurrence", "enumeration"}, 0, 7, 8,
        [](Comparison& c, int n, const Recurrences& r) {
            c.expect("enumeration", r_poly(n, true, r), objects::derangement_cap_cyc_polynomial(n));
        });
    add("R-binomial-shift", "Fixed-point refinement of P_n against shifted derangement polynomials",
        "[y^k] P_n(x,y,q) = C(n,k) q^k R_{n-k}(x,q)", {"recurrence"}, 0, 10, 12,
        [](Comparison& c, int n, const Recurrences& r) {
            const ZPoly p = p_poly(n, PRoute::recurrence, r);
            for (int k = 0; k <= n; ++k)
                c.expect("k = " + std::to_string(k), p.coefficient_of(Var::y, k), r_nk(n, k, r));
        });
    add("qn-egf", "Stirling derangement counts by recurrence, generating function and R_n(1,1)",
        "sum q_n z^n/n! = e^{-z}/sqrt(1-2z), q_{n+1} = 2n(q_n + q_{n-1})", {"recurrence", "series"}, 0, 12, 12,
        [](Comparison& c, int n, const Recurrences& r) {
            const Integer qn = qn_sequence(n, r).back();
            c.expect("series", egf("qn", n).constant_term(), qn);
            c.expect("R_n(1,1)", r_poly(n, false, r).evaluate(Var::x, 1).constant_term(), qn);
            static const long kInitial[] = {1, 0, 2};
            if (n <= 2) c.expect("initial value", qn, Integer(kInitial[n]));
        });
    add("S2-equals-d2z", "Square of the derangement series S against d(x,2z)",
        "S(x,z)^2 = d(x,2z), 2^n d_n(x) = sum_k C(n,k) R_k(x) R_{n-k}(x)", {"series", "recurrence", "enumeration"},
        0, 8, 12, [](Comparison& c, int n, const Recurrences& r) {
            const auto order = std::max(n, 1);
            const auto s = series_family("S", order);
            const auto lhs = algebra::to_integer(algebra::egf_coefficient(s * s, n));
            const ZPoly dn = egf("d", n);
            c.expect("series", lhs, pow2(n) * dn);
            c.expect("R recurrence", algebra::to_integer(algebra::egf_coefficient(s, n)), r_poly(n, false, r));
            c.expect("convolution", pow2(n) * dn,
                     binomial_convolution(n, [&](int k) { return r_poly(k, false, r); },
                                          [&](int k) { return r_poly(k, false, r); }));
            c.expect("derangement excedances", dn, objects::derangement_exc_polynomial(n));
        });
    add("R-palindromic", "Symmetry of R_n(x) at q = 1", "x^n R_n(1/x) = R_n(x)", {"recurrence"}, 2, 10, 12,
        [](Comparison& c, int n, const Recurrences& r) {
            const ZPoly rn = r_poly(n, false, r);
            c.expect("reversal", algebra::poly_reverse(rn, n), rn);
        });
    add("R-real-rooted", "Real, simple zeros of R_n(x)/x at q = 1 by Sturm sequences",
        "R_n(x)/x has deg R_n - 1 distinct real zeros", {"recurrence", "Sturm chain"}, 2, 10, 12,
        [](Comparison& c, int n, const Recurrences& r) {
            const ZPoly rn = r_poly(n, false, r);
            c.expect("constant term", rn.constant_term(), Integer(0));
            if (c.failed()) return;
            const auto report = algebra::sturm_real_roots(rn.shifted(Var::x, -1));
            c.expect_text("distinct real zeros", std::to_string(report.distinct_real_roots),
                          std::to_string(report.degree));
            c.expect_text("squarefree", report.is_squarefree ? "yes" : "no", "yes");
        });
    add("h-series-vs-enum", "Signed cap sums over Stirling derangements against sqrt(sec)",
        "sum_{DQ_n} (-1)^cap = 0 for odd n, (-1)^k h_k for n = 2k", {"enumeration", "series"}, 1, 7, 8,
        [](Comparison& c, int n, const Recurrences&) {
            const auto h = h_sequence(n / 2 + 1);
            Integer expected = 0;
            if (n % 2 == 0) expected = (n / 2) % 2 == 0 ? h.back() : Integer(-h.back());
            c.expect("enumeration", objects::derangement_cap_sign_sum(n), expected);
            static const long kListed[] = {1, 2, 28, 1112, 87568};
            for (std::size_t i = 0; i < h.size() && i < 5; ++i)
                c.expect("h_" + std::to_string(i), h[i], Integer(kListed[i]));
        });
    add("h-involutions", "Paired-excedance involutions against the h-sequence",
        "#{fixed-point-free involutions of [4n] with paired excedances} = h_n", {"enumeration", "series"}, 0, 3,
        objects::kMaxPairedInvolutionN, [](Comparison& c, int n, const Recurrences&) {
            c.expect("involutions", Integer(static_cast<long>(objects::count_paired_excedance_involutions(n))),
                     h_sequence(n + 1).back());
        });
    add("rlmin-closed-form", "Right-to-left minima over signed permutations",
        "sum_{B_n} x^rlmin = 2^n sum_{S_n} x^rlmin = 2^n x(x+1)...(x+n-1)",
        {"signed permutations", "permutations", "closed form"}, 1, 6, 7,
        [](Comparison& c, int n, const Recurrences&) {
            const ZPoly signed_sum = objects::signed_rlmin_polynomial(n);
            c.expect("closed form", signed_sum, signed_rlmin_closed_form(n));
            c.expect("permutations", signed_sum, pow2(n) * objects::permutation_rlmin_polynomial(n));
        });
    add("fiber-2n", "Decorated permutations over each permutation", "|P_n(pi)| = 2^n for every pi in S_n",
        {"decorated permutations", "permutations"}, 1, 6, 7, [](Comparison& c, int n, const Recurrences&) {
            const auto sizes = objects::decorated_fiber_sizes(n);
            c.expect("number of fibers", Integer(static_cast<long>(sizes.size())),
                     factorial(static_cast<unsigned>(n)));
            for (const auto& [word, size] : sizes) {
                if (size == (1LL << n)) continue;
                objects::Permutation p{word};
                c.expect("fiber of " + objects::encode(p), Integer(static_cast<long>(size)),
                         Integer(1L << n));
            }
        });
    return e;
}

const std::vector<Entry>& entries() {
    static const std::vector<Entry> e = build_registry();
    return e;
}

const Entry* find_entry(std::string_view id) {
    for (const auto& e : entries())
        if (e.info.id == id) return &e;
    return nullptr;
}

using Clock = std::chrono::steady_clock;

}  // namespace

const std::vector<IdentityCheck>& registry() {
    static const std::vector<IdentityCheck> list = [] {
        std::vector<IdentityCheck> out;
        for (const auto& e : entries()) out.push_back(e.info);
        return out;
    }();
    return list;
}

const IdentityCheck* find_check(std::string_view id) {
    const Entry* e = find_entry(id);
    return e ? &e->info : nullptr;
}

VerifyReport run_check(std::string_view id, int n, const Context& ctx) {
    const Entry* entry = find_entry(id);
    if (!entry) throw UsageError("unknown check id '" + std::string(id) + "'");
    if (n < entry->info.min_n)
        throw std::out_of_range("check " + std::string(id) + " starts at n = " + std::to_string(entry->info.min_n));
    VerifyReport report;
    report.id = entry->info.id;
    report.n = n;
    const auto start = Clock::now();
    if (n > entry->info.capacity) {
        report.status = CheckStatus::skipped_capacity;
        report.detail = "n exceeds capacity " + std::to_string(entry->info.capacity);
        return report;
    }
    try {
        Comparison c;
        entry->run(c, n, ctx.recurrences);
        report.status = c.failed() ? CheckStatus::fail : CheckStatus::pass;
        if (c.failed()) {
            report.lhs = c.lhs();
            report.rhs = c.rhs();
            report.detail = c.detail();
        }
    } catch (const CapacityError& e) {
        report.status = CheckStatus::skipped_capacity;
        report.detail = e.what();
    } catch (const std::exception& e) {
        report.status = CheckStatus::fail;
        report.detail = std::string("error: ") + e.what();
    }
    report.runtime_ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
    return report;
}

std::vector<VerifyReport> run_range(std::string_view id, int max_n, const Context& ctx) {
    const IdentityCheck* info = find_check(id);
    if (!info) throw UsageError("unknown check id '" + std::string(id) + "'");
    std::vector<VerifyReport> out;
    for (int n = info->min_n; n <= max_n; ++n) out.push_back(run_check(id, n, ctx));
    return out;
}

std::vector<VerifyReport> run_all(const Overrides& max_n_overrides, const Context& ctx) {
    for (const auto& [key, value] : max_n_overrides)
        if (key != "*" && !find_check(key)) throw UsageError("unknown check id '" + key + "' in overrides");
    std::vector<VerifyReport> out;
    for (const auto& info : registry()) {
        int max_n = info.default_max_n;
        if (auto it = max_n_overrides.find(info.id); it != max_n_overrides.end()) {
            max_n = it->second;
        } else if (auto all = max_n_overrides.find("*"); all != max_n_overrides.end()) {
            max_n = std::min(max_n, all->second);
        }
        auto part = run_range(info.id, max_n, ctx);
        out.insert(out.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
    }
    return out;
}

bool all_passed(const std::vector<VerifyReport>& reports) {
    for (const auto& r : reports)
        if (r.status == CheckStatus::fail) return false;
    return true;
}

}  // namespace combi::verify
