#include "combi/errors.hpp"
#include "combi/families.hpp"
#include "combi/objects/tallies.hpp"

#include <gtest/gtest.h>

using namespace combi;
using namespace combi::families;
using algebra::var;
using algebra::Var;

namespace {

ZPoly x_poly(std::initializer_list<long> coeffs) {
    std::vector<Integer> c;
    for (long k : coeffs) c.emplace_back(k);
    return ZPoly::from_dense(Var::x, c);
}

const ZPoly X = var(Var::x);
const ZPoly Y = var(Var::y);
const ZPoly Q = var(Var::q);

}  // namespace

TEST(Triangles, FirstRowsOfN) {
    EXPECT_EQ(n_poly(0), ZPoly(1L));
    EXPECT_EQ(n_poly(1), X);
    EXPECT_EQ(n_poly(2), x_poly({0, 2, 1}));
    EXPECT_EQ(n_poly(3), x_poly({0, 4, 10, 1}));
    EXPECT_EQ(m_poly(3), x_poly({1, 10, 4}));
}

TEST(Triangles, RowSumsAreDoubleFactorials) {
    const auto t = n_triangle(10);
    for (int n = 0; n <= 10; ++n) EXPECT_EQ(t.row_sum(n), odd_double_factorial(static_cast<unsigned>(n))) << n;
    const auto c = c_triangle(8);
    for (int n = 0; n <= 8; ++n) EXPECT_EQ(c.row_sum(n), odd_double_factorial(static_cast<unsigned>(n))) << n;
    const auto e = eulerian_triangle(8);
    for (int n = 0; n <= 8; ++n) EXPECT_EQ(e.row_sum(n), factorial(static_cast<unsigned>(n))) << n;
}

TEST(Triangles, NAgreesWithMarkedBlockEnumeration) {
    for (int n = 1; n <= 6; ++n) EXPECT_EQ(n_poly(n), objects::matching_el_polynomial(n)) << n;
}

TEST(Eulerian, TypeAAndB) {
    EXPECT_EQ(eulerian_a(3), x_poly({1, 4, 1}));
    EXPECT_EQ(eulerian_a(5), x_poly({1, 26, 66, 26, 1}));
    EXPECT_EQ(eulerian_b(2), x_poly({1, 6, 1}));
    EXPECT_EQ(eulerian_b(3), x_poly({1, 23, 23, 1}));
    EXPECT_THROW(eulerian_b(kMaxEnumerationN + 1), CapacityError);
}

TEST(Stirling, SecondOrderEulerian) {
    EXPECT_EQ(c_poly(2), x_poly({0, 1, 2}));
    for (int n = 1; n <= 6; ++n) EXPECT_EQ(c_poly(n), objects::stirling_descent_polynomial(n)) << n;
}

TEST(QFamily, SpecializationsAndSmallValues) {
    EXPECT_EQ(q_poly(2), ZPoly(2L) * X * Q + Q * Q);
    for (int n = 0; n <= 8; ++n) {
        EXPECT_EQ(q_poly(n).evaluate(Var::q, 1), m_poly(n)) << n;
        EXPECT_EQ(q_poly(n).evaluate(Var::x, 1), rising_q(n)) << n;
        EXPECT_EQ(q_poly(n, false), m_poly(n));
    }
}

TEST(PFamily, InitialValuesAndRoutes) {
    EXPECT_EQ(p_poly(0, PRoute::recurrence), ZPoly(1L));
    EXPECT_EQ(p_poly(1, PRoute::recurrence), Q * Y);
    EXPECT_EQ(p_poly(3, PRoute::recurrence).to_string(), "4*x*q + 4*x^2*q + 6*x*y*q^2 + y^3*q^3");
    for (int n = 0; n <= 6; ++n) {
        const ZPoly p = p_poly(n, PRoute::recurrence);
        EXPECT_EQ(p_poly(n, PRoute::convolution), p) << n;
        EXPECT_EQ(p_poly(n, PRoute::table), p) << n;
        EXPECT_EQ(p_poly(n, PRoute::series, {}, 8), p) << n;
        EXPECT_EQ(p_poly(n, PRoute::enumeration), p) << n;
    }
    EXPECT_THROW(p_poly(9, PRoute::series, {}, 8), CapacityError);
    EXPECT_THROW(p_poly(kMaxEnumerationN + 1, PRoute::enumeration), CapacityError);
}

TEST(PFamily, YEqualsOneGivesQ) {
    for (int n = 0; n <= 7; ++n) EXPECT_EQ(p_poly(n, PRoute::recurrence).evaluate(Var::y, 1), q_poly(n)) << n;
}

TEST(Derangements, RFamily) {
    EXPECT_EQ(r_poly(0), ZPoly(1L));
    EXPECT_EQ(r_poly(1), ZPoly{});
    EXPECT_EQ(r_poly(4, false), x_poly({0, 8, 44, 8}));
    for (int n = 2; n <= 10; ++n) {
        const ZPoly r = r_poly(n, false);
        EXPECT_EQ(algebra::poly_reverse(r, n), r) << n;
    }
    ZPoly sum;
    for (int k = 0; k <= 5; ++k) sum += r_nk(5, k);
    // Fixed-point cycles carry q and no cycle ascent plateaus.
    EXPECT_EQ(sum, q_poly(5));
}

TEST(Derangements, QnSequence) {
    const std::vector<std::string> expected = {"1",       "0",        "2",          "8",           "60",
                                               "544",     "6040",     "79008",      "1190672",     "20314880",
                                               "387099936", "8148296320", "187778717632"};
    const auto seq = qn_sequence(12);
    ASSERT_EQ(seq.size(), expected.size());
    for (std::size_t i = 0; i < seq.size(); ++i) EXPECT_EQ(seq[i].get_str(), expected[i]) << i;
    const auto s = series_family("qn", 12);
    for (int n = 0; n <= 12; ++n) EXPECT_EQ(algebra::egf_coefficient(s, n), algebra::QPoly(Rational(seq[static_cast<std::size_t>(n)])));
}

TEST(Derangements, BrentiPolynomials) {
    EXPECT_EQ(d_poly(3), x_poly({0, 1, 1}));
    for (int n = 1; n <= 6; ++n) EXPECT_EQ(d_poly(n), objects::derangement_exc_polynomial(n)) << n;
}

TEST(Sequences, LAndClosedForms) {
    for (int n = 1; n <= 7; ++n) EXPECT_EQ(l_poly(n), rising_q(n)) << n;
    EXPECT_EQ(signed_rlmin_closed_form(2), x_poly({0, 4, 4}));
    EXPECT_EQ(y_poly(3), ZPoly(4L) * X * eulerian_a(2));
}

TEST(Sequences, HFromSecant) {
    const auto h = h_sequence(5);
    const std::vector<long> expected = {1, 2, 28, 1112, 87568};
    ASSERT_EQ(h.size(), expected.size());
    for (std::size_t i = 0; i < h.size(); ++i) EXPECT_EQ(h[i], expected[i]);
}

TEST(Series, FamiliesMatchTheirPolynomials) {
    const int order = 8;
    const auto n = series_family("N", order);
    const auto m = series_family("M", order);
    const auto a = series_family("A", order);
    for (int k = 0; k <= order; ++k) {
        EXPECT_EQ(algebra::egf_coefficient(n, k), algebra::to_rational(n_poly(k))) << k;
        EXPECT_EQ(algebra::egf_coefficient(m, k), algebra::to_rational(m_poly(k))) << k;
    }
    for (int k = 1; k <= order; ++k)
        EXPECT_EQ(algebra::egf_coefficient(a, k), algebra::to_rational(X * eulerian_a(k))) << k;
    const auto sec = series_family("sec", order);
    const auto h = h_sequence(order / 2 + 1);
    for (int k = 0; 2 * k <= order; ++k) {
        const Rational sign = k % 2 == 0 ? 1 : -1;
        EXPECT_EQ(algebra::egf_coefficient(sec, 2 * k), algebra::QPoly(sign * Rational(h[static_cast<std::size_t>(k)]))) << k;
    }
}

TEST(Series, UnknownIdsAndLargeOrders) {
    EXPECT_THROW(series_family("zeta", 4), UsageError);
    EXPECT_THROW(series_family("N", max_series_order() + 1), CapacityError);
    EXPECT_EQ(series_ids().size(), series_families(4).size());
}

TEST(Recurrences, EveryFieldIsExposed) {
    Recurrences r;
    const auto fields = r.fields();
    EXPECT_EQ(fields.size(), 41u);
    for (const auto& [name, ptr] : fields) {
        EXPECT_FALSE(name.empty());
        ASSERT_NE(ptr, nullptr);
    }
    *fields.front().second += 1;
    EXPECT_NE(n_poly(3, r), n_poly(3));
}
