#include "combi/algebra/number.hpp"
#include "combi/algebra/poly.hpp"
#include "combi/algebra/series.hpp"
#include "combi/algebra/sturm.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace combi;
using namespace combi::algebra;

namespace {

ZPoly random_poly(std::mt19937& rng, bool laurent) {
    std::uniform_int_distribution<int> terms(0, 5);
    std::uniform_int_distribution<int> coeff(-9, 9);
    std::uniform_int_distribution<int> expo(laurent ? -2 : 0, 3);
    std::uniform_int_distribution<int> pick(0, 3);
    ZPoly p;
    const int count = terms(rng);
    for (int t = 0; t < count; ++t) {
        Exponents e{};
        // Mix family variables with one grammar letter.
        e[index(Var::x)] = expo(rng);
        e[index(Var::y)] = pick(rng) == 0 ? expo(rng) : 0;
        e[index(Var::q)] = pick(rng) == 0 ? expo(rng) : 0;
        e[index(Var::b)] = pick(rng) == 0 ? expo(rng) : 0;
        p.add_term(e, Integer(coeff(rng)));
    }
    return p;
}

ZPoly x_poly(std::initializer_list<long> coeffs) {
    std::vector<Integer> c;
    for (long v : coeffs) c.emplace_back(v);
    return ZPoly::from_dense(Var::x, c);
}

}  // namespace

TEST(Number, FactorialsAndBinomials) {
    EXPECT_EQ(factorial(0), 1);
    EXPECT_EQ(factorial(10), 3628800);
    EXPECT_EQ(odd_double_factorial(0), 1);
    EXPECT_EQ(odd_double_factorial(5), 945);
    EXPECT_EQ(binomial(10, 3), 120);
    EXPECT_EQ(binomial(3, 5), 0);
    EXPECT_EQ(factorial(25).get_str(), "15511210043330985984000000");
}

TEST(Poly, RingLawsOnRandomLaurentPolynomials) {
    std::mt19937 rng(20240611);
    for (int trial = 0; trial < 10000; ++trial) {
        const bool laurent = trial % 2 == 1;
        const ZPoly a = random_poly(rng, laurent);
        const ZPoly b = random_poly(rng, laurent);
        const ZPoly c = random_poly(rng, laurent);
        ASSERT_EQ(a + b, b + a);
        ASSERT_EQ(a * b, b * a);
        ASSERT_EQ((a + b) + c, a + (b + c));
        ASSERT_EQ((a * b) * c, a * (b * c));
        ASSERT_EQ(a * (b + c), a * b + a * c);
        ASSERT_EQ(a - a, ZPoly{});
        ASSERT_EQ(a * ZPoly(1L), a);
        ASSERT_EQ((a * b).derivative(Var::x), a.derivative(Var::x) * b + a * b.derivative(Var::x));
    }
}

TEST(Poly, CanonicalFormHasNoZeroCoefficients) {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 2000; ++trial) {
        const ZPoly p = random_poly(rng, true) * random_poly(rng, true) - random_poly(rng, true);
        for (const auto& [e, c] : p.terms()) ASSERT_NE(c, 0);
    }
}

TEST(Poly, RenderingUsesGradedOrder) {
    const ZPoly q2 = var(Var::q, 2) + var(Var::x) * var(Var::q) * ZPoly(2L);
    EXPECT_EQ(q2.to_string(), "2*x*q + q^2");
    EXPECT_EQ(x_poly({0, 4, 10, 1}).to_string(), "4*x + 10*x^2 + x^3");
    EXPECT_EQ(ZPoly{}.to_string(), "0");
    EXPECT_EQ((ZPoly(1L) - var(Var::b, -1)).to_string(), "-b^-1 + 1");
}

TEST(Poly, ReverseIsAnInvolution) {
    std::mt19937 rng(99);
    std::uniform_int_distribution<int> coeff(-20, 20);
    for (int trial = 0; trial < 500; ++trial) {
        const int n = trial % 9;
        std::vector<Integer> c(static_cast<std::size_t>(n) + 1);
        for (auto& v : c) v = coeff(rng);
        const ZPoly p = ZPoly::from_dense(Var::x, c);
        ASSERT_EQ(poly_reverse(poly_reverse(p, n), n), p);
    }
    EXPECT_EQ(poly_reverse(x_poly({0, 4, 10, 1}), 3), x_poly({1, 10, 4}));
    EXPECT_THROW(poly_reverse(x_poly({0, 0, 0, 1}), 2), std::domain_error);
    EXPECT_THROW(poly_reverse(var(Var::y), 2), std::domain_error);
}

TEST(Poly, EvaluateAndSubstitute) {
    const ZPoly p = x_poly({1, 4, 1});
    EXPECT_EQ(p.evaluate(Var::x, 1), ZPoly(6L));
    EXPECT_EQ(p.substitute(Var::x, var(Var::y) + ZPoly(1L)).evaluate(Var::y, 0), ZPoly(6L));
    EXPECT_EQ(var(Var::b, -2).evaluate(Var::b, -1), ZPoly(1L));
    EXPECT_THROW(var(Var::b, -1).evaluate(Var::b, 2), std::domain_error);
    EXPECT_EQ(var(Var::c, 4).rescale(Var::c, Var::x, 2), var(Var::x, 2));
    EXPECT_THROW(var(Var::c, 3).rescale(Var::c, Var::x, 2), std::domain_error);
}

TEST(Poly, ExactDivision) {
    std::mt19937 rng(3);
    for (int trial = 0; trial < 300; ++trial) {
        const ZPoly a = random_poly(rng, false);
        const ZPoly b = random_poly(rng, false);
        if (b.is_zero()) continue;
        ASSERT_EQ(divide_exact(to_rational(a * b), to_rational(b)), to_rational(a));
    }
    EXPECT_THROW(divide_exact(to_rational(var(Var::x) + ZPoly(1L)), to_rational(var(Var::x) + ZPoly(2L))),
                 std::domain_error);
    EXPECT_THROW(to_integer(QPoly(Rational(1, 2))), std::domain_error);
}

TEST(Series, ExpAndLogAreInverse) {
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> coeff(-5, 5);
    for (int trial = 0; trial < 50; ++trial) {
        TruncatedSeries s(8);
        for (int i = 1; i <= 8; ++i) s[static_cast<std::size_t>(i)] = to_rational(x_poly({coeff(rng), coeff(rng)}));
        ASSERT_EQ(series_log(series_exp(s)), s);
        TruncatedSeries u = s;
        u[0] = QPoly(Rational(1));
        ASSERT_EQ(series_exp(series_log(u)), u);
        const auto r = series_sqrt(u);
        ASSERT_EQ(r * r, u);
    }
}

TEST(Series, ExponentialCoefficients) {
    const auto e = series_exp(TruncatedSeries::linear(QPoly(Rational(1)), 6));
    for (int n = 0; n <= 6; ++n) EXPECT_EQ(egf_coefficient(e, n), QPoly(Rational(1)));
    EXPECT_THROW(series_exp(TruncatedSeries::constant(QPoly(Rational(1)), 4)), std::domain_error);
}

TEST(Series, DivisionAndSymbolicPower) {
    const int order = 7;
    TruncatedSeries one_minus_z = TruncatedSeries::constant(QPoly(Rational(1)), order) -
                                  TruncatedSeries::linear(QPoly(Rational(1)), order);
    const auto geometric = series_divide(TruncatedSeries::constant(QPoly(Rational(1)), order), one_minus_z);
    for (int i = 0; i <= order; ++i) EXPECT_EQ(geometric[static_cast<std::size_t>(i)], QPoly(Rational(1)));
    // (1 - z)^(-q): coefficient of z^n is q(q+1)...(q+n-1)/n!.
    const auto p = series_pow_symbolic(geometric, Var::q);
    ZPoly rising(1L);
    for (int n = 0; n <= order; ++n) {
        EXPECT_EQ(egf_coefficient(p, n), to_rational(rising));
        rising *= var(Var::q) + ZPoly(static_cast<long>(n));
    }
}

TEST(Sturm, CountsRealRoots) {
    // (x+1)(x+2)(x+3)
    EXPECT_TRUE(sturm_real_roots(x_poly({6, 11, 6, 1})).all_roots_real_simple());
    // x^2 + 1
    const auto r = sturm_real_roots(x_poly({1, 0, 1}));
    EXPECT_EQ(r.distinct_real_roots, 0);
    EXPECT_FALSE(r.all_roots_real_simple());
    // (x-1)^2 (x+2)
    const auto d = sturm_real_roots(x_poly({2, -3, 0, 1}));
    EXPECT_FALSE(d.is_squarefree);
    EXPECT_EQ(d.distinct_real_roots, 2);
    // Eulerian A_5 is real-rooted.
    EXPECT_TRUE(sturm_real_roots(x_poly({1, 26, 66, 26, 1})).all_roots_real_simple());
}
