#include "combi/errors.hpp"
#include "combi/families.hpp"
#include "combi/grammar.hpp"

#include <gtest/gtest.h>

using namespace combi;
using namespace combi::grammar;
using algebra::var;

TEST(Grammar, SingleDerivations) {
    const auto& g = lemma1_grammar();
    EXPECT_EQ(g.derive(var(Var::a)), var(Var::q) * var(Var::a) * var(Var::b, 2));
    EXPECT_EQ(g.derive(var(Var::q)), ZPoly{});
    EXPECT_EQ(g.derive(var(Var::d)), var(Var::c, 2) * var(Var::d));
    EXPECT_EQ(g.derive(var(Var::a), 0), var(Var::a));
}

TEST(Grammar, DerivationIsLinearAndLeibniz) {
    const auto& g = lemma1_grammar();
    const ZPoly u = var(Var::a) * var(Var::c) + var(Var::b, -1);
    const ZPoly v = var(Var::d, 2) - var(Var::q) * var(Var::b);
    EXPECT_EQ(g.derive(u + v), g.derive(u) + g.derive(v));
    EXPECT_EQ(g.derive(u * v), g.derive(u) * v + u * g.derive(v));
    EXPECT_EQ(g.derive(u * v, 3), g.derive(g.derive(g.derive(u * v))));
}

TEST(Grammar, UnknownLettersAreRejected) {
    const Grammar g({{Var::a, var(Var::b)}, {Var::b, var(Var::a)}}, {});
    EXPECT_THROW(g.derive(var(Var::c)), std::domain_error);
    EXPECT_THROW(Grammar({{Var::a, var(Var::b)}}, {}), std::invalid_argument);
}

TEST(Grammar, DerivativesOfAMatchEnumeration) {
    for (int n = 1; n <= 6; ++n) {
        EXPECT_EQ(lemma1_grammar().derive(var(Var::a), n), lemma1_enumeration(n)) << n;
        EXPECT_TRUE(lemma1_check(n).passed()) << n;
    }
    EXPECT_THROW(lemma1_check(kLemma1MaxN + 1), CapacityError);
}

TEST(Grammar, DerivativesOfBSquaredMatchEulerianForm) {
    for (int n = 1; n <= kLemma2MaxN; ++n) {
        EXPECT_EQ(lemma2_grammar().derive(var(Var::b, 2), n), lemma2_closed_form(n)) << n;
        EXPECT_TRUE(lemma2_check(n).passed()) << n;
    }
    EXPECT_EQ(lemma2_check(1).id, "grammar-lemma2");
}

TEST(Grammar, SubstitutionRecoversP) {
    for (int n = 1; n <= 6; ++n)
        EXPECT_EQ(to_xyq(lemma1_grammar().derive(var(Var::a), n)),
                  families::p_poly(n, families::PRoute::recurrence))
            << n;
}

TEST(Grammar, MutatedRecurrenceBreaksEulerianForm) {
    families::Recurrences r;
    r.e_same_c += 1;
    EXPECT_FALSE(lemma2_check(3, r).passed());
}
