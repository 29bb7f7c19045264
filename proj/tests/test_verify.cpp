#include "combi/errors.hpp"
#include "combi/verify.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace combi;
using namespace combi::verify;

TEST(Registry, ContainsEveryIdentity) {
    const std::vector<std::string> expected = {
        "A-via-invseq",      "B-via-invseq",     "M-via-invseq",     "N-el-enum",        "M-ol-enum",
        "M-reverse-N",       "eq-1-3",           "eq-1-4",           "eq-1-3-refined-k", "eq-1-4-refined-k",
        "N2-equals-A2z",     "phi-bijection",    "psi-bijection",    "C-descents",       "ap-equals-el",
        "cplat-casc-C",      "Q-recurrence-enum", "Q-gf",            "cyc-closed-form",  "desi-equals-cyc",
        "Y-cyclic",          "P-three-routes",   "P-gf",             "grammar-lemma1",   "grammar-lemma2",
        "R-recurrence-enum", "R-binomial-shift", "qn-egf",           "S2-equals-d2z",    "R-palindromic",
        "R-real-rooted",     "h-series-vs-enum", "h-involutions",    "rlmin-closed-form", "fiber-2n"};
    std::vector<std::string> ids;
    for (const auto& c : registry()) {
        ids.push_back(c.id);
        EXPECT_FALSE(c.statement.empty()) << c.id;
        EXPECT_FALSE(c.routes.empty()) << c.id;
        EXPECT_LE(c.min_n, c.default_max_n) << c.id;
        EXPECT_LE(c.default_max_n, c.capacity) << c.id;
    }
    EXPECT_EQ(ids, expected);
    EXPECT_NE(find_check("eq-1-3"), nullptr);
    EXPECT_EQ(find_check("no-such-check"), nullptr);
}

TEST(RunCheck, PassesAndBoundaries) {
    const auto r = run_check("ap-equals-el", 3);
    EXPECT_EQ(r.status, CheckStatus::pass);
    EXPECT_EQ(r.id, "ap-equals-el");
    EXPECT_EQ(r.n, 3);
    EXPECT_THROW(run_check("no-such-check", 1), UsageError);
    EXPECT_THROW(run_check("phi-bijection", 0), std::out_of_range);
    const auto* phi = find_check("phi-bijection");
    ASSERT_NE(phi, nullptr);
    EXPECT_EQ(run_check("phi-bijection", phi->capacity + 1).status, CheckStatus::skipped_capacity);
    EXPECT_EQ(status_name(CheckStatus::skipped_capacity), "skipped-capacity");
}

TEST(RunCheck, FailureCarriesBothSides) {
    Context ctx;
    ctx.recurrences.n_prev_c += 1;
    const auto r = run_check("N-el-enum", 3, ctx);
    EXPECT_EQ(r.status, CheckStatus::fail);
    EXPECT_FALSE(r.lhs.empty());
    EXPECT_FALSE(r.rhs.empty());
    EXPECT_NE(r.lhs, r.rhs);
}

TEST(RunRange, CoversMinToMax) {
    const auto reports = run_range("eq-1-3", 6);
    ASSERT_EQ(reports.size(), 7u);
    for (int n = 0; n <= 6; ++n) {
        EXPECT_EQ(reports[static_cast<std::size_t>(n)].n, n);
        EXPECT_TRUE(reports[static_cast<std::size_t>(n)].passed());
    }
}

TEST(RunAll, DefaultSuitePasses) {
    const auto reports = run_all();
    EXPECT_TRUE(all_passed(reports));
    std::set<std::string> ids;
    for (const auto& r : reports) {
        EXPECT_TRUE(r.passed()) << r.id << " n=" << r.n << " " << r.detail << "\n" << r.lhs << "\n" << r.rhs;
        ids.insert(r.id);
    }
    EXPECT_GE(ids.size(), 22u);
    EXPECT_EQ(ids.size(), registry().size());
}

TEST(RunAll, OverridesAndDeterminism) {
    const auto capped = run_all({{"*", 3}});
    for (const auto& r : capped) EXPECT_LE(r.n, 3);
    const auto again = run_all({{"*", 3}});
    ASSERT_EQ(capped.size(), again.size());
    for (std::size_t i = 0; i < capped.size(); ++i) {
        EXPECT_EQ(capped[i].id, again[i].id);
        EXPECT_EQ(capped[i].n, again[i].n);
        EXPECT_EQ(capped[i].status, again[i].status);
    }
    const auto one = run_all({{"*", 2}, {"qn-egf", 9}});
    int qn_max = 0;
    for (const auto& r : one)
        if (r.id == "qn-egf") qn_max = std::max(qn_max, r.n);
    EXPECT_EQ(qn_max, 9);
    EXPECT_EQ(run_all({}).size(), run_all().size());
}

TEST(RunAll, EveryRecurrenceMutationIsCaught) {
    const auto fields = families::Recurrences{}.fields();
    for (std::size_t i = 0; i < fields.size(); ++i) {
        Context ctx;
        *ctx.recurrences.fields()[i].second += 1;
        EXPECT_FALSE(all_passed(run_all({{"*", 5}}, ctx))) << fields[i].first;
    }
}
