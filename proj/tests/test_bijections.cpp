#include "combi/bijections.hpp"
#include "combi/errors.hpp"
#include "combi/objects/object.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace combi;
using namespace combi::bijections;
using namespace combi::objects;

namespace {

std::string phi_text(const std::string& w) { return encode(phi_map(parse_decorated(w))); }
std::string psi_text(const std::string& w) { return encode(psi_map(parse_signed_permutation(w))); }

int el(const PerfectMatching& m) { return stats(m).el; }
int ol(const PerfectMatching& m) { return stats(m).ol; }

}  // namespace

TEST(Triple, EncodingRoundTrip) {
    const std::string text = "[(1,3)(2,4)] [(1,2)] {1,3}";
    const auto t = parse_triple(text);
    EXPECT_EQ(t.k(), 2);
    EXPECT_EQ(t.n(), 3);
    EXPECT_EQ(encode(t), text);
    EXPECT_EQ(encode(parse_triple("[] [(1,2)] {}")), "[] [(1,2)] {}");
    EXPECT_THROW(parse_triple("[(1,2)] [] {1,2}"), ParseError);
    EXPECT_THROW(parse_triple("(1,2) [] {1}"), ParseError);
}

TEST(Phi, BaseCases) {
    EXPECT_EQ(phi_text("1"), "[] [(1,2)] {}");
    EXPECT_EQ(phi_text("1h"), "[(1,2)] [] {1}");
    EXPECT_EQ(phi_text("1 2"), "[] [(1,2)(3,4)] {}");
    EXPECT_EQ(phi_text("2 1"), "[] [(1,3)(2,4)] {}");
    EXPECT_EQ(phi_text("2c 1"), "[] [(1,4)(2,3)] {}");
    EXPECT_EQ(phi_text("1h 2"), "[(1,2)] [(1,2)] {1}");
    EXPECT_EQ(phi_text("1 2h"), "[(1,2)] [(1,2)] {2}");
    EXPECT_EQ(phi_text("1h 2h"), "[(1,2)(3,4)] [] {1,2}");
    EXPECT_EQ(phi_text("2h 1h"), "[(1,3)(2,4)] [] {1,2}");
    EXPECT_EQ(phi_text("2hc 1h"), "[(1,4)(2,3)] [] {1,2}");
}

TEST(Phi, SixLetterExample) {
    EXPECT_EQ(phi_text("3h 1h 4 2 6hc 5h"), "[(1,3)(2,4)(5,8)(6,7)] [(1,3)(2,4)] {1,3,5,6}");
}

TEST(Psi, BaseCases) {
    EXPECT_EQ(psi_text("1"), "[] [(1,2)] {}");
    EXPECT_EQ(psi_text("-1"), "[(1,2)] [] {1}");
    EXPECT_EQ(psi_text("1 2"), "[] [(1,2)(3,4)] {}");
    EXPECT_EQ(psi_text("2 1"), "[] [(1,3)(2,4)] {}");
    EXPECT_EQ(psi_text("-2 1"), "[] [(1,4)(2,3)] {}");
    EXPECT_EQ(psi_text("-1 2"), "[(1,2)] [(1,2)] {1}");
    EXPECT_EQ(psi_text("1 -2"), "[(1,2)] [(1,2)] {2}");
    EXPECT_EQ(psi_text("-1 -2"), "[(1,2)(3,4)] [] {1,2}");
    EXPECT_EQ(psi_text("2 -1"), "[(1,3)(2,4)] [] {1,2}");
    EXPECT_EQ(psi_text("-2 -1"), "[(1,4)(2,3)] [] {1,2}");
}

TEST(Psi, InsertionChainOfSevenLetterExample) {
    EXPECT_EQ(psi_text("-1"), "[(1,2)] [] {1}");
    EXPECT_EQ(psi_text("-1 2"), "[(1,2)] [(1,2)] {1}");
    EXPECT_EQ(psi_text("-3 -1 2"), "[(1,4)(2,3)] [(1,2)] {1,3}");
    EXPECT_EQ(psi_text("-3 -1 4 2"), "[(1,4)(2,3)] [(1,3)(2,4)] {1,3}");
    EXPECT_EQ(psi_text("-3 -1 4 2 -5"), "[(1,4)(2,3)(5,6)] [(1,3)(2,4)] {1,3,5}");
    // The last two insertions split (5,6) and never touch the blocks on 1..4.
    EXPECT_EQ(psi_text("-3 -1 4 2 -6 -5"), "[(1,4)(2,3)(5,8)(6,7)] [(1,3)(2,4)] {1,3,5,6}");
    EXPECT_EQ(psi_text("-3 -1 4 2 -6 7 -5"), "[(1,4)(2,3)(5,8)(6,9)(7,10)] [(1,3)(2,4)] {1,3,5,6,7}");
}

TEST(Phi, ExhaustiveBijectionProperties) {
    for (int n = 1; n <= 5; ++n) {
        std::set<std::string> images;
        long long total = 0;
        generate(ObjectClass::decorated, n, std::nullopt, [&](const CombObject& o) {
            const auto& w = std::get<DecoratedPermutation>(o);
            const auto t = phi_map(w);
            const auto s = stats(w);
            ASSERT_TRUE(validate(t));
            ASSERT_EQ(t.n(), n);
            ASSERT_EQ(t.k(), s.hat);
            ASSERT_EQ(std::vector<int>(t.index_set.begin(), t.index_set.end()), s.hat_values);
            ASSERT_EQ(el(t.first) + el(t.second), s.asc) << encode(w);
            images.insert(encode(t));
            ++total;
        });
        EXPECT_EQ(static_cast<long long>(images.size()), total) << n;
        Integer expected = 0;
        for (int k = 0; k <= n; ++k) expected += image_size(n, k);
        EXPECT_EQ(expected, Integer(static_cast<long>(total))) << n;
    }
}

TEST(Psi, ExhaustiveBijectionProperties) {
    for (int n = 1; n <= 5; ++n) {
        std::set<std::string> images;
        long long total = 0;
        generate(ObjectClass::signed_permutation, n, std::nullopt, [&](const CombObject& o) {
            const auto& pi = std::get<SignedPermutation>(o);
            const auto t = psi_map(pi);
            const auto s = stats(pi);
            ASSERT_TRUE(validate(t));
            ASSERT_EQ(t.k(), s.bar);
            ASSERT_EQ(std::vector<int>(t.index_set.begin(), t.index_set.end()), s.bar_set);
            ASSERT_EQ(el(t.first) + ol(t.second), s.des_b) << encode(pi);
            images.insert(encode(t));
            ++total;
        });
        EXPECT_EQ(static_cast<long long>(images.size()), total) << n;
    }
}

TEST(Harness, ReportsOkAndWeights) {
    for (auto map : {MapId::phi, MapId::psi}) {
        for (int n = 1; n <= 5; ++n) {
            const auto r = verify_bijection(map, n);
            EXPECT_TRUE(r.ok()) << n;
            EXPECT_FALSE(r.counterexample.has_value());
            EXPECT_EQ(r.weight_by_k.size(), static_cast<std::size_t>(n) + 1);
        }
    }
    EXPECT_EQ(verify_bijection(MapId::phi, 3).domain_size, 48);
}

TEST(Harness, Bounds) {
    EXPECT_THROW(verify_bijection(MapId::phi, 0), std::out_of_range);
    EXPECT_THROW(verify_bijection(MapId::psi, kMaxBijectionN + 1), CapacityError);
    EXPECT_THROW(phi_map(DecoratedPermutation{{{1, false, true}}}), std::invalid_argument);
    EXPECT_THROW(psi_map(SignedPermutation{{1, 1}}), std::invalid_argument);
}

TEST(Harness, ImageSizes) {
    EXPECT_EQ(image_size(2, 0), 3);
    EXPECT_EQ(image_size(2, 1), 2);
    EXPECT_EQ(image_size(4, 2), 6 * 3 * 3);
}
