#include "combi/errors.hpp"
#include "combi/objects/object.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <set>

using namespace combi;
using namespace combi::objects;

namespace {

std::vector<std::string> generated(ObjectClass c, int n, std::optional<std::vector<int>> bounds = std::nullopt) {
    std::vector<std::string> out;
    generate(c, n, bounds, [&](const CombObject& o) { out.push_back(encode(o)); });
    return out;
}

std::set<std::string> as_set(const std::vector<std::string>& v) { return {v.begin(), v.end()}; }

bool brute_is_stirling(const std::vector<int>& w) {
    for (std::size_t i = 0; i < w.size(); ++i)
        for (std::size_t j = i + 1; j < w.size(); ++j)
            if (w[i] == w[j])
                for (std::size_t k = i + 1; k < j; ++k)
                    if (w[k] < w[i]) return false;
    return true;
}

// Every Stirling word of order n, by filtering multiset permutations.
std::set<std::string> brute_stirling(int n) {
    std::vector<int> w;
    for (int v = 1; v <= n; ++v) w.insert(w.end(), {v, v});
    std::set<std::string> out;
    do {
        if (brute_is_stirling(w)) out.insert(encode(StirlingWord{w}));
    } while (std::next_permutation(w.begin(), w.end()));
    return out;
}

// Every perfect matching of [2n], by pairing consecutive positions of all permutations.
std::set<std::string> brute_matchings(int n) {
    std::vector<int> p(static_cast<std::size_t>(2 * n));
    std::iota(p.begin(), p.end(), 1);
    std::set<std::string> out;
    do {
        PerfectMatching m;
        for (int i = 0; i < n; ++i) {
            int a = p[static_cast<std::size_t>(2 * i)], b = p[static_cast<std::size_t>(2 * i + 1)];
            m.blocks.emplace_back(std::min(a, b), std::max(a, b));
        }
        std::sort(m.blocks.begin(), m.blocks.end());
        out.insert(encode(m));
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

}  // namespace

TEST(Generate, CountsMatchClosedForms) {
    for (int n = 1; n <= 6; ++n) {
        for (auto c : {ObjectClass::permutation, ObjectClass::signed_permutation, ObjectClass::matching,
                       ObjectClass::stirling, ObjectClass::stirling2, ObjectClass::decorated}) {
            const auto all = generated(c, n);
            ASSERT_EQ(all.size(), expected_count(c, n).get_ui()) << class_name(c) << " n=" << n;
            ASSERT_EQ(as_set(all).size(), all.size()) << "duplicates in " << class_name(c);
        }
    }
    EXPECT_EQ(expected_count(ObjectClass::permutation, 5), 120);
    EXPECT_EQ(expected_count(ObjectClass::signed_permutation, 3), 48);
    EXPECT_EQ(expected_count(ObjectClass::matching, 4), 105);
    EXPECT_EQ(expected_count(ObjectClass::decorated, 3), 48);
    EXPECT_EQ(expected_count(ObjectClass::inversion, 3, std::vector<int>{2, 4, 6}), 48);
}

TEST(Generate, StirlingWordsAgreeWithBruteForce) {
    for (int n = 1; n <= 4; ++n) EXPECT_EQ(as_set(generated(ObjectClass::stirling, n)), brute_stirling(n));
}

TEST(Generate, MatchingsAgreeWithBruteForce) {
    for (int n = 1; n <= 4; ++n) EXPECT_EQ(as_set(generated(ObjectClass::matching, n)), brute_matchings(n));
}

TEST(Generate, CycleStirlingSmallCasesMatchListings) {
    const std::set<std::string> two = {"(1 1)(2 2)", "(1 1 2 2)", "(1 2 2 1)"};
    EXPECT_EQ(as_set(generated(ObjectClass::stirling2, 2)), two);

    const std::vector<std::string> listing = {
        "(11)(22)(33)", "(11)(2233)", "(11)(2332)", "(1133)(22)", "(1331)(22)", "(1122)(33)", "(112233)",
        "(112332)",     "(113322)",   "(133122)",   "(1221)(33)", "(122133)",   "(122331)",   "(123321)",
        "(133221)"};
    std::set<std::string> expected;
    for (const auto& compact : listing) {
        std::string spaced;
        for (std::size_t i = 0; i < compact.size(); ++i) {
            spaced += compact[i];
            if (std::isdigit(static_cast<unsigned char>(compact[i])) && i + 1 < compact.size() &&
                std::isdigit(static_cast<unsigned char>(compact[i + 1])))
                spaced += ' ';
        }
        expected.insert(spaced);
    }
    EXPECT_EQ(expected.size(), 15u);
    EXPECT_EQ(as_set(generated(ObjectClass::stirling2, 3)), expected);
}

TEST(Generate, DecoratedOfOrderTwo) {
    const std::set<std::string> expected = {"1 2", "1 2h", "1h 2", "1h 2h", "2 1", "2c 1", "2h 1h", "2hc 1h"};
    EXPECT_EQ(as_set(generated(ObjectClass::decorated, 2)), expected);
}

TEST(Generate, InversionSequencesAreTheBox) {
    const std::vector<int> s{1, 3, 2};
    const auto all = generated(ObjectClass::inversion, 3, s);
    EXPECT_EQ(all.size(), 6u);
    generate(ObjectClass::inversion, 3, s, [](const CombObject& o) {
        const auto& e = std::get<InversionSequence>(o);
        for (std::size_t i = 0; i < e.values.size(); ++i) EXPECT_LT(e.values[i], e.bounds[i]);
    });
}

TEST(Generate, IsDeterministic) {
    for (auto c : {ObjectClass::signed_permutation, ObjectClass::stirling2, ObjectClass::decorated})
        EXPECT_EQ(generated(c, 4), generated(c, 4));
}

TEST(Generate, RejectsBadArguments) {
    auto noop = [](const CombObject&) {};
    EXPECT_THROW(generate(ObjectClass::permutation, 0, std::nullopt, noop), std::out_of_range);
    EXPECT_THROW(generate(ObjectClass::inversion, 2, std::nullopt, noop), UsageError);
    EXPECT_THROW(generate(ObjectClass::inversion, 2, std::vector<int>{1, 2, 3}, noop), UsageError);
}

TEST(Encoding, RoundTripsForEveryClass) {
    for (auto c : {ObjectClass::permutation, ObjectClass::signed_permutation, ObjectClass::matching,
                   ObjectClass::stirling, ObjectClass::stirling2, ObjectClass::decorated}) {
        generate(c, 4, std::nullopt, [&](const CombObject& o) {
            ASSERT_TRUE(validate(o));
            const CombObject back = parse_object(c, encode(o));
            ASSERT_EQ(back, o);
            ASSERT_EQ(class_of(back), c);
        });
    }
    generate(ObjectClass::inversion, 3, std::vector<int>{2, 4, 6}, [](const CombObject& o) {
        ASSERT_EQ(parse_object(ObjectClass::inversion, encode(o)), o);
    });
}

TEST(Encoding, MalformedTextIsAParseError) {
    EXPECT_THROW(parse_object(ObjectClass::decorated, "3^ 1"), ParseError);
    EXPECT_THROW(parse_object(ObjectClass::matching, "(1,2"), ParseError);
    EXPECT_THROW(parse_object(ObjectClass::permutation, "1 x"), ParseError);
}

TEST(Encoding, ClassNamesRoundTrip) {
    for (auto c : {ObjectClass::permutation, ObjectClass::signed_permutation, ObjectClass::matching,
                   ObjectClass::stirling, ObjectClass::stirling2, ObjectClass::decorated, ObjectClass::inversion})
        EXPECT_EQ(parse_class(class_name(c)), c);
    EXPECT_FALSE(parse_class("tableau").has_value());
}

TEST(Validate, RejectsBrokenObjects) {
    EXPECT_FALSE(validate(StirlingWord{{1, 2, 1, 2}}));
    EXPECT_TRUE(validate(CycleStirling{{{1, 2, 2, 1}, {3, 3}}}));
    EXPECT_FALSE(validate(CycleStirling{{{3, 3}, {1, 2, 2, 1}}}));
    EXPECT_FALSE(validate(CycleStirling{{{1, 2, 1, 2}}}));
    EXPECT_FALSE(validate(Permutation{{1, 1}}));
    EXPECT_FALSE(validate(PerfectMatching{{{1, 3}, {2, 2}}}));
    EXPECT_FALSE(validate(parse_decorated("1 2c")));
    EXPECT_FALSE(validate(parse_decorated("3h 1h 4 2 6hc 5hc")));
    EXPECT_TRUE(validate(parse_decorated("3h 1h 4 2 6hc 5h")));
}

TEST(Statistics, MatchingMarkedBlocks) {
    EXPECT_EQ(stats(parse_matching("(1,2)(3,4)")).el, 2);
    EXPECT_EQ(stats(parse_matching("(1,2)(3,4)")).ol, 0);
    for (auto text : {"(1,3)(2,4)", "(1,4)(2,3)"}) {
        EXPECT_EQ(stats(parse_matching(text)).el, 1);
        EXPECT_EQ(stats(parse_matching(text)).ol, 1);
    }
}

TEST(Statistics, StirlingWords) {
    EXPECT_EQ(stats(parse_stirling_word("4 4 2 2 3 3 1 1")).desi, 3);
    EXPECT_EQ(stats(parse_stirling_word("1 1 3 3 2 2")).desi, 1);
    EXPECT_EQ(stats(parse_stirling_word("2 2 1 1 3 3")).ap, 2);
    EXPECT_EQ(stats(parse_stirling_word("1 1 2 2")).descents, 1);
    EXPECT_EQ(stats(parse_stirling_word("2 2 1 1")).descents, 2);
}

TEST(Statistics, CycleStirling) {
    const auto s = stats(parse_cycle_stirling("(1 2 2 1)(3 3)"));
    EXPECT_EQ(s, (CycleStirlingStats{.cplat = 2, .casc = 1, .cap = 1, .cyc = 2, .fix = 1}));
    const auto t = stats(parse_cycle_stirling("(1 1)(2 2)"));
    EXPECT_EQ(t.cap, 0);
    EXPECT_EQ(t.cyc, 2);
    EXPECT_EQ(t.fix, 2);
    EXPECT_EQ(stats(parse_cycle_stirling("(1 1 3 3)(2 2)")).fix, 1);
}

TEST(Statistics, SignedBlocksAndBars) {
    const auto s = stats(parse_signed_permutation("-3 -1 4 2 -6 7 -5"));
    EXPECT_EQ(s.bar, 5);
    EXPECT_EQ(s.bar_set, (std::vector<int>{1, 3, 5, 6, 7}));
    EXPECT_EQ(s.nbar_set, (std::vector<int>{2, 4}));
    EXPECT_EQ(s.blocks, (std::vector<std::vector<int>>{{-3, -1}, {4, 2}, {-6, 7, -5}}));
    EXPECT_EQ(s.rlmin, 3);
    const auto id = stats(parse_signed_permutation("1 2 3 4"));
    EXPECT_EQ(id.des_b, 0);
    EXPECT_EQ(id.rlmin, 4);
    EXPECT_EQ(id.bar, 0);
    EXPECT_EQ(des_b(parse_signed_permutation("-1")), 1);
}

TEST(Statistics, DecoratedHatsAndAscents) {
    const auto w = parse_decorated("5hc 3h 1h 4 2");
    const auto s = stats(w);
    EXPECT_EQ(s.hat, 3);
    EXPECT_EQ(s.hat_values, (std::vector<int>{1, 3, 5}));
    EXPECT_EQ(s.asc, 2);
    EXPECT_EQ(underlying(parse_decorated("3h 1h 4c 2")), (Permutation{{3, 1, 4, 2}}));
}

TEST(Statistics, PermutationsAgainstDirectCounts) {
    std::vector<int> w{1, 2, 3, 4, 5};
    do {
        const Permutation p{w};
        int des = 0, excedances = 0;
        for (std::size_t i = 0; i + 1 < w.size(); ++i) des += w[i] > w[i + 1];
        for (std::size_t i = 0; i < w.size(); ++i) excedances += w[i] > static_cast<int>(i) + 1;
        ASSERT_EQ(des_a(p), des);
        ASSERT_EQ(asc(p), static_cast<int>(w.size()) - 1 - des);
        ASSERT_EQ(exc(p), excedances);
    } while (std::next_permutation(w.begin(), w.end()));
}

TEST(Statistics, InversionSequenceAscents) {
    EXPECT_EQ(asc(parse_inversion_sequence("0 0 0 | s = 1 2 3")), 0);
    // e_1 > 0 contributes the leading ascent.
    EXPECT_EQ(asc(parse_inversion_sequence("1 0 | s = 2 4")), 1);
}

TEST(PairedInvolutions, SmallCounts) {
    EXPECT_EQ(count_paired_excedance_involutions(1), 2);
    EXPECT_EQ(count_paired_excedance_involutions(2), 28);
    EXPECT_THROW(count_paired_excedance_involutions(kMaxPairedInvolutionN + 1), CapacityError);
}
