#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>

#include "oracles.hpp"
#include "replab/enumeration.hpp"
#include "replab/error.hpp"
#include "replab/reference.hpp"

using namespace replab;

namespace {

AvoidanceSpec spec(std::size_t l, const char* power) {
    return AvoidanceSpec(l, ExponentThreshold::parse(power));
}

bool contains(const ForbiddenSet& set, const char* word) {
    const auto& words = set.words();
    return std::find(words.begin(), words.end(), Word::parse(word)) != words.end();
}

bool is_factor(const Word& small, const Word& big) {
    return big.to_string().find(small.to_string()) != std::string::npos;
}

}  // namespace

TEST(CountAvoiding, ReferenceColumns) {
    for (const auto& column : reference::count_columns()) {
        const auto table = count_avoiding(spec(column.l, column.power), 25);
        EXPECT_EQ(table.counts, column.values) << column.name;
    }
}

TEST(CountAvoiding, Examples) {
    EXPECT_EQ(count_avoiding(spec(3, "3+"), 25).counts[25], 64584u);
    EXPECT_EQ(count_avoiding(spec(4, "5/2+"), 5).counts[5], 16u);
    EXPECT_EQ(count_avoiding(spec(7, "7/3+"), 4).counts[4], 10u);
}

TEST(CountAvoiding, MatchesBruteForce) {
    for (const auto& s : {spec(3, "3+"), spec(4, "5/2+"), spec(7, "7/3+"), spec(3, "3"),
                          spec(1, "5/2+")}) {
        EXPECT_EQ(count_avoiding(s, 14).counts, oracle::brute_counts(s, 14)) << s.to_string();
    }
}

TEST(CountAvoiding, TableInvariants) {
    for (const auto& s : {spec(3, "3+"), spec(4, "5/2+"), spec(7, "7/3+")}) {
        const auto counts = count_avoiding(s, 25, 2).counts;
        EXPECT_EQ(counts, count_avoiding(s, 25).counts);
        EXPECT_EQ(counts[0], 1u);
        for (std::size_t n = 1; n < counts.size(); ++n) {
            EXPECT_EQ(counts[n] % 2, 0u);
            EXPECT_LE(counts[n], 2 * counts[n - 1]);
        }
    }
}

TEST(MinimalForbidden, ContainsShortViolators) {
    const auto four = minimal_forbidden(spec(3, "3+"), 4);
    EXPECT_TRUE(contains(four, "0000"));
    EXPECT_TRUE(contains(four, "1111"));
    const auto seven = minimal_forbidden(spec(3, "3+"), 7);
    EXPECT_TRUE(contains(seven, "0101010"));
    EXPECT_TRUE(contains(seven, "1010101"));
    EXPECT_FALSE(contains(seven, "00000"));
}

TEST(MinimalForbidden, MatchesDefinitionByBruteForce) {
    for (const auto& s : {spec(3, "3+"), spec(4, "5/2+"), spec(7, "7/3+"), spec(2, "inf")}) {
        const auto set = minimal_forbidden(s, 12);
        std::vector<Word> expected;
        for (std::size_t n = 1; n <= 12; ++n) {
            for (const auto& w : oracle::all_binary(n)) {
                if (oracle::brute_avoids(w, s)) continue;
                const std::vector<Symbol> head(w.begin(), w.end() - 1);
                const std::vector<Symbol> tail(w.begin() + 1, w.end());
                if (oracle::brute_avoids(head, s) && oracle::brute_avoids(tail, s)) {
                    expected.emplace_back(w, 2);
                }
            }
        }
        EXPECT_EQ(set.words(), expected) << s.to_string();
    }
}

TEST(MinimalForbidden, AntichainAndComplementClosed) {
    for (const auto& s : {spec(3, "3+"), spec(4, "5/2+"), spec(7, "7/3+")}) {
        const auto set = minimal_forbidden(s, 16);
        const auto& words = set.words();
        for (std::size_t i = 0; i < words.size(); ++i) {
            EXPECT_TRUE(std::find(words.begin(), words.end(), words[i].complement()) != words.end());
            for (std::size_t j = 0; j < words.size(); ++j) {
                if (i != j) EXPECT_FALSE(is_factor(words[i], words[j]));
            }
        }
        EXPECT_EQ(set.complement_classes() * 2, set.size());
    }
}

TEST(MinimalForbidden, KnownCardinalities) {
    EXPECT_EQ(minimal_forbidden(spec(3, "3+"), 12).size(), 62u);
    EXPECT_EQ(minimal_forbidden(spec(4, "5/2+"), 20).size(), 54u);
    EXPECT_EQ(minimal_forbidden(spec(7, "7/3+"), 20).size(), 58u);
}

TEST(GrowthUpper, TribonacciCase) {
    const auto set = ForbiddenSet::from_words({Word::parse("0000"), Word::parse("1111")});
    const auto g = growth_upper(set);
    EXPECT_NEAR(g.value, oracle::tribonacci_constant(), 1e-9);
    EXPECT_LT(g.value, 1.84);
    EXPECT_LE(g.lower, g.value);
    EXPECT_GE(g.upper, g.value);
    EXPECT_LT(g.upper - g.lower, 1e-8);
    EXPECT_EQ(g.kind, GrowthKind::UpperAutomaton);
    EXPECT_EQ(g.state_count, 8u);  // every word of length 3

    const std::vector<std::uint64_t> coeffs = {1, 1, 1};
    EXPECT_NEAR(growth_recurrence(coeffs).value, oracle::tribonacci_constant(), 1e-9);
}

TEST(GrowthUpper, EverythingForbidden) {
    const auto set = ForbiddenSet::from_words({Word::parse("0"), Word::parse("1")});
    EXPECT_EQ(growth_upper(set).value, 0.0);
    const auto dead = ForbiddenSet::from_words({Word::parse("00"), Word::parse("11"),
                                                Word::parse("010"), Word::parse("101")});
    EXPECT_EQ(growth_upper(dead).value, 0.0);
}

TEST(GrowthUpper, PolynomialGrowthHasRadiusOne) {
    // words avoiding 01 are 1^a 0^b: linear growth, spectral radius 1
    const auto set = ForbiddenSet::from_words({Word::parse("01")});
    EXPECT_NEAR(growth_upper(set).value, 1.0, 1e-9);
}

TEST(GrowthUpper, ReferenceDominantZeros) {
    for (const auto& t : reference::growth_targets()) {
        const auto g = growth_upper(minimal_forbidden(spec(t.l, t.power), t.max_len));
        EXPECT_NEAR(g.value, t.dominant_zero, 1e-2);
    }
}

TEST(GrowthUpper, MonotoneUnderRefinement) {
    const auto s = spec(3, "3+");
    double previous = 2.0;
    for (std::size_t len : {4u, 8u, 12u}) {
        const double value = growth_upper(minimal_forbidden(s, len)).value;
        EXPECT_LE(value, previous + 1e-12) << len;
        previous = value;
    }
}

TEST(GrowthLower, MorphismWidths) {
    EXPECT_NEAR(growth_lower_from_morphism(10).value, std::pow(1.109999, 0.1), 1e-12);
    EXPECT_NEAR(growth_lower_from_morphism(1560).value, 1.000066899, 1e-6);
    EXPECT_NEAR(growth_lower_from_morphism(252).value, 1.0004142, 1e-6);
    EXPECT_GT(growth_lower_from_morphism(10).value, 1.01);
    EXPECT_EQ(growth_lower_from_morphism(10).kind, GrowthKind::LowerMorphism);
}

TEST(AutomatonCounts, EmptySetCountsEverything) {
    const auto counts = automaton_counts(ForbiddenSet(), 20).counts;
    for (std::size_t n = 0; n <= 20; ++n) EXPECT_EQ(counts[n], std::uint64_t{1} << n);
}

TEST(AutomatonCounts, TribonacciRecurrence) {
    const auto set = ForbiddenSet::from_words({Word::parse("0000"), Word::parse("1111")});
    const auto counts = automaton_counts(set, 40).counts;
    for (std::size_t n = 4; n <= 40; ++n) {
        EXPECT_EQ(counts[n], counts[n - 1] + counts[n - 2] + counts[n - 3]) << n;
    }
}

TEST(AutomatonCounts, Sandwich) {
    struct Case {
        AvoidanceSpec s;
        std::size_t cap;
    };
    for (const auto& c : {Case{spec(3, "3+"), 12}, Case{spec(4, "5/2+"), 20},
                          Case{spec(7, "7/3+"), 20}}) {
        const auto exact = count_avoiding(c.s, 25).counts;
        const auto upper = automaton_counts(minimal_forbidden(c.s, c.cap), 25).counts;
        for (std::size_t n = 0; n <= 25; ++n) {
            EXPECT_GE(upper[n], exact[n]) << n;
            if (n <= c.cap) EXPECT_EQ(upper[n], exact[n]) << n;
        }
    }
}

TEST(AutomatonCounts, Overflow) {
    try {
        automaton_counts(ForbiddenSet(), 70);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::Overflow);
    }
}

TEST(ForbiddenSet, ParseAndRender) {
    const auto set = ForbiddenSet::parse_lines("1111\n0000,0101010\n\n");
    ASSERT_EQ(set.size(), 3u);
    EXPECT_EQ(set.to_lines(), "0000\n1111\n0101010\n");
    EXPECT_EQ(set.max_len(), 7u);
    EXPECT_THROW(ForbiddenSet::parse_lines("0102"), Error);
}
