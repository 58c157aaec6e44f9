#include <gtest/gtest.h>

#include "replab/error.hpp"
#include "replab/rational.hpp"
#include "replab/word.hpp"

using namespace replab;

TEST(Word, ParseAndRender) {
    const Word w = Word::parse("0010111010");
    EXPECT_EQ(w.size(), 10u);
    EXPECT_EQ(w.to_string(), "0010111010");
    EXPECT_EQ(w.alphabet_size(), 2);
    EXPECT_TRUE(Word::parse("").empty());
    EXPECT_EQ(Word::parse("03523", 8).to_string(), "03523");
}

TEST(Word, RejectsSymbolsOutsideAlphabet) {
    try {
        Word::parse("012");
        FAIL() << "expected InvalidSymbol";
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::InvalidSymbol);
    }
    EXPECT_THROW(Word::parse("0a1"), Error);
    EXPECT_THROW(Word(std::vector<Symbol>{0, 3}, 3), Error);
    Word w;
    EXPECT_THROW(w.push_back(2), Error);
}

TEST(Word, ComplementAndFactor) {
    const Word w = Word::parse("0010111010");
    EXPECT_EQ(w.complement().to_string(), "1101000101");
    EXPECT_EQ(w.factor(3, 4).to_string(), "0111");
    EXPECT_EQ(w.prefix(0).to_string(), "");
    EXPECT_EQ((Word::parse("01") + Word::parse("10")).to_string(), "0110");
    EXPECT_LT(Word::parse("0011"), Word::parse("01"));
}

TEST(Rational, LowestTermsAndExactOrdering) {
    EXPECT_EQ(Rational(14, 4), Rational(7, 2));
    EXPECT_EQ(Rational(14, 4).to_string(), "7/2");
    EXPECT_EQ(Rational(2).to_string(), "2/1");
    EXPECT_LT(Rational(7, 3), Rational(5, 2));
    EXPECT_GT(Rational(11, 7), Rational(3, 2));
    // differs from 1/3 only beyond double precision
    EXPECT_GT(Rational(3'000'000'000'000'001ULL, 9'000'000'000'000'000ULL), Rational(1, 3));
    EXPECT_EQ(Rational::parse("5/2"), Rational(5, 2));
    EXPECT_THROW(Rational::parse("5/0"), Error);
    EXPECT_THROW(Rational::parse("x/2"), Error);
}

TEST(ExponentThreshold, Grammar) {
    const auto inf = ExponentThreshold::parse("inf");
    EXPECT_TRUE(inf.is_unbounded());
    EXPECT_FALSE(inf.forbids(1000, 1));

    const auto three = ExponentThreshold::parse("3");
    EXPECT_TRUE(three.inclusive());
    EXPECT_EQ(*three.bound(), Rational(3));

    const auto three_plus = ExponentThreshold::parse("3+");
    EXPECT_FALSE(three_plus.inclusive());

    const auto five_halves = ExponentThreshold::parse("5/2+");
    EXPECT_EQ(*five_halves.bound(), Rational(5, 2));
    EXPECT_FALSE(five_halves.inclusive());

    for (const char* text : {"inf", "3", "3+", "5/2", "5/2+", "7/3+"}) {
        EXPECT_EQ(ExponentThreshold::parse(text).to_string(), text);
    }
}

TEST(ExponentThreshold, RejectsBoundsAtMostOne) {
    for (const char* text : {"1", "1+", "1/2", "2/2+", "0"}) {
        try {
            ExponentThreshold::parse(text);
            FAIL() << text;
        } catch (const Error& e) {
            EXPECT_EQ(e.code(), ErrorCode::InvalidSpec) << text;
        }
    }
    for (const char* text : {"", "+", "abc", "3++", "5/", "/2", "-3"}) {
        EXPECT_THROW(ExponentThreshold::parse(text), Error) << text;
    }
}

TEST(ExponentThreshold, InclusiveVersusExclusiveBoundary) {
    const auto incl = ExponentThreshold::parse("3");
    const auto excl = ExponentThreshold::parse("3+");
    EXPECT_TRUE(incl.forbids(3, 1));
    EXPECT_FALSE(excl.forbids(3, 1));
    EXPECT_TRUE(excl.forbids(7, 2));

    // shortest forbidden length for each period matches a direct search
    for (const char* text : {"3", "3+", "5/2", "5/2+", "7/3", "7/3+"}) {
        const auto t = ExponentThreshold::parse(text);
        for (std::uint64_t p = 1; p <= 40; ++p) {
            std::uint64_t len = 1;
            while (!t.forbids(len, p)) ++len;
            EXPECT_EQ(*t.shortest_forbidden_length(p), len) << text << " p=" << p;
        }
    }
}
