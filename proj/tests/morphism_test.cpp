#include <gtest/gtest.h>

#include <fstream>
#include <random>
#include <sstream>

#include "oracles.hpp"
#include "replab/error.hpp"
#include "replab/morphism.hpp"
#include "replab/registry.hpp"

using namespace replab;

namespace {

AvoidanceSpec spec(std::size_t l, const char* power) {
    return AvoidanceSpec(l, ExponentThreshold::parse(power));
}

const UniformMorphism& get(std::string_view name) {
    return MorphismRegistry::builtin().find(name);
}

Word random_word(std::mt19937_64& rng, std::size_t max_len, int alphabet) {
    std::uniform_int_distribution<std::size_t> len_dist(0, max_len);
    std::uniform_int_distribution<int> sym(0, alphabet - 1);
    std::vector<Symbol> s(len_dist(rng));
    for (auto& x : s) x = static_cast<Symbol>(sym(rng));
    return Word(std::move(s), alphabet);
}

bool passes_all_checks(const UniformMorphism& m, const AvoidanceSpec& s) {
    return check_distinct(m).empty() && check_inclusion(m).empty() &&
           check_interchange(m).empty() && check_images_avoid(m, s, 5).ok();
}

std::vector<Symbol> symbols_of(const Word& w) { return {w.symbols().begin(), w.symbols().end()}; }

}  // namespace

TEST(Apply, Examples) {
    EXPECT_EQ(apply(get("f"), Word::parse("0", 3)).to_string(), "0010111010");
    EXPECT_EQ(apply(get("f"), Word(3)).to_string(), "");
    EXPECT_EQ(apply(get("g3"), Word::parse("2", 3)).to_string(), "021013");
    EXPECT_EQ(apply(get("f"), Word::parse("2", 3)).to_string(), "0011101010");
    try {
        apply(get("f"), Word::parse("3", 4));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::InvalidSymbol);
    }
}

TEST(Compose, Widths) {
    EXPECT_EQ(compose(get("h1"), get("h2")).width(), 252u);
    EXPECT_EQ(compose(get("g1"), compose(get("g2"), get("g3"))).width(), 1560u);
    EXPECT_EQ(get("g").width(), 1560u);
    EXPECT_EQ(get("h").width(), 252u);
    EXPECT_EQ(get("g").source_alphabet(), 3);
    EXPECT_EQ(get("h").target_alphabet(), 2);
}

TEST(Compose, IdentityIsNeutral) {
    const auto& f = get("f");
    EXPECT_EQ(compose(UniformMorphism::identity(2), f).images(), f.images());
    EXPECT_EQ(compose(f, UniformMorphism::identity(3)).images(), f.images());
}

TEST(Compose, AlphabetMismatch) {
    try {
        compose(get("f"), get("g3"));  // g3 targets four letters, f reads three
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::AlphabetMismatch);
    }
}

TEST(Apply, HomomorphismLaw) {
    std::mt19937_64 rng(17);
    for (const char* name : {"f", "g1", "g2", "g3", "h1", "h2"}) {
        const auto& m = get(name);
        for (int trial = 0; trial < 100; ++trial) {
            const Word u = random_word(rng, 12, m.source_alphabet());
            const Word v = random_word(rng, 12, m.source_alphabet());
            const Word image = apply(m, u + v);
            EXPECT_EQ(image, apply(m, u) + apply(m, v));
            EXPECT_EQ(image.size(), m.width() * (u.size() + v.size()));
        }
    }
}

TEST(Compose, CompositionLaw) {
    std::mt19937_64 rng(19);
    const auto& g = get("g");
    const auto& h = get("h");
    for (int trial = 0; trial < 50; ++trial) {
        const Word w = random_word(rng, 8, 3);
        EXPECT_EQ(apply(g, w), apply(get("g1"), apply(get("g2"), apply(get("g3"), w))));
        EXPECT_EQ(apply(h, w), apply(get("h1"), apply(get("h2"), w)));
        const Word x = random_word(rng, 8, 4);
        EXPECT_EQ(apply(compose(get("g1"), get("g2")), x), apply(get("g1"), apply(get("g2"), x)));
    }
}

TEST(Verify, RegistryMorphismsPass) {
    for (const char* name : {"f", "g", "h"}) {
        const auto& m = get(name);
        const auto s = *target_spec(name);
        EXPECT_TRUE(check_distinct(m).empty()) << name;
        EXPECT_TRUE(check_inclusion(m).empty()) << name;
        EXPECT_TRUE(check_interchange(m).empty()) << name;
        const auto result = check_images_avoid(m, s, 5);
        EXPECT_TRUE(result.ok()) << name;
        ASSERT_EQ(result.words_checked_by_length.size(), 6u);
        EXPECT_EQ(result.words_checked_by_length[5], 30u) << name;
    }
}

TEST(Verify, SquarefreeCorpusSizes) {
    // 3, 6, 12, 18, 30 squarefree ternary words of lengths 1..5
    const std::vector<std::size_t> expected = {1, 3, 6, 12, 18, 30};
    for (std::size_t n = 0; n <= 5; ++n) {
        const auto words = squarefree_words(3, n);
        EXPECT_EQ(words.size(), expected[n]) << n;
        std::size_t brute = 0;
        std::vector<Symbol> w(n);
        std::size_t total = 1;
        for (std::size_t i = 0; i < n; ++i) total *= 3;
        for (std::size_t code = 0; code < total; ++code) {
            std::size_t c = code;
            for (std::size_t i = 0; i < n; ++i) {
                w[n - 1 - i] = static_cast<Symbol>(c % 3);
                c /= 3;
            }
            brute += oracle::brute_squarefree(w) ? 1 : 0;
        }
        EXPECT_EQ(words.size(), brute);
        EXPECT_TRUE(std::is_sorted(words.begin(), words.end()));
    }
}

TEST(Verify, Distinguishability) {
    const auto d = distinguishability(get("f"));
    EXPECT_EQ(d.prefix_length, 6u);
    EXPECT_EQ(d.suffix_length, 5u);
}

TEST(Verify, IdenticalImagesBreakInterchange) {
    const UniformMorphism m("twin", 2,
                            {Word::parse("0010111010"), Word::parse("0010111010"),
                             Word::parse("0011101010")});
    EXPECT_FALSE(check_distinct(m).empty());
    const auto ce = check_interchange(m);
    ASSERT_FALSE(ce.empty());
    for (const auto& c : ce) {
        EXPECT_NE(c.c, c.a);
        EXPECT_NE(c.c, c.b);
    }
}

TEST(Verify, CounterexamplesAreGenuine) {
    const UniformMorphism m("shifty", 2, {Word::parse("0101"), Word::parse("1010"),
                                          Word::parse("0110")});
    for (const auto& c : check_inclusion(m)) {
        const Word ab = m.image(c.a) + m.image(c.b);
        EXPECT_EQ(ab.factor(c.offset, m.width()), m.image(c.c));
        EXPECT_NE(c.offset, 0u);
        EXPECT_NE(c.offset, m.width());
    }
    EXPECT_FALSE(check_inclusion(m).empty());
    for (const auto& c : check_interchange(m)) {
        const Word mixed = m.image(c.a).prefix(c.split) +
                           m.image(c.b).factor(c.split, m.width() - c.split);
        EXPECT_EQ(mixed, m.image(c.c));
    }
}

TEST(Verify, SingleFlipsOfF) {
    const auto& f = get("f");
    const auto s = spec(3, "3+");
    std::vector<std::pair<int, std::size_t>> survivors;
    for (Symbol letter = 0; letter < 3; ++letter) {
        for (std::size_t i = 0; i < f.width(); ++i) {
            auto images = f.images();
            std::vector<Symbol> sym = symbols_of(images[letter]);
            sym[i] ^= 1;
            images[letter] = Word(sym, 2);
            const UniformMorphism mutant("mutant", 2, images);
            if (passes_all_checks(mutant, s)) survivors.emplace_back(letter, i);
        }
    }
    // every flip of f(0) is caught; two flips elsewhere give morphisms that
    // pass every check and really do avoid the spec
    const std::vector<std::pair<int, std::size_t>> expected = {{1, 1}, {2, 9}};
    EXPECT_EQ(survivors, expected);
    for (auto [letter, i] : survivors) {
        auto images = f.images();
        std::vector<Symbol> sym = symbols_of(images[letter]);
        sym[i] ^= 1;
        images[letter] = Word(sym, 2);
        const UniformMorphism mutant("mutant", 2, images);
        EXPECT_FALSE(find_violation(generate_avoiding(mutant, 2000), s));
    }
}

TEST(SquarefreeTernary, Examples) {
    EXPECT_EQ(squarefree_ternary(0).to_string(), "");
    EXPECT_EQ(squarefree_ternary(3).to_string(), "210");
    EXPECT_TRUE(oracle::brute_squarefree(symbols_of(squarefree_ternary(50))));
}

TEST(SquarefreeTernary, PrefixStable) {
    const Word big = squarefree_ternary(2000);
    for (std::size_t n : {0u, 1u, 7u, 100u, 1999u}) EXPECT_EQ(squarefree_ternary(n), big.prefix(n));
    // the generating rule is not uniform, so it is applied by hand
    std::vector<Symbol> image;
    const Word head = big.prefix(300);
    for (Symbol a : head.symbols()) {
        const char* rule = a == 2 ? "210" : a == 1 ? "20" : "1";
        for (const char* c = rule; *c; ++c) image.push_back(static_cast<Symbol>(*c - '0'));
    }
    image.resize(std::min(image.size(), big.size()));
    EXPECT_EQ(Word(image, 3), big.prefix(image.size()));
}

TEST(SquarefreeTernary, SquarefreeTo2000) {
    // a square uu occurs iff some p has a run of p matches w[j] == w[j + p]
    const Word w = squarefree_ternary(2000);
    for (std::size_t p = 1; 2 * p <= w.size(); ++p) {
        std::size_t run = 0;
        for (std::size_t j = 0; j + p < w.size(); ++j) {
            run = w[j] == w[j + p] ? run + 1 : 0;
            ASSERT_LT(run, p) << "square of period " << p << " ending near " << j;
        }
    }
    EXPECT_TRUE(oracle::brute_squarefree(symbols_of(w.prefix(400))));
}

TEST(GenerateAvoiding, Examples) {
    EXPECT_EQ(generate_avoiding("f", 10).to_string(), "0011101010");
    EXPECT_EQ(generate_avoiding("g", 0).to_string(), "");
    EXPECT_EQ(generate_avoiding("f", 17), apply(get("f"), squarefree_ternary(2)).prefix(17));
    try {
        generate_avoiding("nope", 3);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::UnknownMorphism);
    }
}

TEST(GenerateAvoiding, AvoidsTargetSpecs) {
    for (const char* name : {"f", "g", "h"}) {
        const std::size_t n = 10 * get(name).width();
        const Word w = generate_avoiding(name, n);
        ASSERT_EQ(w.size(), n);
        EXPECT_FALSE(find_violation(w, *target_spec(name))) << name;
    }
    EXPECT_FALSE(find_violation(generate_avoiding("h", 5000), spec(7, "7/3+")));
}

TEST(GenerateAvoiding, FAvoidsShortForbiddenWords) {
    const std::string w = generate_avoiding("f", 3000).to_string();
    for (const char* bad : {"0000", "1111", "0101010", "1010101"}) {
        EXPECT_EQ(w.find(bad), std::string::npos) << bad;
    }
}

TEST(Registry, EmbeddedTablesMatchDataFile) {
    const auto file = MorphismRegistry::load(std::string(REPLAB_DATA_DIR) + "/morphisms.json");
    const auto& builtin = MorphismRegistry::builtin();
    EXPECT_EQ(file.to_json_text(), builtin.to_json_text());
    for (const char* name : {"f", "g1", "g2", "g3", "h1", "h2", "g", "h"}) {
        EXPECT_EQ(file.find(name), builtin.find(name)) << name;
    }
    std::ifstream in(std::string(REPLAB_DATA_DIR) + "/morphisms.json");
    std::stringstream text;
    text << in.rdbuf();
    EXPECT_EQ(std::hash<std::string>{}(MorphismRegistry::from_json_text(text.str()).to_json_text()),
              std::hash<std::string>{}(builtin.to_json_text()));
}

TEST(Registry, ShapesOfBaseMorphisms) {
    struct Shape {
        const char* name;
        std::size_t width;
        int source, target;
    };
    for (const auto& s : {Shape{"f", 10, 3, 2}, Shape{"g1", 13, 8, 2}, Shape{"g2", 20, 4, 8},
                          Shape{"g3", 6, 3, 4}, Shape{"h1", 14, 5, 2}, Shape{"h2", 18, 3, 5}}) {
        const auto& m = get(s.name);
        EXPECT_EQ(m.width(), s.width) << s.name;
        EXPECT_EQ(m.source_alphabet(), s.source) << s.name;
        EXPECT_EQ(m.target_alphabet(), s.target) << s.name;
        EXPECT_TRUE(check_distinct(m).empty()) << s.name;
    }
}

TEST(Registry, Errors) {
    try {
        MorphismRegistry::builtin().find("zzz");
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::UnknownMorphism);
    }
    EXPECT_THROW(MorphismRegistry::from_json_text("{not json"), Error);
    EXPECT_THROW(MorphismRegistry::from_json_text(
                     R"([{"name":"x","width":2,"source_alphabet":2,"target_alphabet":2,"images":["01","1"]}])"),
                 Error);
    EXPECT_THROW(MorphismRegistry::load("/nonexistent/registry.json"), Error);
}

TEST(UniformMorphism, ShapeValidation) {
    EXPECT_THROW(UniformMorphism("e", 2, {}), Error);
    EXPECT_THROW(UniformMorphism("e", 2, {Word::parse("01"), Word::parse("011")}), Error);
    EXPECT_THROW(UniformMorphism("e", 2, {Word::parse("")}), Error);
    EXPECT_THROW(UniformMorphism("e", 2, {Word::parse("02", 3)}), Error);
}
