#include "replab/morphism.hpp"

#include <algorithm>

#include "replab/error.hpp"

namespace replab {

UniformMorphism::UniformMorphism(std::string name, int target_alphabet, std::vector<Word> images)
    : name_(std::move(name)), target_alphabet_(target_alphabet), images_(std::move(images)) {
    if (images_.empty() || images_.size() > static_cast<std::size_t>(kMaxAlphabet)) {
        throw Error(ErrorCode::InvalidMorphism,
                    name_ + ": needs between 1 and 10 letter images");
    }
    if (target_alphabet_ < 1 || target_alphabet_ > kMaxAlphabet) {
        throw Error(ErrorCode::InvalidMorphism, name_ + ": target alphabet outside [1, 10]");
    }
    width_ = images_.front().size();
    if (width_ == 0) throw Error(ErrorCode::InvalidMorphism, name_ + ": images must be nonempty");
    for (auto& img : images_) {
        if (img.size() != width_) {
            throw Error(ErrorCode::InvalidMorphism, name_ + ": images differ in length");
        }
        // re-validates every symbol against the target alphabet
        img = Word(std::vector<Symbol>(img.symbols().begin(), img.symbols().end()),
                   target_alphabet_);
    }
}

UniformMorphism UniformMorphism::identity(int alphabet) {
    std::vector<Word> images;
    for (int a = 0; a < alphabet; ++a) images.emplace_back(std::vector<Symbol>{Symbol(a)}, alphabet);
    return UniformMorphism("id" + std::to_string(alphabet), alphabet, std::move(images));
}

UniformMorphism UniformMorphism::renamed(std::string name) const {
    UniformMorphism out = *this;
    out.name_ = std::move(name);
    return out;
}

Word apply(const UniformMorphism& m, const Word& w) {
    std::vector<Symbol> out;
    out.reserve(w.size() * m.width());
    for (Symbol s : w.symbols()) {
        if (s >= m.source_alphabet()) {
            throw Error(ErrorCode::InvalidSymbol, "letter " + std::to_string(int{s}) +
                                                      " outside source alphabet of " + m.name());
        }
        const auto img = m.images()[s].symbols();
        out.insert(out.end(), img.begin(), img.end());
    }
    return Word(std::move(out), m.target_alphabet());
}

UniformMorphism compose(const UniformMorphism& outer, const UniformMorphism& inner) {
    if (inner.target_alphabet() > outer.source_alphabet()) {
        throw Error(ErrorCode::AlphabetMismatch,
                    "cannot compose " + outer.name() + " after " + inner.name() + ": target Σ" +
                        std::to_string(inner.target_alphabet()) + " exceeds source Σ" +
                        std::to_string(outer.source_alphabet()));
    }
    std::vector<Word> images;
    images.reserve(inner.images().size());
    for (const auto& img : inner.images()) images.push_back(apply(outer, img));
    return UniformMorphism(outer.name() + "o" + inner.name(), outer.target_alphabet(),
                           std::move(images));
}

std::vector<InclusionCounterexample> check_inclusion(const UniformMorphism& m) {
    std::vector<InclusionCounterexample> out;
    const std::size_t k = m.width();
    const int letters = m.source_alphabet();
    std::vector<Symbol> text(2 * k);
    for (int a = 0; a < letters; ++a) {
        for (int b = 0; b < letters; ++b) {
            const auto ia = m.images()[a].symbols();
            const auto ib = m.images()[b].symbols();
            std::copy(ia.begin(), ia.end(), text.begin());
            std::copy(ib.begin(), ib.end(), text.begin() + static_cast<std::ptrdiff_t>(k));
            for (int c = 0; c < letters; ++c) {
                const auto ic = m.images()[c].symbols();
                for (std::size_t offset = 1; offset < k; ++offset) {
                    if (std::equal(ic.begin(), ic.end(),
                                   text.begin() + static_cast<std::ptrdiff_t>(offset))) {
                        out.push_back({Symbol(a), Symbol(b), Symbol(c), offset});
                    }
                }
            }
        }
    }
    return out;
}

namespace {

std::size_t common_prefix(std::span<const Symbol> x, std::span<const Symbol> y) {
    return static_cast<std::size_t>(std::mismatch(x.begin(), x.end(), y.begin(), y.end()).first -
                                    x.begin());
}

std::size_t common_suffix(std::span<const Symbol> x, std::span<const Symbol> y) {
    return static_cast<std::size_t>(
        std::mismatch(x.rbegin(), x.rend(), y.rbegin(), y.rend()).first - x.rbegin());
}

}  // namespace

std::vector<InterchangeCounterexample> check_interchange(const UniformMorphism& m) {
    // m(c) = m(a)[0, i) m(b)[i, k) iff i <= lcp(m(a), m(c)) and
    // k - i <= lcs(m(b), m(c)).
    std::vector<InterchangeCounterexample> out;
    const std::size_t k = m.width();
    const int letters = m.source_alphabet();
    for (int a = 0; a < letters; ++a) {
        for (int b = 0; b < letters; ++b) {
            for (int c = 0; c < letters; ++c) {
                if (c == a || c == b) continue;
                const std::size_t pre = common_prefix(m.images()[a].symbols(), m.images()[c].symbols());
                const std::size_t suf = common_suffix(m.images()[b].symbols(), m.images()[c].symbols());
                for (std::size_t split = k - suf; split <= pre; ++split) {
                    out.push_back({Symbol(a), Symbol(b), Symbol(c), split});
                }
            }
        }
    }
    return out;
}

std::vector<DistinctnessCounterexample> check_distinct(const UniformMorphism& m) {
    std::vector<DistinctnessCounterexample> out;
    for (int a = 0; a < m.source_alphabet(); ++a) {
        for (int b = a + 1; b < m.source_alphabet(); ++b) {
            if (m.images()[a] == m.images()[b]) out.push_back({Symbol(a), Symbol(b)});
        }
    }
    return out;
}

Distinguishability distinguishability(const UniformMorphism& m) {
    std::size_t pre = 0, suf = 0;
    for (int a = 0; a < m.source_alphabet(); ++a) {
        for (int b = a + 1; b < m.source_alphabet(); ++b) {
            pre = std::max(pre, common_prefix(m.images()[a].symbols(), m.images()[b].symbols()));
            suf = std::max(suf, common_suffix(m.images()[a].symbols(), m.images()[b].symbols()));
        }
    }
    return {pre + 1, suf + 1};
}

std::vector<Word> squarefree_words(int alphabet, std::size_t length) {
    std::vector<Word> out;
    const AvoidanceSpec squares(1, ExponentThreshold::unbounded());
    IncrementalChecker checker(squares, alphabet);
    if (length == 0) {
        out.emplace_back(alphabet);
        return out;
    }
    // explicit-stack backtracking; next_letter[d] is the next letter to try at depth d
    std::vector<int> next_letter{0};
    while (!next_letter.empty()) {
        int& letter = next_letter.back();
        if (letter == alphabet) {
            next_letter.pop_back();
            if (!next_letter.empty()) checker.pop();
            continue;
        }
        const auto s = static_cast<Symbol>(letter++);
        if (checker.push(s)) {
            checker.pop();
            continue;
        }
        if (checker.size() == length) {
            out.emplace_back(std::vector<Symbol>(checker.word().begin(), checker.word().end()),
                             alphabet);
            checker.pop();
            continue;
        }
        next_letter.push_back(0);
    }
    return out;
}

ImageCheckResult check_images_avoid(const UniformMorphism& m, const AvoidanceSpec& spec,
                                    std::size_t source_len) {
    ImageCheckResult result;
    result.words_checked_by_length.assign(source_len + 1, 0);
    for (std::size_t len = 1; len <= source_len; ++len) {
        for (auto& w : squarefree_words(m.source_alphabet(), len)) {
            ++result.words_checked_by_length[len];
            if (auto v = find_violation(apply(m, w), spec)) {
                result.counterexamples.push_back({std::move(w), *v});
            }
        }
    }
    return result;
}

Word squarefree_ternary(std::size_t n) {
    static constexpr std::string_view kRules[3] = {"1", "20", "210"};
    std::string current = "2";
    while (current.size() < n) {
        std::string next;
        next.reserve(current.size() * 2 + 3);
        for (char c : current) next += kRules[c - '0'];
        current = std::move(next);
    }
    current.resize(n);
    return Word::parse(current, 3);
}

}  // namespace replab
